#include "algmat/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace algmat {

namespace {

using Terms = std::vector<Term>;

void bump(std::atomic<std::uint64_t> GbCounters::*field, const GbLimits& limits, std::uint64_t by = 1) {
  if (limits.counters) (limits.counters->*field).fetch_add(by, std::memory_order_relaxed);
}

Terms sorted_terms(const Polynomial& f, const MonomialOrder& ord) {
  Terms t(f.terms().begin(), f.terms().end());
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  return t;
}

void make_monic(Terms& f) {
  if (f.empty() || f[0].coeff.is_one()) return;
  const Scalar inv = f[0].coeff.inv();
  for (auto& t : f) t.coeff *= inv;
}

Monomial shifted(const Monomial& q, const Monomial& m, const GbLimits& limits) {
  Monomial r = q * m;
  if (r.max_exponent() > limits.max_exponent) {
    throw Error(ErrorKind::ResourceLimitExceeded,
                "exponent " + std::to_string(r.max_exponent()) + " exceeds cap " + std::to_string(limits.max_exponent));
  }
  return r;
}

// a[a0..] * (ca, qa) + b[b0..] * (cb, qb); null ca/qa mean 1.
Terms axpy(const Terms& a, std::size_t a0, const Scalar* ca, const Monomial* qa, const Terms& b, std::size_t b0,
           const Scalar& cb, const Monomial& qb, const MonomialOrder& ord, const GbLimits& limits) {
  Terms out;
  out.reserve(a.size() - a0 + b.size() - b0);
  auto a_term = [&](std::size_t i) -> Term {
    Term t = a[i];
    if (ca) t.coeff *= *ca;
    if (qa) t.mono = shifted(*qa, t.mono, limits);
    return t;
  };
  auto b_term = [&](std::size_t j) -> Term { return {b[j].coeff * cb, shifted(qb, b[j].mono, limits)}; };
  std::size_t i = a0, j = b0;
  std::optional<Term> ta, tb;
  if (i < a.size()) ta = a_term(i);
  if (j < b.size()) tb = b_term(j);
  while (ta || tb) {
    int c = !ta ? -1 : !tb ? 1 : ord.compare(ta->mono, tb->mono);
    if (c > 0) {
      out.push_back(std::move(*ta));
      ta.reset();
      if (++i < a.size()) ta = a_term(i);
    } else if (c < 0) {
      out.push_back(std::move(*tb));
      tb.reset();
      if (++j < b.size()) tb = b_term(j);
    } else {
      Scalar s = ta->coeff + tb->coeff;
      if (!s.is_zero()) out.push_back({std::move(s), std::move(ta->mono)});
      ta.reset();
      tb.reset();
      if (++i < a.size()) ta = a_term(i);
      if (++j < b.size()) tb = b_term(j);
    }
  }
  return out;
}

struct Reducer {
  const std::vector<Terms>& basis;
  const MonomialOrder& ord;
  const GbLimits& limits;

  int divisor_of(const Monomial& m, std::size_t skip) const {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k][0].mono.divides(m)) return static_cast<int>(k);
    }
    return -1;
  }

  // Normal form of f; with full == false only the leading term is reduced.
  Terms reduce(Terms f, bool full, std::size_t skip = static_cast<std::size_t>(-1)) const {
    Terms rem;
    std::size_t head = 0;
    std::uint64_t steps = 0;
    while (head < f.size()) {
      const Term& lt = f[head];
      const int k = divisor_of(lt.mono, skip);
      if (k < 0) {
        if (!full) {
          rem.insert(rem.end(), std::make_move_iterator(f.begin() + static_cast<std::ptrdiff_t>(head)),
                     std::make_move_iterator(f.end()));
          break;
        }
        rem.push_back(lt);
        ++head;
        continue;
      }
      const Terms& g = basis[static_cast<std::size_t>(k)];
      const Monomial q = g[0].mono.cofactor_in(lt.mono);
      const Scalar c = -lt.coeff;
      f = axpy(f, head + 1, nullptr, nullptr, g, 1, c, q, ord, limits);
      head = 0;
      ++steps;
    }
    bump(&GbCounters::reductions, limits, steps);
    return rem;
  }
};

Terms spoly(const Terms& f, const Terms& g, const MonomialOrder& ord, const GbLimits& limits) {
  const Monomial l = lcm(f[0].mono, g[0].mono);
  const Monomial qf = f[0].mono.cofactor_in(l);
  const Monomial qg = g[0].mono.cofactor_in(l);
  const Scalar one = f[0].coeff.field().one();
  return axpy(f, 1, &one, &qf, g, 1, -one, qg, ord, limits);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

struct GroebnerBasis::Impl {
  MonomialOrder ord;
  std::vector<Terms> polys;
};

GroebnerBasis::GroebnerBasis(Ring ring, TermOrder order) : ring_(std::move(ring)), order_(std::move(order)) {}

GroebnerBasis buchberger_impl(const Ring& ring, const std::vector<Polynomial>& gens, const TermOrder& order,
                              const GbLimits& limits) {
  MonomialOrder ord(order, ring.arity());
  bump(&GbCounters::runs, limits);

  std::vector<Terms> g;
  for (const auto& f : gens) {
    if (!(f.ring() == ring)) throw Error(ErrorKind::RingMismatch, "generator not in the ideal's ring");
    if (f.is_zero()) continue;
    Terms t = sorted_terms(f, ord);
    for (const auto& term : t) {
      if (term.mono.max_exponent() > limits.max_exponent) {
        throw Error(ErrorKind::ResourceLimitExceeded, "generator exponent exceeds cap");
      }
    }
    make_monic(t);
    g.push_back(std::move(t));
  }

  bool unit = false;
  for (const auto& t : g) unit = unit || t[0].mono.is_one();

  if (!unit) {
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> in_pending;
    auto add_pair = [&](std::size_t i, std::size_t j) {
      pending.push_back({i, j, lcm(g[i][0].mono, g[j][0].mono)});
      in_pending.insert({i, j});
    };
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

    std::uint64_t processed = 0;
    while (!pending.empty()) {
      // Normal strategy: smallest lcm first, ties by (i, j).
      std::size_t best = 0;
      for (std::size_t k = 1; k < pending.size(); ++k) {
        const int c = ord.compare(pending[k].lcm, pending[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pending[k].i, pending[k].j) < std::tie(pending[best].i, pending[best].j))) {
          best = k;
        }
      }
      Pair pr = std::move(pending[best]);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
      in_pending.erase({pr.i, pr.j});

      if (coprime(g[pr.i][0].mono, g[pr.j][0].mono)) continue;
      bool chain = false;
      for (std::size_t k = 0; k < g.size() && !chain; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!g[k][0].mono.divides(pr.lcm)) continue;
        auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        chain = !in_pending.count(key(pr.i, k)) && !in_pending.count(key(pr.j, k));
      }
      if (chain) continue;

      if (++processed > limits.max_pairs) {
        throw Error(ErrorKind::ResourceLimitExceeded,
                    "Groebner pair count exceeds cap " + std::to_string(limits.max_pairs));
      }
      bump(&GbCounters::pairs, limits);

      Reducer red{g, ord, limits};
      Terms h = red.reduce(spoly(g[pr.i], g[pr.j], ord, limits), true);
      if (h.empty()) continue;
      make_monic(h);
      if (h[0].mono.is_one()) {
        unit = true;
        break;
      }
      g.push_back(std::move(h));
      if (g.size() > limits.max_basis) {
        throw Error(ErrorKind::ResourceLimitExceeded, "Groebner basis size exceeds cap");
      }
      const std::size_t n = g.size() - 1;
      for (std::size_t i = 0; i < n; ++i) add_pair(i, n);
    }
  }

  std::vector<Terms> reduced;
  if (unit) {
    reduced.push_back({Term{ring.field().one(), Monomial(ring.arity())}});
  } else {
    // Minimal basis: drop elements whose leading monomial another one divides.
    std::vector<Terms> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < g.size() && !drop; ++j) {
        if (i == j) continue;
        const Monomial& mi = g[i][0].mono;
        const Monomial& mj = g[j][0].mono;
        if (mj.divides(mi) && (!(mi == mj) || j < i)) drop = true;
      }
      if (!drop) minimal.push_back(g[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Reducer red{minimal, ord, limits};
      Terms lead{minimal[i][0]};
      Terms tail(minimal[i].begin() + 1, minimal[i].end());
      Terms r = red.reduce(std::move(tail), true, i);
      lead.insert(lead.end(), r.begin(), r.end());
      minimal[i] = std::move(lead);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Terms& a, const Terms& b) { return ord.compare(a[0].mono, b[0].mono) < 0; });
    reduced = std::move(minimal);
  }

  GroebnerBasis gb(ring, order);
  auto impl = std::make_shared<GroebnerBasis::Impl>(GroebnerBasis::Impl{ord, {}});
  for (auto& t : reduced) {
    gb.leading_.push_back(t[0].mono);
    gb.elements_.push_back(Polynomial::from_terms(ring, t));
    impl->polys.push_back(std::move(t));
  }
  gb.impl_ = std::move(impl);
  return gb;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!(f.ring() == ring_)) throw Error(ErrorKind::RingMismatch, "polynomial not in the basis ring");
  GbLimits limits;
  limits.max_exponent = ~Exponent{0};
  Reducer red{impl_->polys, impl_->ord, limits};
  return Polynomial::from_terms(ring_, red.reduce(sorted_terms(f, impl_->ord), true));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) { return basis.normal_form(f); }

GroebnerBasis buchberger(const IdealPresentation& ideal, const TermOrder& order, const GbLimits& limits) {
  return buchberger_impl(ideal.ring(), ideal.generators(), order, limits);
}

// --- IdealPresentation ---------------------------------------------------

struct IdealPresentation::Cache {
  std::mutex mutex;
  std::map<std::string, std::shared_ptr<const GroebnerBasis>> by_order;
};

IdealPresentation::IdealPresentation(Ring ring, std::vector<Polynomial> generators, bool primality_asserted)
    : ring_(std::move(ring)), prime_(primality_asserted), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw Error(ErrorKind::RingMismatch, "generator not in the ideal's ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

IdealPresentation IdealPresentation::with_primality(bool prime) const {
  IdealPresentation copy(*this);
  copy.prime_ = prime;
  return copy;
}

std::shared_ptr<const GroebnerBasis> IdealPresentation::groebner(const TermOrder& order, const GbLimits& limits) const {
  const std::string key = order.to_string();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->by_order.find(key);
    if (it != cache_->by_order.end()) {
      bump(&GbCounters::cache_hits, limits);
      return it->second;
    }
  }
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(*this, order, limits));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->by_order.emplace(key, gb);
  return it->second;
}

std::string IdealPresentation::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ">";
}

bool ideal_membership(const Polynomial& f, const IdealPresentation& ideal, const TermOrder& order,
                      const GbLimits& limits) {
  return ideal.groebner(order, limits)->contains(f);
}

IdealPresentation elimination_ideal(const IdealPresentation& ideal, std::span<const std::size_t> keep,
                                    const TermOrder& base, const GbLimits& limits) {
  const Ring& ring = ideal.ring();
  std::vector<bool> kept(ring.arity(), false);
  for (auto k : keep) {
    if (k >= ring.arity()) throw Error(ErrorKind::IndexOutOfRange, "kept variable index out of range");
    kept[k] = true;
  }
  std::vector<std::size_t> eliminated;
  std::vector<std::string> names;
  std::vector<std::size_t> var_map(ring.arity(), 0);
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (kept[i]) {
      var_map[i] = names.size();
      names.push_back(ring.var(i));
    } else {
      eliminated.push_back(i);
    }
  }
  if (eliminated.empty()) return ideal;
  Ring sub(ring.field(), names);
  std::vector<Polynomial> out;
  if (eliminated.size() == ring.arity()) {
    // Only constants survive; a proper ideal meets k in zero.
    auto gb = ideal.groebner(base, limits);
    if (gb->is_unit_ideal()) out.push_back(Polynomial::constant(sub, ring.field().one()));
    return IdealPresentation(sub, std::move(out), ideal.primality_asserted());
  }
  auto gb = ideal.groebner(TermOrder::elimination(eliminated, base), limits);
  for (const auto& g : gb->elements()) {
    const auto s = support(g);
    if (std::all_of(s.begin(), s.end(), [&](std::size_t v) { return kept[v]; })) {
      out.push_back(change_ring(g, sub, var_map));
    }
  }
  return IdealPresentation(sub, std::move(out), ideal.primality_asserted());
}

IdealPresentation elimination_ideal(const IdealPresentation& ideal, const std::vector<std::string>& keep,
                                    const TermOrder& base, const GbLimits& limits) {
  std::vector<std::size_t> idx;
  for (const auto& name : keep) idx.push_back(ideal.ring().require_index(name));
  return elimination_ideal(ideal, idx, base, limits);
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const GbLimits& limits) {
  if (!(a.ring() == b.ring())) throw Error(ErrorKind::RingMismatch, "ideals live in different rings");
  auto ga = a.groebner(TermOrder::grevlex(), limits);
  auto gb = b.groebner(TermOrder::grevlex(), limits);
  for (const auto& f : b.generators())
    if (!ga->contains(f)) return false;
  for (const auto& f : a.generators())
    if (!gb->contains(f)) return false;
  return true;
}

Ring extend_ring(const Ring& ring, const std::vector<std::string>& new_vars) {
  std::vector<std::string> vars = ring.vars();
  for (const auto& v : new_vars) {
    if (std::find(vars.begin(), vars.end(), v) != vars.end()) {
      throw Error(ErrorKind::NameCollision, "variable '" + v + "' already exists");
    }
    vars.push_back(v);
  }
  return Ring(ring.field(), std::move(vars));
}

IdealPresentation ring_extend(const IdealPresentation& ideal, const std::vector<std::string>& new_vars,
                              const std::vector<Polynomial>& extra) {
  Ring big = extend_ring(ideal.ring(), new_vars);
  std::vector<std::size_t> map(ideal.ring().arity());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(change_ring(g, big, map));
  for (const auto& e : extra) {
    if (!(e.ring() == big)) throw Error(ErrorKind::RingMismatch, "extra generator not in the extended ring");
    gens.push_back(e);
  }
  return IdealPresentation(big, std::move(gens), ideal.primality_asserted());
}

bool verify_groebner(const GroebnerBasis& basis) {
  const auto& el = basis.elements();
  if (el.empty()) return true;
  MonomialOrder ord(basis.order(), basis.ring().arity());
  std::vector<Terms> polys;
  for (const auto& f : el) polys.push_back(sorted_terms(f, ord));
  GbLimits limits;
  limits.max_exponent = ~Exponent{0};
  Reducer red{polys, ord, limits};
  for (std::size_t j = 0; j < polys.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!red.reduce(spoly(polys[i], polys[j], ord, limits), true).empty()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& basis) {
  const auto& el = basis.elements();
  const auto& lm = basis.leading_monomials();
  for (std::size_t i = 0; i < el.size(); ++i) {
    // Leading coefficient must be one.
    bool monic = false;
    for (const auto& t : el[i].terms())
      if (t.mono == lm[i]) monic = t.coeff.is_one();
    if (!monic) return false;
    for (const auto& t : el[i].terms()) {
      for (std::size_t j = 0; j < el.size(); ++j) {
        if (j == i) continue;
        if (lm[j].divides(t.mono)) return false;
      }
    }
  }
  return true;
}

}  // namespace algmat
