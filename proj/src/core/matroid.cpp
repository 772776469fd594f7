#include "algmat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

#include "algmat/parallel.hpp"

namespace algmat {

std::vector<std::size_t> subset_indices(Subset s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

Subset subset_of(const std::vector<std::size_t>& indices) {
  Subset s = 0;
  for (auto i : indices) {
    if (i >= 32) throw Error(ErrorKind::IndexOutOfRange, "ground-set index out of range");
    s |= Subset{1} << i;
  }
  return s;
}

bool subset_less(Subset a, Subset b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Lexicographic on ascending index lists: the first differing element
  // belongs to the smaller set.
  const Subset diff = a ^ b;
  if (!diff) return false;
  const Subset low = diff & (~diff + 1);
  return (a & low) != 0;
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(std::to_string(i + 1));
  return l;
}

void check_ground(std::size_t n, std::size_t cap) {
  if (n > cap || n > kMaxGround)
    throw Error(ErrorKind::GroundSetTooLarge,
                "ground set of " + std::to_string(n) + " elements exceeds cap " + std::to_string(std::min(cap, kMaxGround)));
}

}  // namespace

Matroid::Matroid(std::vector<std::string> labels, std::vector<Subset> bases) : labels_(std::move(labels)) {
  if (labels_.size() > 32) throw Error(ErrorKind::GroundSetTooLarge, "ground sets are limited to 32 elements");
  if (bases.empty()) throw Error(ErrorKind::NotAMatroid, "a matroid needs at least one basis");
  std::sort(bases.begin(), bases.end(), subset_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  rank_ = static_cast<std::size_t>(std::popcount(bases[0]));
  for (Subset b : bases) {
    if (static_cast<std::size_t>(std::popcount(b)) != rank_)
      throw Error(ErrorKind::NotAMatroid, "bases of different sizes");
    if (b & ~ground()) throw Error(ErrorKind::IndexOutOfRange, "basis element outside the ground set");
  }
  bases_ = std::move(bases);
}

bool Matroid::is_basis(Subset s) const { return std::binary_search(bases_.begin(), bases_.end(), s, subset_less); }

bool Matroid::is_independent(Subset s) const {
  return std::any_of(bases_.begin(), bases_.end(), [s](Subset b) { return (s & ~b) == 0; });
}

std::size_t Matroid::rank_of(Subset s) const {
  int best = 0;
  for (Subset b : bases_) best = std::max(best, std::popcount(s & b));
  return static_cast<std::size_t>(best);
}

std::vector<Subset> Matroid::circuits() const {
  const std::size_t n = size();
  if (n > kMaxGround) throw Error(ErrorKind::GroundSetTooLarge, "circuit enumeration limited to 24 elements");
  std::vector<char> indep(std::size_t{1} << n, 0);
  for (Subset b : bases_) indep[b] = 1;
  // Downward closure, processing larger sets first.
  for (Subset s = static_cast<Subset>((std::size_t{1} << n) - 1);; --s) {
    if (indep[s])
      for (Subset t = s; t; t &= t - 1) indep[s & ~(t & (~t + 1))] = 1;
    if (s == 0) break;
  }
  std::vector<Subset> out;
  for (std::size_t s = 1; s < (std::size_t{1} << n); ++s) {
    if (indep[s]) continue;
    bool minimal = true;
    for (Subset t = static_cast<Subset>(s); t && minimal; t &= t - 1)
      if (!indep[s & ~(t & (~t + 1))]) minimal = false;
    if (minimal) out.push_back(static_cast<Subset>(s));
  }
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

std::vector<std::size_t> Matroid::loops() const {
  std::vector<std::size_t> out;
  Subset covered = 0;
  for (Subset b : bases_) covered |= b;
  for (std::size_t i = 0; i < size(); ++i)
    if (!(covered >> i & 1)) out.push_back(i);
  return out;
}

Matroid search_matroid(std::vector<std::string> labels, const std::function<bool(Subset)>& independent,
                       const SearchOptions& opts) {
  const std::size_t n = labels.size();
  check_ground(n, opts.max_ground);
  std::vector<Subset> level{0};
  std::vector<Subset> maximal;
  for (std::size_t k = 0; k < n; ++k) {
    std::unordered_set<Subset> current(level.begin(), level.end());
    std::vector<Subset> candidates;
    for (Subset s : level) {
      const std::size_t start = s ? static_cast<std::size_t>(32 - std::countl_zero(s)) : 0;
      for (std::size_t x = start; x < n; ++x) {
        const Subset t = s | (Subset{1} << x);
        bool ok = true;
        for (Subset u = s; u && ok; u &= u - 1) ok = current.count(t & ~(u & (~u + 1))) > 0;
        if (ok) candidates.push_back(t);
      }
    }
    std::sort(candidates.begin(), candidates.end(), subset_less);
    std::vector<char> result(candidates.size(), 0);
    parallel_for(candidates.size(), opts.jobs, [&](std::size_t i) { result[i] = independent(candidates[i]) ? 1 : 0; });
    std::vector<Subset> next;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (result[i]) next.push_back(candidates[i]);
    for (Subset s : level) {
      const bool extends = std::any_of(next.begin(), next.end(), [s](Subset t) { return (s & ~t) == 0; });
      if (!extends) maximal.push_back(s);
    }
    if (next.empty()) {
      level.clear();
      break;
    }
    level = std::move(next);
  }
  maximal.insert(maximal.end(), level.begin(), level.end());
  for (Subset s : maximal)
    if (std::popcount(s) != std::popcount(maximal.back()))
      throw Error(ErrorKind::NotAMatroid, "maximal independent sets have different sizes");
  return Matroid(std::move(labels), std::move(maximal));
}

IndependenceReport is_independent_algebraic(const IdealPresentation& ideal, Subset s, const GbLimits& limits,
                                            const TermOrder& order) {
  if (!ideal.primality_asserted())
    throw Error(ErrorKind::PrimalityNotAsserted, "algebraic independence needs an ideal asserted prime");
  const auto keep = subset_indices(s);
  for (auto i : keep)
    if (i >= ideal.ring().arity()) throw Error(ErrorKind::IndexOutOfRange, "subset element outside the ring");
  IndependenceReport rep;
  rep.subset = s;
  const IdealPresentation elim = elimination_ideal(ideal, keep, order, limits);
  if (elim.generators().empty()) return rep;
  rep.independent = false;
  const Polynomial* best = nullptr;
  std::size_t best_support = 0;
  for (const auto& g : elim.generators()) {
    const std::size_t sz = support(g).size();
    if (!best || sz < best_support) {
      best = &g;
      best_support = sz;
    }
  }
  rep.witness = rename_into(*best, ideal.ring());
  return rep;
}

Matroid algebraic_matroid(const IdealPresentation& ideal, const SearchOptions& opts) {
  if (!ideal.primality_asserted())
    throw Error(ErrorKind::PrimalityNotAsserted, "the algebraic matroid needs an ideal asserted prime");
  check_ground(ideal.ring().arity(), opts.max_ground);
  return search_matroid(
      ideal.ring().vars(), [&](Subset s) { return is_independent_algebraic(ideal, s, opts.limits, opts.order).independent; }, opts);
}

Matroid linear_matroid(const FieldMatrix& m, std::vector<std::string> labels, const SearchOptions& opts) {
  if (labels.empty()) labels = default_labels(m.cols);
  if (labels.size() != m.cols) throw Error(ErrorKind::InvalidArgument, "label count differs from column count");
  return search_matroid(
      std::move(labels),
      [&](Subset s) {
        const auto idx = subset_indices(s);
        return rank(m.select_columns(idx)) == idx.size();
      },
      opts);
}

Matroid linear_matroid(const QMatrix& m, std::vector<std::string> labels, const SearchOptions& opts) {
  if (labels.empty()) {
    labels = m.cols() == m.context().ring().arity() ? m.context().ring().vars() : default_labels(m.cols());
  }
  if (labels.size() != m.cols()) throw Error(ErrorKind::InvalidArgument, "label count differs from column count");
  return search_matroid(
      std::move(labels),
      [&](Subset s) {
        const auto idx = subset_indices(s);
        return rank(m.select_columns(idx)) == idx.size();
      },
      opts);
}

bool matroid_equal(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::GroundSetMismatch, "ground sets of sizes " + std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()));
  return a.bases() == b.bases();
}

namespace {

struct Signatures {
  std::vector<std::vector<std::size_t>> element;  // per element: bases count, then circuit counts by size
  std::vector<std::vector<std::size_t>> pair;     // bases containing both
};

Signatures signatures(const Matroid& m) {
  const std::size_t n = m.size();
  Signatures s;
  s.element.assign(n, std::vector<std::size_t>(n + 2, 0));
  s.pair.assign(n, std::vector<std::size_t>(n, 0));
  for (Subset b : m.bases()) {
    const auto idx = subset_indices(b);
    for (auto i : idx) {
      ++s.element[i][0];
      for (auto j : idx) ++s.pair[i][j];
    }
  }
  for (Subset c : m.circuits())
    for (auto i : subset_indices(c)) ++s.element[i][1 + static_cast<std::size_t>(std::popcount(c))];
  return s;
}

}  // namespace

std::optional<std::vector<std::size_t>> matroid_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() > 12 || b.size() > 12)
    throw Error(ErrorKind::GroundSetTooLarge, "isomorphism search is limited to 12 elements");
  if (a.size() != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size()) return std::nullopt;
  const std::size_t n = a.size();
  const Signatures sa = signatures(a), sb = signatures(b);
  {
    auto ea = sa.element, eb = sb.element;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    if (ea != eb) return std::nullopt;
  }
  std::vector<std::size_t> perm(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) {
      for (Subset basis : a.bases()) {
        Subset img = 0;
        for (auto e : subset_indices(basis)) img |= Subset{1} << perm[e];
        if (!b.is_basis(img)) return false;
      }
      return true;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sa.element[i] != sb.element[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = sa.pair[i][j] == sb.pair[c][perm[j]];
      if (!ok) continue;
      used[c] = true;
      perm[i] = c;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return perm;
}

bool check_basis_exchange(const Matroid& m) {
  for (Subset b1 : m.bases())
    for (Subset b2 : m.bases()) {
      if (b1 == b2) continue;
      for (auto x : subset_indices(b1 & ~b2)) {
        bool found = false;
        for (auto y : subset_indices(b2 & ~b1)) {
          if (m.is_basis((b1 & ~(Subset{1} << x)) | (Subset{1} << y))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  return true;
}

bool check_axioms(const Matroid& m) {
  if (!check_basis_exchange(m)) return false;
  const std::size_t n = m.size();
  if (n > 10) return true;
  const std::size_t total = std::size_t{1} << n;
  std::vector<Subset> indep;
  for (std::size_t s = 0; s < total; ++s)
    if (m.is_independent(static_cast<Subset>(s))) indep.push_back(static_cast<Subset>(s));
  if (indep.empty() || indep[0] != 0) return false;
  std::unordered_set<Subset> set(indep.begin(), indep.end());
  for (Subset s : indep)
    for (Subset t = s; t; t &= t - 1)
      if (!set.count(s & ~(t & (~t + 1)))) return false;
  for (Subset i : indep)
    for (Subset j : indep) {
      if (std::popcount(i) >= std::popcount(j)) continue;
      bool aug = false;
      for (auto x : subset_indices(j & ~i))
        if (set.count(i | (Subset{1} << x))) {
          aug = true;
          break;
        }
      if (!aug) return false;
    }
  return true;
}

Matroid uniform_matroid(std::size_t r, std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(n);
  if (r > n || n > kMaxGround) throw Error(ErrorKind::InvalidArgument, "invalid uniform matroid parameters");
  std::vector<Subset> bases;
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s)
    if (static_cast<std::size_t>(std::popcount(static_cast<Subset>(s))) == r) bases.push_back(static_cast<Subset>(s));
  return Matroid(std::move(labels), std::move(bases));
}

}  // namespace algmat
