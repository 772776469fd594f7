#include "algmat/construct.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "algmat/parallel.hpp"

namespace algmat {

QMatrix jacobian_matrix(const IdealPresentation& ideal, const QContext& ctx) {
  const auto& gens = ideal.generators();
  const std::size_t n = ideal.ring().arity();
  QMatrix j(ctx, gens.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) j.at(i, k) = QElem(ctx, partial_derivative(gens[i], k));
  return j;
}

QMatrix jacobian_matrix(const IdealPresentation& ideal) { return jacobian_matrix(ideal, QContext(ideal)); }

namespace {

DifferentialRep build_rep(const IdealPresentation& presented, const QContext& ctx, const SearchOptions& opts) {
  QMatrix j = jacobian_matrix(presented, ctx);
  QMatrix a = kernel_basis(j);
  Matroid m = linear_matroid(a, ctx.ring().vars(), opts);
  std::vector<std::size_t> rows(a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<std::optional<QElem>> vals(m.bases().size());
  parallel_for(vals.size(), opts.jobs, [&](std::size_t i) {
    const auto cols = subset_indices(m.bases()[i]);
    vals[i] = minor(a, rows, cols);
  });
  std::vector<CertifyingMinor> minors;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i]->is_zero()) throw Error(ErrorKind::Internal, "basis with a vanishing maximal minor");
    minors.push_back(CertifyingMinor{m.bases()[i], *vals[i]});
  }
  return DifferentialRep{ctx, std::move(j), std::move(a), std::move(m), std::move(minors)};
}

}  // namespace

DifferentialRep differential_matroid(const IdealPresentation& ideal, const DiffOptions& opts) {
  if (!ideal.primality_asserted())
    throw Error(ErrorKind::PrimalityNotAsserted, "the differential matroid needs an ideal asserted prime");
  QContext ctx(ideal, opts.search.limits);
  DifferentialRep rep = build_rep(ideal, ctx, opts.search);
  if (opts.check_reduced_gb) {
    IdealPresentation gb_presented(ideal.ring(), ctx.basis().elements(), true);
    DifferentialRep other = build_rep(gb_presented, ctx, opts.search);
    if (!matroid_equal(rep.diff_matroid, other.diff_matroid))
      throw Error(ErrorKind::Internal, "differential matroid depends on the generating set");
  }
  return rep;
}

std::vector<std::size_t> differential_support(const IdealPresentation& ideal, std::size_t gen_index) {
  if (gen_index >= ideal.generators().size())
    throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(gen_index) + " out of range");
  QContext ctx(ideal);
  const Polynomial& f = ideal.generators()[gen_index];
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ideal.ring().arity(); ++k)
    if (!ctx.reduce(partial_derivative(f, k)).is_zero()) out.push_back(k);
  return out;
}

namespace {

bool on_variety(const IdealPresentation& ideal, std::span<const Scalar> z) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Polynomial& g) { return evaluate(g, z).is_zero(); });
}

void check_point(const Ring& ring, std::span<const Scalar> z) {
  if (z.size() != ring.arity())
    throw Error(ErrorKind::InvalidArgument,
                "point has " + std::to_string(z.size()) + " coordinates, expected " + std::to_string(ring.arity()));
  for (const auto& s : z)
    if (!(s.field() == ring.field())) throw Error(ErrorKind::FieldMismatch, "point coordinate from another field");
}

}  // namespace

SpecializationReport validate_specialization(const DifferentialRep& d, std::span<const Scalar> z,
                                             const SearchOptions& opts) {
  check_point(d.ctx.ring(), z);
  SpecializationReport rep;
  rep.point.assign(z.begin(), z.end());
  rep.on_variety = on_variety(d.ctx.ideal(), z);
  for (std::size_t i = 0; i < d.rep.rows(); ++i)
    for (std::size_t j = 0; j < d.rep.cols(); ++j)
      if (evaluate(d.rep.at(i, j).den(), z).is_zero()) rep.denominator_failures.emplace_back(i, j);
  for (const auto& m : d.minors)
    if (evaluate(m.value.num(), z).is_zero() || evaluate(m.value.den(), z).is_zero())
      rep.basis_minor_failures.push_back(m.basis);
  if (rep.on_variety && rep.denominator_failures.empty() && rep.basis_minor_failures.empty()) {
    FieldMatrix az = evaluate_matrix(d.rep, z);
    rep.matroid_at_point = linear_matroid(az, d.ctx.ring().vars(), opts);
    rep.matches = matroid_equal(*rep.matroid_at_point, d.diff_matroid);
    rep.specialized = std::move(az);
  }
  return rep;
}

FieldMatrix specialize(const DifferentialRep& d, std::span<const Scalar> z) {
  check_point(d.ctx.ring(), z);
  if (!on_variety(d.ctx.ideal(), z)) throw Error(ErrorKind::NotOnVariety, "point does not lie on V(P)");
  return evaluate_matrix(d.rep, z);
}

Char0Representation char0_representation(const IdealPresentation& ideal,
                                         const std::vector<std::vector<Scalar>>& points, const SearchOptions& opts) {
  if (ideal.ring().field().characteristic() != 0)
    throw Error(ErrorKind::InvalidField, "char0_representation needs a characteristic-zero field");
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "no candidate points");
  const Matroid alg = algebraic_matroid(ideal, opts);
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.arity();
  const auto& gens = ideal.generators();
  std::vector<std::vector<Polynomial>> grad;
  for (const auto& g : gens) grad.push_back(gradient(g));
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const auto& z = points[idx];
    check_point(ring, z);
    if (!on_variety(ideal, z)) continue;
    FieldMatrix jz(ring.field(), gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t k = 0; k < n; ++k) jz.rows[i][k] = evaluate(grad[i][k], z);
    FieldMatrix az = kernel_basis(jz);
    Matroid m = linear_matroid(az, ring.vars(), opts);
    if (!matroid_equal(m, alg)) continue;
    SpecializationReport rep;
    rep.point = z;
    rep.on_variety = true;
    rep.matroid_at_point = m;
    rep.matches = true;
    rep.specialized = az;
    return Char0Representation{std::move(az), std::move(rep), idx, alg};
  }
  throw Error(ErrorKind::NoValidPoint,
              "none of the " + std::to_string(points.size()) + " candidate points yields the algebraic matroid");
}

Parameterization::Parameterization(Ring p, Ring t, std::vector<Polynomial> c)
    : params(std::move(p)), target(std::move(t)), components(std::move(c)) {
  if (!(params.field() == target.field())) throw Error(ErrorKind::FieldMismatch, "parameter and target fields differ");
  if (components.size() != target.arity())
    throw Error(ErrorKind::InvalidArgument, "parameterization needs one component per target variable");
  for (const auto& f : components)
    if (!(f.ring() == params)) throw Error(ErrorKind::RingMismatch, "component outside the parameter ring");
  for (const auto& v : params.vars())
    if (target.index_of(v)) throw Error(ErrorKind::NameCollision, "parameter '" + v + "' is also a target variable");
}

IdealPresentation implicitize(const Parameterization& f, const GbLimits& limits) {
  std::vector<std::string> vars = f.target.vars();
  vars.insert(vars.end(), f.params.vars().begin(), f.params.vars().end());
  Ring big(f.target.field(), vars);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < f.components.size(); ++i)
    gens.push_back(Polynomial::variable(big, i) - rename_into(f.components[i], big));
  std::vector<std::size_t> keep(f.target.arity());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  IdealPresentation e = elimination_ideal(IdealPresentation(big, gens), keep, TermOrder::grevlex(), limits);
  return e.with_primality(true);
}

std::vector<Scalar> evaluate_parameterization(const Parameterization& f, std::span<const Scalar> params) {
  check_point(f.params, params);
  std::vector<Scalar> out;
  for (const auto& c : f.components) out.push_back(evaluate(c, params));
  return out;
}

std::vector<Scalar> sample_parameters(const Parameterization& f, std::uint64_t seed, std::uint64_t bound) {
  std::mt19937_64 rng(seed);
  const Field& k = f.params.field();
  std::vector<Scalar> u;
  for (std::size_t i = 0; i < f.params.arity(); ++i) {
    if (k.characteristic() == 0) {
      const std::uint64_t span = 2 * bound + 1;
      const long long v = static_cast<long long>(rng() % span) - static_cast<long long>(bound);
      u.push_back(k.from_int(v));
    } else {
      const Field base = k.base();
      std::vector<Scalar> coords;
      const std::size_t deg = k.is_extension() ? k.minimal_poly().size() - 1 : 1;
      for (std::size_t c = 0; c < deg; ++c)
        coords.push_back(base.from_int(static_cast<long long>(rng() % k.characteristic())));
      u.push_back(k.is_extension() ? k.from_coordinates(coords) : coords[0]);
    }
  }
  return u;
}

std::vector<Scalar> sample_point(const Parameterization& f, std::uint64_t seed, std::uint64_t bound) {
  return evaluate_parameterization(f, sample_parameters(f, seed, bound));
}

FlockShift frobenius_flock_shift(const IdealPresentation& ideal, const std::vector<std::uint64_t>& a,
                                 const std::vector<std::uint64_t>& b, const GbLimits& limits) {
  const Ring& ring = ideal.ring();
  const std::uint64_t p = ring.field().characteristic();
  if (p == 0) throw Error(ErrorKind::CharZeroField, "Frobenius shifts need positive characteristic");
  const std::size_t n = ring.arity();
  if (a.size() != n || b.size() != n)
    throw Error(ErrorKind::InvalidArgument, "shift vectors need " + std::to_string(n) + " entries");
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0 && b[i] != 0)
      throw Error(ErrorKind::ShiftPairNonzero, "a and b are both nonzero at position " + std::to_string(i + 1));
  auto frob = [&](std::uint64_t e) {
    std::uint64_t q = 1;
    for (std::uint64_t k = 0; k < e; ++k) {
      if (q > limits.max_exponent / p) throw Error(ErrorKind::ResourceLimitExceeded, "Frobenius exponent too large");
      q *= p;
    }
    return q;
  };
  std::vector<std::string> fresh;
  for (const auto& v : ring.vars()) {
    std::string name = "y_" + v;
    while (ring.index_of(name) || std::find(fresh.begin(), fresh.end(), name) != fresh.end()) name = "_" + name;
    fresh.push_back(name);
  }
  Ring big = extend_ring(ring, fresh);
  std::vector<Polynomial> extra;
  for (std::size_t i = 0; i < n; ++i)
    extra.push_back(Polynomial::variable(big, i).pow(frob(a[i])) - Polynomial::variable(big, n + i).pow(frob(b[i])));
  IdealPresentation hat = ring_extend(ideal, fresh, extra);
  std::vector<std::size_t> keep(n);
  for (std::size_t i = 0; i < n; ++i) keep[i] = n + i;
  IdealPresentation e = elimination_ideal(hat, keep, TermOrder::grevlex(), limits);
  std::vector<Polynomial> renamed;
  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  for (const auto& g : e.generators()) renamed.push_back(change_ring(g, ring, identity));
  FlockShift out{IdealPresentation(ring, renamed, ideal.primality_asserted()), {}};
  for (std::size_t i = 0; i < n; ++i) out.name_map.emplace_back(fresh[i], ring.var(i));
  return out;
}

std::vector<Subset> distinguishing_sets(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::GroundSetMismatch, "ground sets differ in size");
  const std::size_t n = a.size();
  std::vector<Subset> diff;
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    const Subset t = static_cast<Subset>(s);
    if (a.is_independent(t) != b.is_independent(t)) diff.push_back(t);
  }
  std::vector<Subset> minimal;
  for (Subset s : diff) {
    const bool has_smaller = std::any_of(diff.begin(), diff.end(), [s](Subset t) { return t != s && (t & ~s) == 0; });
    if (!has_smaller) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), subset_less);
  return minimal;
}

}  // namespace algmat
