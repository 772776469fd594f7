#ifndef ALGMAT_CONSTRUCT_HPP
#define ALGMAT_CONSTRUCT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algmat/matroid.hpp"
#include "algmat/quotfield.hpp"

namespace algmat {

/// Classes of the partial derivatives of the presentation's generators.
QMatrix jacobian_matrix(const IdealPresentation& ideal, const QContext& ctx);
QMatrix jacobian_matrix(const IdealPresentation& ideal);

struct CertifyingMinor {
  Subset basis = 0;
  QElem value;
};

/// Jacobian J over k(P), a kernel-basis matrix A of J and the column matroid of A.
struct DifferentialRep {
  QContext ctx;
  QMatrix jacobian;
  QMatrix rep;
  Matroid diff_matroid;
  /// One nonzero maximal minor of A per basis of diff_matroid, in basis order.
  std::vector<CertifyingMinor> minors;
};

struct DiffOptions {
  SearchOptions search;
  /// Recompute from the reduced Groebner basis and require an equal matroid.
  bool check_reduced_gb = false;
};

/// Requires primality_asserted. Throws Internal if the reduced-GB
/// cross-check is requested and fails.
DifferentialRep differential_matroid(const IdealPresentation& ideal, const DiffOptions& opts = {});

/// Indices j with d f_i / d x_j nonzero in k(P).
std::vector<std::size_t> differential_support(const IdealPresentation& ideal, std::size_t gen_index);

struct SpecializationReport {
  std::vector<Scalar> point;
  bool on_variety = false;
  /// (row, column) entries of A whose denominator vanishes.
  std::vector<std::pair<std::size_t, std::size_t>> denominator_failures;
  /// Bases whose certifying minor has a vanishing numerator or denominator.
  std::vector<Subset> basis_minor_failures;
  std::optional<Matroid> matroid_at_point;
  std::optional<bool> matches;
  std::optional<FieldMatrix> specialized;
};

/// Never throws for a bad point; failures are recorded in the report.
SpecializationReport validate_specialization(const DifferentialRep& d, std::span<const Scalar> z,
                                             const SearchOptions& opts = {});
/// A evaluated at z. Throws NotOnVariety or DenominatorVanishes.
FieldMatrix specialize(const DifferentialRep& d, std::span<const Scalar> z);

struct Char0Representation {
  FieldMatrix matrix;
  SpecializationReport report;
  std::size_t point_index = 0;
  Matroid algebraic;
};

/// Tries the candidates in order: evaluates J at z, takes a kernel basis of J_z
/// over k and accepts the first z whose column matroid equals M(P).
/// Throws NoValidPoint when every candidate fails.
Char0Representation char0_representation(const IdealPresentation& ideal,
                                         const std::vector<std::vector<Scalar>>& points,
                                         const SearchOptions& opts = {});

/// x_i = f_i(u) with the u in `params` and the x in `target`.
struct Parameterization {
  Ring params;
  Ring target;
  std::vector<Polynomial> components;
  /// Throws RingMismatch / InvalidArgument on inconsistent inputs.
  Parameterization(Ring params, Ring target, std::vector<Polynomial> components);
};

/// <x_i - f_i(u)> ∩ k[x], marked prime.
IdealPresentation implicitize(const Parameterization& f, const GbLimits& limits = {});
std::vector<Scalar> evaluate_parameterization(const Parameterization& f, std::span<const Scalar> params);
/// Parameters are integers in [-bound, bound] over characteristic 0 fields and
/// uniform base-field elements otherwise, drawn from mt19937_64(seed).
std::vector<Scalar> sample_parameters(const Parameterization& f, std::uint64_t seed, std::uint64_t bound);
std::vector<Scalar> sample_point(const Parameterization& f, std::uint64_t seed, std::uint64_t bound);

struct FlockShift {
  IdealPresentation ideal;
  /// Internal fresh name -> original name.
  std::vector<std::pair<std::string, std::string>> name_map;
};

/// P_{a,b}: adjoin x_i^(p^a_i) - y_i^(p^b_i), eliminate the x, rename y back.
FlockShift frobenius_flock_shift(const IdealPresentation& ideal, const std::vector<std::uint64_t>& a,
                                 const std::vector<std::uint64_t>& b, const GbLimits& limits = {});

/// Sets independent in exactly one of the two matroids, minimal under inclusion.
std::vector<Subset> distinguishing_sets(const Matroid& a, const Matroid& b);

}  // namespace algmat

#endif
