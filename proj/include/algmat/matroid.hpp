#ifndef ALGMAT_MATROID_HPP
#define ALGMAT_MATROID_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algmat/groebner.hpp"
#include "algmat/quotfield.hpp"

namespace algmat {

/// Ground-set subset; bit i stands for element i.
using Subset = std::uint32_t;

inline constexpr std::size_t kDefaultGroundCap = 16;
inline constexpr std::size_t kMaxGround = 24;

std::vector<std::size_t> subset_indices(Subset s);
Subset subset_of(const std::vector<std::size_t>& indices);
/// Size first, then lexicographic on ascending index lists.
bool subset_less(Subset a, Subset b);

/// A matroid given by its bases, stored in canonical order.
class Matroid {
 public:
  /// Throws NotAMatroid when bases are empty or of mixed size.
  Matroid(std::vector<std::string> labels, std::vector<Subset> bases);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Subset>& bases() const { return bases_; }
  Subset ground() const { return size() == 32 ? ~Subset{0} : ((Subset{1} << size()) - 1); }

  bool is_basis(Subset s) const;
  bool is_independent(Subset s) const;
  std::size_t rank_of(Subset s) const;
  /// Minimal dependent sets in canonical order.
  std::vector<Subset> circuits() const;
  std::vector<std::size_t> loops() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Subset> bases_;
  std::size_t rank_ = 0;
};

struct SearchOptions {
  std::size_t max_ground = kDefaultGroundCap;
  unsigned jobs = 1;
  GbLimits limits;
  /// Order on each block of the elimination orders used by algebraic tests.
  TermOrder order = TermOrder::grevlex();
};

/// Builds a matroid from an independence oracle by growing independent sets
/// one element at a time; a set is tested only when all its maximal proper
/// subsets are independent. Throws NotAMatroid if maximal sets differ in size.
Matroid search_matroid(std::vector<std::string> labels, const std::function<bool(Subset)>& independent,
                       const SearchOptions& opts = {});

struct IndependenceReport {
  Subset subset = 0;
  bool independent = true;
  /// A member of P supported inside the subset (in the ring of P).
  std::optional<Polynomial> witness;
};

/// Requires primality_asserted (PrimalityNotAsserted otherwise).
IndependenceReport is_independent_algebraic(const IdealPresentation& ideal, Subset s, const GbLimits& limits = {},
                                            const TermOrder& order = TermOrder::grevlex());
Matroid algebraic_matroid(const IdealPresentation& ideal, const SearchOptions& opts = {});

/// Column matroid over the ground field; labels default to "1".."n".
Matroid linear_matroid(const FieldMatrix& m, std::vector<std::string> labels = {}, const SearchOptions& opts = {});
/// Column matroid over k(P); labels default to the ring variables.
Matroid linear_matroid(const QMatrix& m, std::vector<std::string> labels = {}, const SearchOptions& opts = {});

/// Labeled equality: same bases slot by slot. Throws GroundSetMismatch.
bool matroid_equal(const Matroid& a, const Matroid& b);
/// perm[i] is the element of b that element i of a maps to. Throws
/// GroundSetTooLarge above 12 elements.
std::optional<std::vector<std::size_t>> matroid_isomorphic(const Matroid& a, const Matroid& b);

/// Brute-force check of the independence axioms (n <= 10) and basis exchange.
bool check_axioms(const Matroid& m);
bool check_basis_exchange(const Matroid& m);

Matroid uniform_matroid(std::size_t r, std::size_t n, std::vector<std::string> labels = {});

}  // namespace algmat

#endif
