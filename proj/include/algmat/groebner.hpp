#ifndef ALGMAT_GROEBNER_HPP
#define ALGMAT_GROEBNER_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "algmat/poly.hpp"

namespace algmat {

struct GbCounters {
  std::atomic<std::uint64_t> runs{0};
  std::atomic<std::uint64_t> cache_hits{0};
  std::atomic<std::uint64_t> pairs{0};
  std::atomic<std::uint64_t> reductions{0};
};

/// Caps that turn runaway computations into ResourceLimitExceeded.
struct GbLimits {
  std::uint64_t max_pairs = 100000;
  Exponent max_exponent = Exponent{1} << 20;
  std::size_t max_basis = 100000;
  GbCounters* counters = nullptr;
};

/// Reduced Groebner basis under a fixed order. Elements are monic and sorted
/// by ascending leading monomial.
class GroebnerBasis {
 public:
  const Ring& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  /// Leading monomial of each element under order().
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  bool is_unit_ideal() const { return elements_.size() == 1 && elements_[0].is_constant(); }
  bool is_zero_ideal() const { return elements_.empty(); }

  /// Fully reduced remainder of f; zero iff f lies in the ideal.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  struct Impl;

 private:
  GroebnerBasis(Ring ring, TermOrder order);
  Ring ring_;
  TermOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_;
  std::shared_ptr<const Impl> impl_;
  friend GroebnerBasis buchberger_impl(const Ring&, const std::vector<Polynomial>&, const TermOrder&, const GbLimits&);
};

/// Presented ideal <f_1..f_m>. An empty generator list is the zero ideal.
/// Copies share one Groebner-basis cache.
class IdealPresentation {
 public:
  IdealPresentation(Ring ring, std::vector<Polynomial> generators, bool primality_asserted = false);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool primality_asserted() const { return prime_; }
  IdealPresentation with_primality(bool prime) const;

  /// Reduced basis under `order`, computed at most once per order in the
  /// common case (concurrent first requests may both compute it).
  std::shared_ptr<const GroebnerBasis> groebner(const TermOrder& order, const GbLimits& limits = {}) const;

  std::string to_string() const;

 private:
  struct Cache;
  Ring ring_;
  std::vector<Polynomial> gens_;
  bool prime_;
  std::shared_ptr<Cache> cache_;
};

/// Uncached Buchberger run (normal selection strategy, both Buchberger
/// criteria, ties broken by pair index).
GroebnerBasis buchberger(const IdealPresentation& ideal, const TermOrder& order, const GbLimits& limits = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_membership(const Polynomial& f, const IdealPresentation& ideal, const TermOrder& order = TermOrder::grevlex(),
                      const GbLimits& limits = {});

/// I ∩ k[keep] presented in the ring of the kept variables (in ring order).
IdealPresentation elimination_ideal(const IdealPresentation& ideal, std::span<const std::size_t> keep,
                                    const TermOrder& base = TermOrder::grevlex(), const GbLimits& limits = {});
/// Same, selecting the kept variables by name.
IdealPresentation elimination_ideal(const IdealPresentation& ideal, const std::vector<std::string>& keep,
                                    const TermOrder& base = TermOrder::grevlex(), const GbLimits& limits = {});

/// Mutual membership of generators; rings must agree.
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const GbLimits& limits = {});

/// The ring with `new_vars` appended. Throws NameCollision.
Ring extend_ring(const Ring& ring, const std::vector<std::string>& new_vars);
/// Generators of `ideal` re-indexed into extend_ring(..) plus `extra`, which
/// must already live in that ring.
IdealPresentation ring_extend(const IdealPresentation& ideal, const std::vector<std::string>& new_vars,
                              const std::vector<Polynomial>& extra);

/// Buchberger criterion: every S-polynomial reduces to zero.
bool verify_groebner(const GroebnerBasis& basis);
/// Reducedness: monic, and no term divisible by another element's leading term.
bool is_reduced(const GroebnerBasis& basis);

}  // namespace algmat

#endif
