#ifndef ALGMAT_ARITH_HPP
#define ALGMAT_ARITH_HPP

// Exact scalars over QQ, GF(p) and simple extensions base[t]/(m(t)).

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "algmat/error.hpp"

namespace algmat {

class Scalar;

namespace detail {
struct FieldDesc;
}

/// Largest extension degree supported over a prime field.
inline constexpr std::size_t kMaxFiniteDegree = 6;

/// Handle to an interned, immutable field description. Two handles compare
/// equal exactly when they describe the same field literal.
class Field {
 public:
  /// The rationals.
  Field();

  static Field rationals();
  /// GF(p); p is checked for primality by trial division.
  static Field prime(std::uint64_t p);
  /// base[generator]/(minimal_poly). Coefficients run from the constant term
  /// up to the (unit) leading coefficient, all in `base`.
  static Field extension(const Field& base, const std::string& generator,
                         const std::vector<Scalar>& minimal_poly);

  std::uint64_t characteristic() const;
  /// Degree over the prime field.
  std::size_t degree() const;
  bool is_extension() const;
  /// The field this one extends; the field itself when it is not an extension.
  Field base() const;
  /// Name of the adjoined generator, empty for QQ and GF(p).
  const std::string& generator() const;
  /// Monic minimal polynomial over base(), constant term first. Empty unless
  /// is_extension().
  const std::vector<Scalar>& minimal_poly() const;
  /// Canonical literal, e.g. `GF(5)[t]/(t^2 - 2)`.
  const std::string& to_string() const;
  /// Number of elements, 0 for infinite fields or when it exceeds 2^64.
  std::uint64_t size() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_integer(const mpz_class& v) const;
  /// Throws DivisionByZero when the denominator vanishes in the characteristic.
  Scalar from_rational(const mpq_class& v) const;
  /// Class of the generator; throws InvalidField for non-extensions.
  Scalar gen() const;
  /// Element with the given coordinates over base(); missing entries are zero.
  Scalar from_coordinates(const std::vector<Scalar>& coords) const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }

 private:
  explicit Field(const detail::FieldDesc* d) : d_(d) {}
  const detail::FieldDesc* d_;
  friend class Scalar;
  friend Scalar frobenius_power(const Scalar&, std::uint64_t);
};

/// Canonical field element. Equality is representational.
class Scalar {
 public:
  /// Zero of QQ.
  Scalar();

  Field field() const { return Field(f_); }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(std::uint64_t e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Throws FieldMismatch when the fields differ.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Coordinates over field().base(); a single entry for non-extensions.
  std::vector<Scalar> coordinates() const;
  /// True when the element lies in the base field (all higher coordinates 0).
  bool in_base_field() const;
  /// Rational value; requires QQ.
  const mpq_class& rational() const;
  /// Residue in [0, p); requires GF(p).
  std::uint64_t residue() const;

  /// Parse-compatible text. GF(p) residues print in the symmetric range.
  std::string to_string() const;
  /// True when to_string() is a single signed term (safe as a coefficient
  /// without parentheses).
  bool prints_as_single_term() const;

 private:
  explicit Scalar(const detail::FieldDesc* f) : f_(f) {}
  void require_same(const Scalar& b) const;

  const detail::FieldDesc* f_;
  std::array<std::uint32_t, kMaxFiniteDegree> r_{};  // char p coordinates
  std::vector<mpq_class> q_;                         // char 0 coordinates

  friend class Field;
  friend Scalar frobenius_power(const Scalar&, std::uint64_t);
};

/// a^(p^e) in characteristic p. Throws CharZeroField over QQ.
Scalar frobenius_power(const Scalar& a, std::uint64_t e);

bool is_prime(std::uint64_t n);

/// Irreducibility of a monic polynomial over GF(p), coefficients constant
/// term first. Requires 1 <= deg <= 6 and p <= 2^16.
bool is_irreducible(std::span<const std::uint64_t> coeffs, std::uint64_t p);

}  // namespace algmat

#endif
