#ifndef ALGMAT_POLY_HPP
#define ALGMAT_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algmat/arith.hpp"

namespace algmat {

/// Polynomial ring k[x_1..x_n]; the variable order fixes index <-> name.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> vars);

  const Field& field() const { return d_->field; }
  std::size_t arity() const { return d_->vars.size(); }
  const std::vector<std::string>& vars() const { return d_->vars; }
  const std::string& var(std::size_t i) const { return d_->vars.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t require_index(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.d_ == b.d_ || (a.d_->field == b.d_->field && a.d_->vars == b.d_->vars);
  }

 private:
  struct Desc {
    Field field;
    std::vector<std::string> vars;
  };
  std::shared_ptr<const Desc> d_;
};

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : e_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> e);

  std::size_t arity() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  std::span<const Exponent> exponents() const { return e_; }
  std::uint64_t degree() const { return deg_; }
  Exponent max_exponent() const;
  bool is_one() const { return deg_ == 0; }
  bool divides(const Monomial& m) const;
  /// m / *this; requires divides(m).
  Monomial cofactor_in(const Monomial& m) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Exponent> e_;
  std::uint64_t deg_ = 0;
};

struct Term {
  Scalar coeff;
  Monomial mono;
};

/// Monomial order. Block orders compare the eliminated variables (under
/// `outer`) before the remaining ones (under `inner`).
class TermOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder grevlex() { return TermOrder(Kind::GrevLex); }
  static TermOrder block(std::vector<std::size_t> eliminated, const TermOrder& outer, const TermOrder& inner);
  /// Block order eliminating `eliminated` with `base` on both blocks.
  static TermOrder elimination(std::vector<std::size_t> eliminated, const TermOrder& base) {
    return block(std::move(eliminated), base, base);
  }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& eliminated() const { return elim_; }
  std::string to_string() const;

  /// Negative, zero or positive like strcmp.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) { return a.to_string() == b.to_string(); }

 private:
  explicit TermOrder(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<std::size_t> elim_;
  std::shared_ptr<const TermOrder> outer_, inner_;
  friend class MonomialOrder;
};

/// A TermOrder flattened for a fixed arity; what the Groebner engine uses.
class MonomialOrder {
 public:
  MonomialOrder(const TermOrder& order, std::size_t arity);
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  struct Segment {
    bool grevlex;
    std::vector<std::size_t> vars;
  };
  void flatten(const TermOrder& o, const std::vector<std::size_t>& vars);
  std::vector<Segment> segs_;
};

/// Named scalar constants usable in polynomial text (e.g. `alpha`).
using Constants = std::map<std::string, Scalar, std::less<>>;

/// Sparse polynomial; terms are kept strictly descending in grevlex with no
/// zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Scalar& c);
  static Polynomial variable(const Ring& ring, std::size_t i);
  static Polynomial monomial(const Ring& ring, const Scalar& c, Monomial m);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::uint64_t total_degree() const;
  /// Coefficient of the monomial 1.
  Scalar constant_term() const;

  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(std::uint64_t e) const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  /// Ring-aware equality; polynomials over different rings are unequal.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void require_same(const Polynomial& b) const;
  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial partial_derivative(const Polynomial& f, std::size_t i);
std::vector<Polynomial> gradient(const Polynomial& f);
/// Indices of the variables occurring in f, ascending.
std::vector<std::size_t> support(const Polynomial& f);
Scalar evaluate(const Polynomial& f, std::span<const Scalar> point);
/// Replaces variable i by images[i]; all images live in `target`.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, const Ring& target);
/// Re-indexes f into `target`, variable i of f going to var_map[i].
Polynomial change_ring(const Polynomial& f, const Ring& target, std::span<const std::size_t> var_map);
/// Re-indexes f into `target` by variable name. Throws UnknownVariable when a
/// variable in the support of f is missing from target.
Polynomial rename_into(const Polynomial& f, const Ring& target);

int compare_monomials(const Monomial& a, const Monomial& b, const TermOrder& order);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

/// Grammar: integers, rational literals `a/b`, variables, field generator,
/// named constants, `+ - * ^`, parentheses.
Polynomial parse_poly(std::string_view text, const Ring& ring, const Constants* constants = nullptr);
Scalar parse_scalar(std::string_view text, const Field& field, const Constants* constants = nullptr);
/// `QQ`, `GF(p)`, `QQ[t]/(t^2+t-1)`, `GF(5)[t]/(t^2-2)`.
Field parse_field(std::string_view text);

}  // namespace algmat

#endif
