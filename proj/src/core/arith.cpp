#include "algmat/arith.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace algmat {
namespace detail {

struct FieldDesc {
  enum class Kind { Rationals, Prime, Extension };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;
  std::size_t degree = 1;
  const FieldDesc* base = nullptr;
  std::string gen;
  // Minimal polynomial coordinates, constant term first, leading 1 included.
  std::array<std::uint64_t, kMaxFiniteDegree + 1> mod_p{};
  std::vector<mpq_class> mod_q;
  std::vector<Scalar> minpoly;
  std::string literal;
};

}  // namespace detail

namespace {

using detail::FieldDesc;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

// Interned descriptors live for the whole process.
std::map<std::string, const FieldDesc*>& registry() {
  static auto* r = new std::map<std::string, const FieldDesc*>();
  return *r;
}

const FieldDesc* intern(std::unique_ptr<FieldDesc> d) {
  std::lock_guard lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(d->literal);
  if (it != reg.end()) return it->second;
  const FieldDesc* raw = d.release();
  reg.emplace(raw->literal, raw);
  return raw;
}

const FieldDesc* rationals_desc() {
  static const FieldDesc* d = [] {
    auto f = std::make_unique<FieldDesc>();
    f->kind = FieldDesc::Kind::Rationals;
    f->literal = "QQ";
    return intern(std::move(f));
  }();
  return d;
}

bool char_p(const FieldDesc* f) { return f->p != 0; }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorKind::DivisionByZero, "division by zero in GF(" + std::to_string(p) + ")");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::string residue_text(std::uint64_t r, std::uint64_t p) {
  if (r > p / 2) return "-" + std::to_string(p - r);
  return std::to_string(r);
}

// Text of sum_k c_k * gen^k, highest power first. `coef` renders a base
// coefficient (always a single signed term).
template <class Coef>
std::string univariate_text(std::size_t len, const std::string& gen, Coef coef, auto is_zero, auto is_one,
                            auto is_minus_one) {
  std::string out;
  for (std::size_t k = len; k-- > 0;) {
    if (is_zero(k)) continue;
    std::string term;
    std::string power = k == 1 ? gen : gen + "^" + std::to_string(k);
    if (k == 0) {
      term = coef(k);
    } else if (is_one(k)) {
      term = power;
    } else if (is_minus_one(k)) {
      term = "-" + power;
    } else {
      term = coef(k) + "*" + power;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string scalar_poly_text(const std::vector<Scalar>& coeffs, const std::string& gen) {
  return univariate_text(
      coeffs.size(), gen, [&](std::size_t k) { return coeffs[k].to_string(); },
      [&](std::size_t k) { return coeffs[k].is_zero(); }, [&](std::size_t k) { return coeffs[k].is_one(); },
      [&](std::size_t k) { return (-coeffs[k]).is_one(); });
}

// --- univariate polynomials over GF(p), constant term first -------------

using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly upoly_mod(UPoly a, const UPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = invmod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = (a[shift + j] + mulmod(p - c, m[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

UPoly upoly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  return upoly_mod(std::move(c), m, p);
}

UPoly upoly_gcd(UPoly a, UPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

// --- Field ---------------------------------------------------------------

Field::Field() : d_(rationals_desc()) {}

Field Field::rationals() { return Field(rationals_desc()); }

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw Error(ErrorKind::ModulusTooLarge, "prime modulus must be below 2^32");
  if (!is_prime(p)) throw Error(ErrorKind::UnknownField, "GF(" + std::to_string(p) + "): modulus is not prime");
  auto f = std::make_unique<FieldDesc>();
  f->kind = FieldDesc::Kind::Prime;
  f->p = p;
  f->literal = "GF(" + std::to_string(p) + ")";
  return Field(intern(std::move(f)));
}

namespace {

bool is_rational_square(const mpq_class& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

bool has_rational_root_cubic(const std::vector<mpq_class>& c) {
  // x^3 + c2 x^2 + c1 x + c0 with y = L x integral and monic.
  mpz_class l = 1;
  for (int i = 0; i < 3; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[i].get_den_mpz_t());
  mpq_class a2 = c[2] * l, a1 = c[1] * l * l, a0 = c[0] * l * l * l;
  if (a0 == 0) return true;
  mpz_class n = abs(mpz_class(a0.get_num()));
  if (n > mpz_class("1000000000000")) {
    throw Error(ErrorKind::DegreeTooLarge, "cubic minimal polynomial coefficients too large for root search");
  }
  auto is_root = [&](const mpz_class& y) {
    mpq_class v = mpq_class(y) * y * y + a2 * y * y + a1 * y + a0;
    return v == 0;
  };
  std::uint64_t nn = n.get_ui();
  for (std::uint64_t d = 1; d * d <= nn; ++d) {
    if (nn % d) continue;
    for (std::uint64_t div : {d, nn / d}) {
      mpz_class y(static_cast<unsigned long>(div));
      if (is_root(y) || is_root(-y)) return true;
    }
  }
  return false;
}

}  // namespace

Field Field::extension(const Field& base, const std::string& generator, const std::vector<Scalar>& minimal_poly) {
  if (base.is_extension()) {
    throw Error(ErrorKind::InvalidField, "extensions of extension fields are not supported");
  }
  if (generator.empty()) throw Error(ErrorKind::InvalidField, "extension generator needs a name");
  if (minimal_poly.size() < 3) throw Error(ErrorKind::InvalidField, "minimal polynomial must have degree >= 2");
  for (const auto& c : minimal_poly) {
    if (!(c.field() == base)) throw Error(ErrorKind::FieldMismatch, "minimal polynomial not over the base field");
  }
  if (!minimal_poly.back().is_one()) throw Error(ErrorKind::InvalidField, "minimal polynomial must be monic");
  const std::size_t deg = minimal_poly.size() - 1;

  auto f = std::make_unique<FieldDesc>();
  f->kind = FieldDesc::Kind::Extension;
  f->p = base.characteristic();
  f->degree = deg;
  f->base = base.d_;
  f->gen = generator;
  f->minpoly = minimal_poly;

  if (f->p != 0) {
    if (deg > kMaxFiniteDegree) {
      throw Error(ErrorKind::DegreeTooLarge, "extension degree above " + std::to_string(kMaxFiniteDegree));
    }
    if (f->p > (1u << 16)) {
      throw Error(ErrorKind::ModulusTooLarge, "extensions are supported only for p <= 2^16");
    }
    std::vector<std::uint64_t> coeffs;
    for (std::size_t i = 0; i <= deg; ++i) {
      f->mod_p[i] = minimal_poly[i].residue();
      coeffs.push_back(f->mod_p[i]);
    }
    if (!is_irreducible(coeffs, f->p)) {
      throw Error(ErrorKind::InvalidField, "minimal polynomial is reducible over " + base.to_string());
    }
  } else {
    for (const auto& c : minimal_poly) f->mod_q.push_back(c.rational());
    if (deg == 2) {
      mpq_class disc = f->mod_q[1] * f->mod_q[1] - 4 * f->mod_q[0];
      if (is_rational_square(disc)) throw Error(ErrorKind::InvalidField, "minimal polynomial is reducible over QQ");
    } else if (deg == 3) {
      if (has_rational_root_cubic(f->mod_q)) {
        throw Error(ErrorKind::InvalidField, "minimal polynomial is reducible over QQ");
      }
    } else {
      throw Error(ErrorKind::DegreeTooLarge, "only quadratic and cubic extensions of QQ are supported");
    }
  }
  f->literal = base.to_string() + "[" + generator + "]/(" + scalar_poly_text(minimal_poly, generator) + ")";
  return Field(intern(std::move(f)));
}

std::uint64_t Field::characteristic() const { return d_->p; }
std::size_t Field::degree() const { return d_->degree; }
bool Field::is_extension() const { return d_->kind == FieldDesc::Kind::Extension; }
Field Field::base() const { return d_->base ? Field(d_->base) : *this; }
const std::string& Field::generator() const { return d_->gen; }
const std::vector<Scalar>& Field::minimal_poly() const { return d_->minpoly; }
const std::string& Field::to_string() const { return d_->literal; }

std::uint64_t Field::size() const {
  if (d_->p == 0) return 0;
  unsigned __int128 s = 1;
  for (std::size_t i = 0; i < d_->degree; ++i) {
    s *= d_->p;
    if (s > ~std::uint64_t{0}) return 0;
  }
  return static_cast<std::uint64_t>(s);
}

Scalar Field::zero() const {
  Scalar s(d_);
  if (!char_p(d_)) s.q_.assign(d_->degree, mpq_class(0));
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const { return from_integer(mpz_class(std::to_string(v))); }

Scalar Field::from_integer(const mpz_class& v) const {
  Scalar s = zero();
  if (char_p(d_)) {
    s.r_[0] = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), d_->p));
  } else {
    s.q_[0] = v;
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (!char_p(d_)) {
    Scalar s = zero();
    s.q_[0] = v;
    s.q_[0].canonicalize();
    return s;
  }
  Scalar num = from_integer(v.get_num());
  Scalar den = from_integer(v.get_den());
  return num / den;
}

Scalar Field::gen() const {
  if (!is_extension()) throw Error(ErrorKind::InvalidField, to_string() + " has no generator");
  Scalar s = zero();
  if (char_p(d_)) {
    s.r_[1] = 1;
  } else {
    s.q_[1] = 1;
  }
  return s;
}

Scalar Field::from_coordinates(const std::vector<Scalar>& coords) const {
  if (coords.size() > d_->degree) throw Error(ErrorKind::InvalidArgument, "too many coordinates for " + to_string());
  Field b = base();
  Scalar s = zero();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!(coords[i].field() == b)) throw Error(ErrorKind::FieldMismatch, "coordinate not in base field");
    if (char_p(d_)) {
      s.r_[i] = coords[i].r_[0];
    } else {
      s.q_[i] = coords[i].q_[0];
    }
  }
  return s;
}

// --- Scalar --------------------------------------------------------------

Scalar::Scalar() : f_(rationals_desc()), q_(1, mpq_class(0)) {}

void Scalar::require_same(const Scalar& b) const {
  if (f_ != b.f_) throw Error(ErrorKind::FieldMismatch, "scalars from " + f_->literal + " and " + b.f_->literal);
}

bool Scalar::is_zero() const {
  if (char_p(f_)) {
    for (std::size_t i = 0; i < f_->degree; ++i)
      if (r_[i]) return false;
    return true;
  }
  for (const auto& c : q_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (char_p(f_)) {
    if (r_[0] != 1) return false;
    for (std::size_t i = 1; i < f_->degree; ++i)
      if (r_[i]) return false;
    return true;
  }
  if (q_[0] != 1) return false;
  for (std::size_t i = 1; i < q_.size(); ++i)
    if (q_[i] != 0) return false;
  return true;
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (char_p(f_)) {
    for (std::size_t i = 0; i < f_->degree; ++i) s.r_[i] = r_[i] ? static_cast<std::uint32_t>(f_->p - r_[i]) : 0;
  } else {
    for (auto& c : s.q_) c = -c;
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  Scalar s(a.f_);
  if (char_p(a.f_)) {
    const std::uint64_t p = a.f_->p;
    for (std::size_t i = 0; i < a.f_->degree; ++i)
      s.r_[i] = static_cast<std::uint32_t>((std::uint64_t{a.r_[i]} + b.r_[i]) % p);
  } else {
    s.q_.resize(a.q_.size());
    for (std::size_t i = 0; i < a.q_.size(); ++i) s.q_[i] = a.q_[i] + b.q_[i];
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  Scalar s(a.f_);
  if (char_p(a.f_)) {
    const std::uint64_t p = a.f_->p;
    for (std::size_t i = 0; i < a.f_->degree; ++i)
      s.r_[i] = static_cast<std::uint32_t>((std::uint64_t{a.r_[i]} + p - b.r_[i]) % p);
  } else {
    s.q_.resize(a.q_.size());
    for (std::size_t i = 0; i < a.q_.size(); ++i) s.q_[i] = a.q_[i] - b.q_[i];
  }
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  const FieldDesc* f = a.f_;
  const std::size_t d = f->degree;
  Scalar s(f);
  if (char_p(f)) {
    const std::uint64_t p = f->p;
    if (d == 1) {
      s.r_[0] = static_cast<std::uint32_t>(mulmod(a.r_[0], b.r_[0], p));
      return s;
    }
    std::array<std::uint64_t, 2 * kMaxFiniteDegree> t{};
    for (std::size_t i = 0; i < d; ++i) {
      if (!a.r_[i]) continue;
      for (std::size_t j = 0; j < d; ++j) t[i + j] = (t[i + j] + mulmod(a.r_[i], b.r_[j], p)) % p;
    }
    for (std::size_t k = 2 * d - 2; k >= d; --k) {
      const std::uint64_t c = t[k];
      if (!c) continue;
      t[k] = 0;
      for (std::size_t j = 0; j < d; ++j) t[k - d + j] = (t[k - d + j] + mulmod(c, p - f->mod_p[j], p)) % p;
    }
    for (std::size_t i = 0; i < d; ++i) s.r_[i] = static_cast<std::uint32_t>(t[i]);
    return s;
  }
  if (d == 1) {
    s.q_.assign(1, a.q_[0] * b.q_[0]);
    return s;
  }
  std::vector<mpq_class> t(2 * d - 1, mpq_class(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.q_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) t[i + j] += a.q_[i] * b.q_[j];
  }
  for (std::size_t k = 2 * d - 2; k >= d; --k) {
    if (t[k] == 0) continue;
    mpq_class c = t[k];
    t[k] = 0;
    for (std::size_t j = 0; j < d; ++j) t[k - d + j] -= c * f->mod_q[j];
  }
  t.resize(d);
  s.q_ = std::move(t);
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + f_->literal);
  const std::size_t d = f_->degree;
  Scalar s(f_);
  if (d == 1) {
    if (char_p(f_)) {
      s.r_[0] = static_cast<std::uint32_t>(invmod(r_[0], f_->p));
    } else {
      s.q_.assign(1, 1 / q_[0]);
    }
    return s;
  }
  // Solve M x = e0 where column j of M holds the coordinates of a * gen^j.
  Field fld(f_);
  Scalar g = fld.gen();
  std::vector<Scalar> cols;
  Scalar v = *this;
  for (std::size_t j = 0; j < d; ++j) {
    cols.push_back(v);
    v = v * g;
  }
  if (char_p(f_)) {
    const std::uint64_t p = f_->p;
    std::vector<std::vector<std::uint64_t>> m(d, std::vector<std::uint64_t>(d + 1, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m[i][j] = cols[j].r_[i];
      m[i][d] = i == 0 ? 1 : 0;
    }
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t piv = c;
      while (m[piv][c] == 0) ++piv;
      std::swap(m[piv], m[c]);
      const std::uint64_t iv = invmod(m[c][c], p);
      for (auto& x : m[c]) x = mulmod(x, iv, p);
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || m[r][c] == 0) continue;
        const std::uint64_t factor = m[r][c];
        for (std::size_t k = 0; k <= d; ++k) m[r][k] = (m[r][k] + mulmod(p - factor, m[c][k], p)) % p;
      }
    }
    for (std::size_t i = 0; i < d; ++i) s.r_[i] = static_cast<std::uint32_t>(m[i][d]);
  } else {
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m[i][j] = cols[j].q_[i];
      m[i][d] = i == 0 ? 1 : 0;
    }
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t piv = c;
      while (m[piv][c] == 0) ++piv;
      std::swap(m[piv], m[c]);
      const mpq_class iv = 1 / m[c][c];
      for (auto& x : m[c]) x *= iv;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || m[r][c] == 0) continue;
        const mpq_class factor = m[r][c];
        for (std::size_t k = 0; k <= d; ++k) m[r][k] -= factor * m[c][k];
      }
    }
    s.q_.resize(d);
    for (std::size_t i = 0; i < d; ++i) s.q_[i] = m[i][d];
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  return a * b.inv();
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar base = *this;
  Scalar r = Field(f_).one();
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  if (char_p(a.f_)) return a.r_ == b.r_;
  return a.q_ == b.q_;
}

std::vector<Scalar> Scalar::coordinates() const {
  if (f_->kind != FieldDesc::Kind::Extension) return {*this};
  Field b(f_->base);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < f_->degree; ++i) {
    Scalar c = b.zero();
    if (char_p(f_)) {
      c.r_[0] = r_[i];
    } else {
      c.q_[0] = q_[i];
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool Scalar::in_base_field() const {
  for (std::size_t i = 1; i < f_->degree; ++i) {
    if (char_p(f_) ? r_[i] != 0 : q_[i] != 0) return false;
  }
  return true;
}

const mpq_class& Scalar::rational() const {
  if (f_->kind != FieldDesc::Kind::Rationals) throw Error(ErrorKind::FieldMismatch, "not a rational scalar");
  return q_[0];
}

std::uint64_t Scalar::residue() const {
  if (f_->kind != FieldDesc::Kind::Prime) throw Error(ErrorKind::FieldMismatch, "not a prime-field scalar");
  return r_[0];
}

std::string Scalar::to_string() const {
  if (f_->kind == FieldDesc::Kind::Rationals) return q_[0].get_str();
  if (f_->kind == FieldDesc::Kind::Prime) return residue_text(r_[0], f_->p);
  auto coords = coordinates();
  return scalar_poly_text(coords, f_->gen);
}

bool Scalar::prints_as_single_term() const {
  if (f_->kind != FieldDesc::Kind::Extension) return true;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < f_->degree; ++i) nonzero += char_p(f_) ? r_[i] != 0 : q_[i] != 0;
  return nonzero <= 1;
}

Scalar frobenius_power(const Scalar& a, std::uint64_t e) {
  const FieldDesc* f = a.f_;
  if (!char_p(f)) throw Error(ErrorKind::CharZeroField, "Frobenius requires positive characteristic");
  if (f->kind == FieldDesc::Kind::Prime) return a;
  // The Frobenius automorphism has order equal to the extension degree.
  e %= f->degree;
  Scalar r = a;
  for (std::uint64_t i = 0; i < e; ++i) r = r.pow(f->p);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::span<const std::uint64_t> coeffs, std::uint64_t p) {
  if (coeffs.size() < 2) throw Error(ErrorKind::InvalidArgument, "polynomial must have degree >= 1");
  const std::size_t deg = coeffs.size() - 1;
  if (deg > kMaxFiniteDegree) throw Error(ErrorKind::DegreeTooLarge, "is_irreducible supports degree <= 6");
  if (p > (1u << 16)) throw Error(ErrorKind::ModulusTooLarge, "is_irreducible supports p <= 2^16");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "modulus is not prime");
  if (coeffs.back() % p != 1) throw Error(ErrorKind::InvalidArgument, "polynomial must be monic");
  if (deg == 1) return true;
  UPoly m(coeffs.begin(), coeffs.end());
  for (auto& c : m) c %= p;
  if (deg <= 3) {
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (std::size_t k = deg + 1; k-- > 0;) v = (mulmod(v, x, p) + m[k]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // Distinct-degree test: m is irreducible iff gcd(x^(p^i) - x, m) = 1 for
  // all i <= deg/2.
  UPoly h = {0, 1};
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    UPoly base = h, r = {1};
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1) r = upoly_mulmod(r, base, m, p);
      base = upoly_mulmod(base, base, m, p);
    }
    h = r;
    UPoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    UPoly g = upoly_gcd(m, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace algmat
