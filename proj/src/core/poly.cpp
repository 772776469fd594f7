#include "algmat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace algmat {

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Term& x, const Term& y) const { return grevlex_compare(x.mono, y.mono) > 0; }
};

}  // namespace

// --- Ring ----------------------------------------------------------------

Ring::Ring(Field field, std::vector<std::string> vars) {
  std::set<std::string_view> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v)) throw Error(ErrorKind::InvalidArgument, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorKind::DuplicateVariable, "duplicate variable '" + v + "'");
  }
  d_ = std::make_shared<const Desc>(Desc{field, std::move(vars)});
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  const auto& v = d_->vars;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

// --- Monomial ------------------------------------------------------------

Monomial::Monomial(std::vector<Exponent> e) : e_(std::move(e)) {
  for (auto x : e_) deg_ += x;
}

Exponent Monomial::max_exponent() const {
  Exponent m = 0;
  for (auto x : e_) m = std::max(m, x);
  return m;
}

bool Monomial::divides(const Monomial& m) const {
  if (deg_ > m.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& m) const {
  Monomial r(m);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
  r.deg_ = m.deg_ - deg_;
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    const std::uint64_t s = std::uint64_t{a.e_[i]} + b.e_[i];
    if (s > std::numeric_limits<Exponent>::max()) throw Error(ErrorKind::ExponentOverflow, "exponent overflow");
    r.e_[i] = static_cast<Exponent>(s);
  }
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  r.deg_ = 0;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] && b.e_[i]) return false;
  return true;
}

// --- Term orders -----------------------------------------------------------

TermOrder TermOrder::block(std::vector<std::size_t> eliminated, const TermOrder& outer, const TermOrder& inner) {
  std::sort(eliminated.begin(), eliminated.end());
  eliminated.erase(std::unique(eliminated.begin(), eliminated.end()), eliminated.end());
  if (eliminated.empty()) throw Error(ErrorKind::InvalidArgument, "block order needs eliminated variables");
  TermOrder o(Kind::Block);
  o.elim_ = std::move(eliminated);
  o.outer_ = std::make_shared<const TermOrder>(outer);
  o.inner_ = std::make_shared<const TermOrder>(inner);
  return o;
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::GrevLex: return "grevlex";
    case Kind::Block: {
      std::string s = "block({";
      for (std::size_t i = 0; i < elim_.size(); ++i) s += (i ? "," : "") + std::to_string(elim_[i]);
      return s + "};" + outer_->to_string() + ";" + inner_->to_string() + ")";
    }
  }
  return "?";
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  return MonomialOrder(*this, a.arity()).compare(a, b);
}

MonomialOrder::MonomialOrder(const TermOrder& order, std::size_t arity) {
  std::vector<std::size_t> all(arity);
  for (std::size_t i = 0; i < arity; ++i) all[i] = i;
  if (order.kind() == TermOrder::Kind::Block) {
    const auto& e = order.eliminated();
    if (e.back() >= arity) throw Error(ErrorKind::IndexOutOfRange, "block order variable index out of range");
    if (e.size() >= arity) throw Error(ErrorKind::InvalidArgument, "block order must eliminate a proper subset");
  }
  flatten(order, all);
}

void MonomialOrder::flatten(const TermOrder& o, const std::vector<std::size_t>& vars) {
  if (vars.empty()) return;
  switch (o.kind()) {
    case TermOrder::Kind::Lex: segs_.push_back({false, vars}); return;
    case TermOrder::Kind::GrevLex: segs_.push_back({true, vars}); return;
    case TermOrder::Kind::Block: {
      std::vector<std::size_t> in, out;
      for (auto v : vars) {
        (std::binary_search(o.elim_.begin(), o.elim_.end(), v) ? in : out).push_back(v);
      }
      flatten(*o.outer_, in);
      flatten(*o.inner_, out);
      return;
    }
  }
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& s : segs_) {
    if (s.grevlex) {
      std::uint64_t da = 0, db = 0;
      for (auto v : s.vars) {
        da += a[v];
        db += b[v];
      }
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t k = s.vars.size(); k-- > 0;) {
        const auto v = s.vars[k];
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
      }
    } else {
      for (auto v : s.vars)
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
  }
  return 0;
}

int compare_monomials(const Monomial& a, const Monomial& b, const TermOrder& order) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::RingMismatch, "monomials of different arity");
  return order.compare(a, b);
}

// --- Polynomial ------------------------------------------------------------

Polynomial Polynomial::constant(const Ring& ring, const Scalar& c) {
  return monomial(ring, c, Monomial(ring.arity()));
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t i) {
  if (i >= ring.arity()) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
  std::vector<Exponent> e(ring.arity(), 0);
  e[i] = 1;
  return monomial(ring, ring.field().one(), Monomial(std::move(e)));
}

Polynomial Polynomial::monomial(const Ring& ring, const Scalar& c, Monomial m) {
  if (!(c.field() == ring.field())) throw Error(ErrorKind::FieldMismatch, "coefficient not in the ring's field");
  if (m.arity() != ring.arity()) throw Error(ErrorKind::RingMismatch, "monomial arity does not match ring");
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({c, std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (!(t.coeff.field() == ring.field())) throw Error(ErrorKind::FieldMismatch, "coefficient not in the ring's field");
    if (t.mono.arity() != ring.arity()) throw Error(ErrorKind::RingMismatch, "monomial arity does not match ring");
  }
  std::sort(terms.begin(), terms.end(), GrevlexGreater{});
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return ring_.field().zero();
}

void Polynomial::require_same(const Polynomial& b) const {
  if (!(ring_ == b.ring_)) throw Error(ErrorKind::RingMismatch, "polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (!(c.field() == ring_.field())) throw Error(ErrorKind::FieldMismatch, "scalar not in the ring's field");
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono});
  return r;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    int c;
    if (i == ta.size()) {
      c = -1;
    } else if (j == tb.size()) {
      c = 1;
    } else {
      c = grevlex_compare(ta[i].mono, tb[j].mono);
    }
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back({subtract ? -tb[j].coeff : tb[j].coeff, tb[j].mono});
      ++j;
    } else {
      Scalar s = subtract ? ta[i].coeff - tb[j].coeff : ta[i].coeff + tb[j].coeff;
      if (!s.is_zero()) out.push_back({std::move(s), ta[i].mono});
      ++i;
      ++j;
    }
  }
  // Already sorted and combined; from_terms keeps it canonical cheaply.
  return Polynomial::from_terms(a.ring(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.require_same(b);
  return merge(a, b, false);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  a.require_same(b);
  return merge(a, b, true);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same(b);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.coeff * y.coeff, x.mono * y.mono});
  return Polynomial::from_terms(a.ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial r = constant(ring_, ring_.field().one());
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.var(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Display order is graded lex, independent of the storage order.
  std::vector<const Term*> shown;
  for (const auto& t : terms_) shown.push_back(&t);
  std::sort(shown.begin(), shown.end(), [](const Term* a, const Term* b) {
    if (a->mono.degree() != b->mono.degree()) return a->mono.degree() > b->mono.degree();
    const auto ea = a->mono.exponents(), eb = b->mono.exponents();
    return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
  });
  std::string out;
  for (const Term* tp : shown) {
    const Term& t = *tp;
    std::string body;
    bool negative = false;
    if (t.mono.is_one()) {
      body = t.coeff.to_string();
      if (t.coeff.prints_as_single_term() && body[0] == '-') {
        negative = true;
        body = body.substr(1);
      } else if (!t.coeff.prints_as_single_term() && !out.empty()) {
        body = "(" + body + ")";
      }
    } else {
      const std::string mono = monomial_to_string(t.mono, ring_);
      if (t.coeff.is_one()) {
        body = mono;
      } else if ((-t.coeff).is_one()) {
        negative = true;
        body = mono;
      } else if (t.coeff.prints_as_single_term()) {
        std::string c = t.coeff.to_string();
        if (c[0] == '-') {
          negative = true;
          c = c.substr(1);
        }
        body = c + "*" + mono;
      } else {
        body = "(" + t.coeff.to_string() + ")*" + mono;
      }
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

// --- calculus and evaluation -------------------------------------------------

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  const Ring& r = f.ring();
  if (i >= r.arity()) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const Exponent e = t.mono[i];
    if (e == 0) continue;
    Scalar c = t.coeff * r.field().from_int(e);
    if (c.is_zero()) continue;
    std::vector<Exponent> ex(t.mono.exponents().begin(), t.mono.exponents().end());
    ex[i] -= 1;
    out.push_back({std::move(c), Monomial(std::move(ex))});
  }
  return Polynomial::from_terms(r, std::move(out));
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  g.reserve(f.ring().arity());
  for (std::size_t i = 0; i < f.ring().arity(); ++i) g.push_back(partial_derivative(f, i));
  return g;
}

std::vector<std::size_t> support(const Polynomial& f) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < f.ring().arity(); ++i) {
    for (const auto& t : f.terms()) {
      if (t.mono[i]) {
        s.push_back(i);
        break;
      }
    }
  }
  return s;
}

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point) {
  const Ring& r = f.ring();
  if (point.size() != r.arity()) throw Error(ErrorKind::InvalidArgument, "point has wrong length");
  for (const auto& z : point)
    if (!(z.field() == r.field())) throw Error(ErrorKind::FieldMismatch, "point coordinate not in the ring's field");
  // Cache powers per variable to keep repeated evaluation cheap.
  std::vector<std::map<Exponent, Scalar>> powers(r.arity());
  auto power = [&](std::size_t v, Exponent e) -> const Scalar& {
    auto it = powers[v].find(e);
    if (it == powers[v].end()) it = powers[v].emplace(e, point[v].pow(e)).first;
    return it->second;
  };
  Scalar acc = r.field().zero();
  for (const auto& t : f.terms()) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < r.arity() && !v.is_zero(); ++i)
      if (t.mono[i]) v *= power(i, t.mono[i]);
    acc += v;
  }
  return acc;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, const Ring& target) {
  if (images.size() != f.ring().arity()) throw Error(ErrorKind::InvalidArgument, "wrong number of images");
  if (!(f.ring().field() == target.field())) throw Error(ErrorKind::FieldMismatch, "target ring over another field");
  for (const auto& g : images)
    if (!(g.ring() == target)) throw Error(ErrorKind::RingMismatch, "image not in target ring");
  std::vector<std::map<Exponent, Polynomial>> powers(images.size());
  Polynomial acc(target);
  for (const auto& t : f.terms()) {
    Polynomial v = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!t.mono[i]) continue;
      auto it = powers[i].find(t.mono[i]);
      if (it == powers[i].end()) it = powers[i].emplace(t.mono[i], images[i].pow(t.mono[i])).first;
      v *= it->second;
    }
    acc += v;
  }
  return acc;
}

Polynomial change_ring(const Polynomial& f, const Ring& target, std::span<const std::size_t> var_map) {
  if (var_map.size() != f.ring().arity()) throw Error(ErrorKind::InvalidArgument, "variable map has wrong length");
  if (!(f.ring().field() == target.field())) throw Error(ErrorKind::FieldMismatch, "target ring over another field");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(target.arity(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (!t.mono[i]) continue;
      if (var_map[i] >= target.arity()) throw Error(ErrorKind::IndexOutOfRange, "variable map out of range");
      e[var_map[i]] += t.mono[i];
    }
    out.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial rename_into(const Polynomial& f, const Ring& target) {
  std::vector<std::size_t> map(f.ring().arity(), target.arity());
  for (std::size_t i = 0; i < f.ring().arity(); ++i) {
    if (auto j = target.index_of(f.ring().var(i))) map[i] = *j;
  }
  for (auto i : support(f)) {
    if (map[i] == target.arity()) {
      throw Error(ErrorKind::UnknownVariable, "variable '" + f.ring().var(i) + "' not in target ring");
    }
  }
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(target.arity(), 0);
    for (std::size_t i = 0; i < map.size(); ++i)
      if (t.mono[i]) e[map[i]] += t.mono[i];
    out.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(out));
}

// --- parsing ---------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, const Constants* constants)
      : text_(text), ring_(ring), constants_(constants) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, 1, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 9) fail("exponent too large");
      base = base.pow(std::stoull(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    const Field& f = ring_.field();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (!peek_digit()) fail("'/' is only allowed inside rational literals");
        mpz_class den(digits());
        if (den == 0) fail("zero denominator");
        try {
          return Polynomial::constant(ring_, f.from_rational(mpq_class(num, den)));
        } catch (const Error& e) {
          fail(e.what());
        }
      }
      return Polynomial::constant(ring_, f.from_integer(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (auto i = ring_.index_of(name)) return Polynomial::variable(ring_, *i);
      if (constants_) {
        if (auto it = constants_->find(name); it != constants_->end()) {
          return Polynomial::constant(ring_, it->second);
        }
      }
      if (f.is_extension() && f.generator() == name) return Polynomial::constant(ring_, f.gen());
      throw Error(ErrorKind::UnknownVariable,
                  "1:" + std::to_string(start + 1) + ": unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  const Constants* constants_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring, const Constants* constants) {
  return Parser(text, ring, constants).parse();
}

Scalar parse_scalar(std::string_view text, const Field& field, const Constants* constants) {
  Ring r(field, {});
  Polynomial p = parse_poly(text, r, constants);
  return p.constant_term();
}

Field parse_field(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  const std::string original(s);
  auto unknown = [&](const std::string& why) {
    return Error(ErrorKind::UnknownField, "unknown field '" + original + "': " + why);
  };
  Field base;
  if (s.starts_with("QQ")) {
    s.remove_prefix(2);
  } else if (s.starts_with("GF(")) {
    s.remove_prefix(3);
    std::size_t close = s.find(')');
    if (close == std::string_view::npos) throw unknown("missing ')'");
    std::string_view num = trim(s.substr(0, close));
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        num.size() > 19) {
      throw unknown("bad modulus");
    }
    const std::uint64_t p = std::stoull(std::string(num));
    if (!is_prime(p)) throw unknown("modulus " + std::string(num) + " is not prime");
    base = Field::prime(p);
    s.remove_prefix(close + 1);
  } else {
    throw unknown("expected QQ or GF(p)");
  }
  s = trim(s);
  if (s.empty()) return base;
  if (s.front() != '[') throw unknown("expected '[' after base field");
  std::size_t close = s.find(']');
  if (close == std::string_view::npos) throw unknown("missing ']'");
  const std::string gen(trim(s.substr(1, close - 1)));
  if (!valid_identifier(gen)) throw unknown("bad generator name");
  s = trim(s.substr(close + 1));
  if (!s.starts_with("/")) throw unknown("expected '/' before minimal polynomial");
  s = trim(s.substr(1));
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw unknown("minimal polynomial must be parenthesised");
  Ring r(base, {gen});
  Polynomial m = parse_poly(s.substr(1, s.size() - 2), r);
  const std::uint64_t deg = m.total_degree();
  std::vector<Scalar> coeffs(deg + 1, base.zero());
  for (const auto& t : m.terms()) coeffs[t.mono[0]] = t.coeff;
  return Field::extension(base, gen, coeffs);
}

}  // namespace algmat
