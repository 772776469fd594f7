#include "algmat/quotfield.hpp"

#include <algorithm>
#include <limits>

namespace algmat {

namespace {

// Largest monomial dividing every term of both polynomials.
Monomial common_monomial(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.ring().arity();
  std::vector<Exponent> e(n, std::numeric_limits<Exponent>::max());
  for (const Polynomial* p : {&a, &b})
    for (const auto& t : p->terms())
      for (std::size_t i = 0; i < n; ++i) e[i] = std::min(e[i], t.mono[i]);
  return Monomial(e);
}

Polynomial divide_by_monomial(const Polynomial& f, const Monomial& m) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) ts.push_back({t.coeff, m.cofactor_in(t.mono)});
  return Polynomial::from_terms(f.ring(), std::move(ts));
}

Polynomial one(const Ring& r) { return Polynomial::constant(r, r.field().one()); }

}  // namespace

QContext::QContext(IdealPresentation ideal, const GbLimits& limits) {
  auto gb = ideal.groebner(TermOrder::grevlex(), limits);
  d_ = std::make_shared<const Data>(Data{std::move(ideal), std::move(gb)});
}

QElem::QElem(QContext ctx) : ctx_(ctx), num_(ctx.ring()), den_(one(ctx.ring())) {}

QElem::QElem(QContext ctx, const Polynomial& f) : ctx_(ctx), num_(ctx.reduce(f)), den_(one(ctx.ring())) {}

QElem::QElem(QContext ctx, const Polynomial& num, const Polynomial& den)
    : ctx_(ctx), num_(ctx.reduce(num)), den_(ctx.reduce(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator lies in the ideal");
  normalize();
}

void QElem::normalize() {
  const Ring& r = ctx_.ring();
  if (num_.is_zero()) {
    den_ = one(r);
    return;
  }
  const Monomial g = common_monomial(num_, den_);
  if (!g.is_one()) {
    // den = g * den' is not in P, so for prime P neither is g.
    num_ = ctx_.reduce(divide_by_monomial(num_, g));
    den_ = ctx_.reduce(divide_by_monomial(den_, g));
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator lies in the ideal");
    if (num_.is_zero()) {
      den_ = one(r);
      return;
    }
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(den_.constant_term().inv());
    den_ = one(r);
    return;
  }
  if (ctx_.reduce(num_ - den_).is_zero()) {
    num_ = den_ = one(r);
    return;
  }
  const Scalar lc = den_.terms()[0].coeff;
  if (!lc.is_one()) {
    const Scalar s = lc.inv();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

bool QElem::is_one() const { return den_.is_constant() && (num_ - den_).is_zero(); }

void QElem::require_same(const QElem& b) const {
  if (!(ctx_ == b.ctx_)) throw Error(ErrorKind::ContextMismatch, "fraction-field elements from different contexts");
}

QElem QElem::operator-() const {
  QElem r = *this;
  r.num_ = -num_;
  return r;
}

QElem QElem::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in the fraction field");
  return QElem(ctx_, den_, num_);
}

QElem operator+(const QElem& a, const QElem& b) {
  a.require_same(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return QElem(a.ctx_, a.num_ + b.num_, a.den_);
  return QElem(a.ctx_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QElem operator-(const QElem& a, const QElem& b) { return a + (-b); }

QElem operator*(const QElem& a, const QElem& b) {
  a.require_same(b);
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  return QElem(a.ctx_, a.num_ * b.num_, a.den_ * b.den_);
}

QElem operator/(const QElem& a, const QElem& b) { return a * b.inv(); }

bool operator==(const QElem& a, const QElem& b) {
  a.require_same(b);
  return a.ctx_.reduce(a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

Scalar QElem::evaluate(std::span<const Scalar> point) const {
  const Scalar d = algmat::evaluate(den_, point);
  if (d.is_zero()) throw Error(ErrorKind::DenominatorVanishes, "denominator " + den_.to_string() + " vanishes at the point");
  return algmat::evaluate(num_, point) / d;
}

std::string QElem::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const Polynomial& p) { return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string(); };
  return wrap(num_) + "/" + wrap(den_);
}

QMatrix::QMatrix(QContext ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, QElem(ctx)) {}

std::vector<QElem> QMatrix::row(std::size_t i) const {
  return std::vector<QElem>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QMatrix QMatrix::transpose() const {
  QMatrix t(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::select_columns(std::span<const std::size_t> cols) const {
  QMatrix s(ctx_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= cols_) throw Error(ErrorKind::IndexOutOfRange, "column index out of range");
      s.at(i, j) = at(i, cols[j]);
    }
  return s;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (!(a.ctx_ == b.ctx_)) throw Error(ErrorKind::ContextMismatch, "matrices from different contexts");
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix dimensions do not match");
  QMatrix c(a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      QElem acc(a.ctx_);
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) acc = acc + a.at(i, k) * b.at(k, j);
      c.at(i, j) = acc;
    }
  return c;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const QElem& e) { return e.is_zero(); });
}

QMatrix stack(const QMatrix& a, const QMatrix& b) {
  if (!(a.context() == b.context())) throw Error(ErrorKind::ContextMismatch, "matrices from different contexts");
  if (a.cols() != b.cols()) throw Error(ErrorKind::InvalidArgument, "matrix widths differ");
  QMatrix s(a.context(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s.at(a.rows() + i, j) = b.at(i, j);
  return s;
}

QMatrix lift(const FieldMatrix& m, const QContext& ctx) {
  if (!(m.field == ctx.field())) throw Error(ErrorKind::FieldMismatch, "matrix field differs from the context field");
  QMatrix q(ctx, m.rows.size(), m.cols);
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols; ++j) q.at(i, j) = QElem(ctx, Polynomial::constant(ctx.ring(), m.rows[i][j]));
  return q;
}

namespace {

// Fraction-free Gauss-Jordan over S/P. Rows are first cleared of
// denominators; each elimination step replaces row_j by
// p*row_j - a*row_i with everything kept reduced modulo P.
struct Echelon {
  std::vector<std::vector<Polynomial>> m;
  std::vector<std::size_t> pivot_cols;  // pivot_cols[k] is the pivot column of row k
};

Echelon eliminate(const QMatrix& a) {
  const QContext& ctx = a.context();
  Echelon e;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Polynomial> dens;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Polynomial& d = a.at(i, j).den();
      if (d.is_constant() || a.at(i, j).is_zero()) continue;
      if (std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
    }
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const QElem& x = a.at(i, j);
      Polynomial v = x.num();
      if (!x.is_zero())
        for (const auto& d : dens)
          if (!(d == x.den())) v = v * d;
      row.push_back(dens.empty() ? v : ctx.reduce(v));
    }
    e.m.push_back(std::move(row));
  }
  std::size_t r = 0;
  const std::size_t rows = e.m.size();
  for (std::size_t c = 0; c < a.cols() && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (e.m[i][c].is_zero()) continue;
      if (best == rows || e.m[i][c].size() < e.m[best][c].size()) best = i;
    }
    if (best == rows) continue;
    std::swap(e.m[r], e.m[best]);
    const Polynomial p = e.m[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || e.m[i][c].is_zero()) continue;
      const Polynomial f = e.m[i][c];
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (e.m[r][j].is_zero() && e.m[i][j].is_zero()) continue;
        Polynomial v = p.is_constant() && f.is_constant() ? e.m[i][j].scaled(p.constant_term()) - e.m[r][j].scaled(f.constant_term())
                                                         : p * e.m[i][j] - f * e.m[r][j];
        e.m[i][j] = (p.is_constant() && f.is_constant()) ? v : ctx.reduce(v);
      }
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t rank(const QMatrix& m) { return eliminate(m).pivot_cols.size(); }

QMatrix kernel_basis(const QMatrix& m) {
  const QContext& ctx = m.context();
  const Echelon e = eliminate(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  QMatrix k(ctx, free.size(), m.cols());
  for (std::size_t r = 0; r < free.size(); ++r) {
    const std::size_t f = free[r];
    k.at(r, f) = QElem(ctx, Polynomial::constant(ctx.ring(), ctx.field().one()));
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      const std::size_t c = e.pivot_cols[i];
      if (e.m[i][f].is_zero()) continue;
      k.at(r, c) = QElem(ctx, -e.m[i][f], e.m[i][c]);
    }
  }
  return k;
}

QElem minor(const QMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw Error(ErrorKind::InvalidArgument, "minor needs as many rows as columns");
  for (auto i : rows)
    if (i >= m.rows()) throw Error(ErrorKind::IndexOutOfRange, "minor row index out of range");
  for (auto j : cols)
    if (j >= m.cols()) throw Error(ErrorKind::IndexOutOfRange, "minor column index out of range");
  const QContext& ctx = m.context();
  const std::size_t n = rows.size();
  std::vector<std::vector<QElem>> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m.at(rows[i], cols[j]));
  QElem det(ctx, Polynomial::constant(ctx.ring(), ctx.field().one()));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      if (piv == n || a[i][c].num().size() + a[i][c].den().size() < a[piv][c].num().size() + a[piv][c].den().size())
        piv = i;
    }
    if (piv == n) return QElem(ctx);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    const QElem pinv = a[c][c].inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const QElem f = a[i][c] * pinv;
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  return det;
}

FieldMatrix evaluate_matrix(const QMatrix& m, std::span<const Scalar> point) {
  if (point.size() != m.context().ring().arity())
    throw Error(ErrorKind::InvalidArgument, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                                std::to_string(m.context().ring().arity()));
  FieldMatrix out(m.context().field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      try {
        out.rows[i][j] = m.at(i, j).evaluate(point);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DenominatorVanishes) throw;
        throw Error(ErrorKind::DenominatorVanishes,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
      }
    }
  return out;
}

FieldMatrix::FieldMatrix(Field f, std::size_t r, std::size_t c)
    : field(f), cols(c), rows(r, std::vector<Scalar>(c, f.zero())) {}

FieldMatrix FieldMatrix::from_rows(Field f, std::vector<std::vector<Scalar>> rs, std::size_t c) {
  FieldMatrix m;
  m.field = f;
  m.cols = c;
  for (const auto& r : rs) {
    if (r.size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (const auto& x : r)
      if (!(x.field() == f)) throw Error(ErrorKind::FieldMismatch, "matrix entry from another field");
  }
  m.rows = std::move(rs);
  return m;
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> idx) const {
  FieldMatrix s(field, rows.size(), idx.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] >= cols) throw Error(ErrorKind::IndexOutOfRange, "column index out of range");
      s.rows[i][j] = rows[i][idx[j]];
    }
  return s;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  if (!(a.field == b.field) || a.cols != b.cols || a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (!(a.rows[i][j] == b.rows[i][j])) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& m, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = m[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank(const FieldMatrix& m) {
  auto rows = m.rows;
  return rref(rows, m.cols).size();
}

FieldMatrix kernel_basis(const FieldMatrix& m) {
  auto rows = m.rows;
  const auto piv = rref(rows, m.cols);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : piv) is_pivot[c] = true;
  FieldMatrix k;
  k.field = m.field;
  k.cols = m.cols;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols, m.field.zero());
    v[f] = m.field.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][f];
    k.rows.push_back(std::move(v));
  }
  return k;
}

Scalar determinant(const FieldMatrix& m) {
  const std::size_t n = m.rows.size();
  if (n != m.cols) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  auto a = m.rows;
  Scalar det = m.field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return m.field.zero();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    const Scalar inv = a[c][c].inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  return det;
}

bool same_row_space(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols != b.cols || !(a.field == b.field)) return false;
  FieldMatrix both = a;
  both.rows.insert(both.rows.end(), b.rows.begin(), b.rows.end());
  const std::size_t r = rank(both);
  return r == rank(a) && r == rank(b);
}

bool same_row_space(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols() || !(a.context() == b.context())) return false;
  const std::size_t r = rank(stack(a, b));
  return r == rank(a) && r == rank(b);
}

}  // namespace algmat
