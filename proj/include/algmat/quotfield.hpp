#ifndef ALGMAT_QUOTFIELD_HPP
#define ALGMAT_QUOTFIELD_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "algmat/groebner.hpp"

namespace algmat {

/// The fraction field k(P) of S/P, represented through a grevlex basis of P.
class QContext {
 public:
  explicit QContext(IdealPresentation ideal, const GbLimits& limits = {});

  const IdealPresentation& ideal() const { return d_->ideal; }
  const Ring& ring() const { return d_->ideal.ring(); }
  const Field& field() const { return d_->ideal.ring().field(); }
  const GroebnerBasis& basis() const { return *d_->gb; }
  Polynomial reduce(const Polynomial& f) const { return d_->gb->normal_form(f); }

  friend bool operator==(const QContext& a, const QContext& b) { return a.d_ == b.d_; }

 private:
  struct Data {
    IdealPresentation ideal;
    std::shared_ptr<const GroebnerBasis> gb;
  };
  std::shared_ptr<const Data> d_;
};

/// [num]/[den] with both parts stored as normal forms and den not in P.
class QElem {
 public:
  explicit QElem(QContext ctx);  // zero
  /// Class of f/1.
  QElem(QContext ctx, const Polynomial& f);
  /// Throws DivisionByZero when den lies in P.
  QElem(QContext ctx, const Polynomial& num, const Polynomial& den);

  const QContext& context() const { return ctx_; }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  QElem operator-() const;
  QElem inv() const;
  friend QElem operator+(const QElem& a, const QElem& b);
  friend QElem operator-(const QElem& a, const QElem& b);
  friend QElem operator*(const QElem& a, const QElem& b);
  friend QElem operator/(const QElem& a, const QElem& b);
  friend bool operator==(const QElem& a, const QElem& b);

  /// Evaluates the stored representatives; throws DenominatorVanishes.
  Scalar evaluate(std::span<const Scalar> point) const;
  std::string to_string() const;

 private:
  void normalize();
  void require_same(const QElem& b) const;
  QContext ctx_;
  Polynomial num_, den_;
};

/// Dense matrix over k(P).
class QMatrix {
 public:
  QMatrix(QContext ctx, std::size_t rows, std::size_t cols);

  const QContext& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const QElem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  QElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::vector<QElem> row(std::size_t i) const;
  QMatrix transpose() const;
  QMatrix select_columns(std::span<const std::size_t> cols) const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  bool is_zero() const;

 private:
  QContext ctx_;
  std::size_t rows_, cols_;
  std::vector<QElem> data_;
};

/// Dense matrix over the ground field.
struct FieldMatrix {
  Field field;
  std::size_t cols = 0;
  std::vector<std::vector<Scalar>> rows;

  FieldMatrix() = default;
  FieldMatrix(Field f, std::size_t r, std::size_t c);
  static FieldMatrix from_rows(Field f, std::vector<std::vector<Scalar>> rows, std::size_t cols);
  std::size_t row_count() const { return rows.size(); }
  FieldMatrix select_columns(std::span<const std::size_t> idx) const;
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
};

std::size_t rank(const QMatrix& m);
/// Rows spanning the right kernel {a : m * a^T = 0}. Free columns are taken in
/// ascending order, each set to 1 with the other free columns 0.
QMatrix kernel_basis(const QMatrix& m);
/// Determinant of the submatrix on the given rows and columns.
QElem minor(const QMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);
/// Throws DenominatorVanishes naming the first failing entry.
FieldMatrix evaluate_matrix(const QMatrix& m, std::span<const Scalar> point);
/// Stacks the rows of a and b (same context and width).
QMatrix stack(const QMatrix& a, const QMatrix& b);
/// Lifts a ground-field matrix into k(P).
QMatrix lift(const FieldMatrix& m, const QContext& ctx);

std::size_t rank(const FieldMatrix& m);
FieldMatrix kernel_basis(const FieldMatrix& m);
Scalar determinant(const FieldMatrix& m);
/// Equal row spaces (mutual rank test).
bool same_row_space(const FieldMatrix& a, const FieldMatrix& b);
bool same_row_space(const QMatrix& a, const QMatrix& b);

}  // namespace algmat

#endif
