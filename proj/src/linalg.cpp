#include "stringnet/linalg.hpp"

#include "stringnet/errors.hpp"

namespace sn {

Rref rref(const Matrix& A) {
  Rref out{A, {}};
  Matrix& R = out.R;
  int rows = R.rows(), cols = R.cols(), row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = row;
    while (piv < rows && R(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != row)
      for (int k = 0; k < cols; ++k) std::swap(R(piv, k), R(row, k));
    Scalar s = R(row, col).inv();
    for (int k = col; k < cols; ++k)
      if (!R(row, k).is_zero()) R(row, k) *= s;
    for (int i = 0; i < rows; ++i) {
      if (i == row || R(i, col).is_zero()) continue;
      Scalar f = R(i, col);
      for (int k = col; k < cols; ++k)
        if (!R(row, k).is_zero()) R(i, k) -= f * R(row, k);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

int rank(const Matrix& A) { return static_cast<int>(rref(A).pivots.size()); }

std::optional<Matrix> solve_linear(const Matrix& A, const Matrix& b) {
  if (A.rows() != b.rows()) throw ContractViolation("solve_linear: A and b row counts differ");
  Rref r = rref(hstack(A, b));
  int n = A.cols();
  Matrix x(n, b.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    int p = r.pivots[i];
    if (p >= n) return std::nullopt;
    for (int j = 0; j < b.cols(); ++j) x(p, j) = r.R(static_cast<int>(i), n + j);
  }
  return x;
}

Matrix nullspace(const Matrix& A) {
  Rref r = rref(A);
  int n = A.cols();
  std::vector<bool> is_piv(n, false);
  for (int p : r.pivots) is_piv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix N(n, static_cast<int>(free.size()));
  for (size_t k = 0; k < free.size(); ++k) {
    int f = free[k];
    N(f, static_cast<int>(k)) = Scalar(1);
    for (size_t i = 0; i < r.pivots.size(); ++i)
      N(r.pivots[i], static_cast<int>(k)) = -r.R(static_cast<int>(i), f);
  }
  return N;
}

std::optional<Matrix> inverse(const Matrix& A) {
  if (A.rows() != A.cols()) throw ContractViolation("inverse of a non-square matrix");
  int n = A.rows();
  Rref r = rref(hstack(A, Matrix::identity(n)));
  if (static_cast<int>(r.pivots.size()) < n || (n > 0 && r.pivots[n - 1] != n - 1))
    return std::nullopt;
  return r.R.block(0, n, n, n);
}

Matrix column_basis(const Matrix& A) {
  Rref r = rref(A);
  Matrix C(A.rows(), static_cast<int>(r.pivots.size()));
  for (size_t k = 0; k < r.pivots.size(); ++k)
    for (int i = 0; i < A.rows(); ++i) C(i, static_cast<int>(k)) = A(i, r.pivots[k]);
  return C;
}

std::pair<Matrix, Matrix> rank_factor(const Matrix& e) {
  if (e.rows() != e.cols()) throw ContractViolation("rank_factor: matrix is not square");
  Matrix d = e * e - e;
  if (!d.is_zero()) {
    const Scalar* worst = nullptr;
    int wi = 0, wj = 0;
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j) {
        const Scalar& x = d(i, j);
        if (x.is_zero()) continue;
        if (!worst || x.top_degree() > worst->top_degree()) {
          worst = &x;
          wi = i;
          wj = j;
        }
      }
    throw IdempotentViolation("e*e - e has entry (" + std::to_string(wi) + "," +
                              std::to_string(wj) + ") = " + worst->str());
  }
  Rref r = rref(e);
  int rk = static_cast<int>(r.pivots.size());
  Matrix U(e.rows(), rk), V = r.R.block(0, 0, rk, e.cols());
  for (int k = 0; k < rk; ++k)
    for (int i = 0; i < e.rows(); ++i) U(i, k) = e(i, r.pivots[k]);
  return {U, V};
}

Quotient::Quotient(int ambient, const std::vector<std::vector<Scalar>>& relations) : n_(ambient) {
  Matrix R(static_cast<int>(relations.size()), ambient);
  for (size_t i = 0; i < relations.size(); ++i) {
    if (static_cast<int>(relations[i].size()) != ambient)
      throw ContractViolation("relation vector has wrong length");
    for (int j = 0; j < ambient; ++j) R(static_cast<int>(i), j) = relations[i][j];
  }
  Rref r = rref(R);
  pivots_ = r.pivots;
  rows_ = r.R.block(0, 0, static_cast<int>(pivots_.size()), ambient);
  std::vector<bool> is_piv(ambient, false);
  for (int p : pivots_) is_piv[p] = true;
  for (int j = 0; j < ambient; ++j)
    if (!is_piv[j]) free_.push_back(j);
}

std::vector<Scalar> Quotient::reduce(std::vector<Scalar> v) const {
  if (static_cast<int>(v.size()) != n_) throw ContractViolation("quotient: wrong vector length");
  for (size_t i = 0; i < pivots_.size(); ++i) {
    Scalar f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      const Scalar& x = rows_(static_cast<int>(i), j);
      if (!x.is_zero()) v[j] -= f * x;
    }
  }
  return v;
}

std::vector<Scalar> Quotient::coords(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  std::vector<Scalar> q(free_.size());
  for (size_t k = 0; k < free_.size(); ++k) q[k] = r[free_[k]];
  return q;
}

std::vector<Scalar> Quotient::lift(const std::vector<Scalar>& q) const {
  std::vector<Scalar> v(n_);
  for (size_t k = 0; k < free_.size(); ++k) v[free_[k]] = q[k];
  return v;
}

bool Quotient::in_relations(const std::vector<Scalar>& v) const {
  for (const auto& x : reduce(v))
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace sn
