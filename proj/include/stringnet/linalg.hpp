#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stringnet/matrix.hpp"

namespace sn {

struct Rref {
  Matrix R;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form; pivots are the first nonzero entries in column order.
Rref rref(const Matrix& A);
int rank(const Matrix& A);

// Some x with A x = b (free variables zero), or nullopt if inconsistent.
std::optional<Matrix> solve_linear(const Matrix& A, const Matrix& b);

// Columns form a basis of {x : A x = 0}.
Matrix nullspace(const Matrix& A);

std::optional<Matrix> inverse(const Matrix& A);

// Linearly independent pivot columns of A.
Matrix column_basis(const Matrix& A);

// e = U V with V U = identity(rank e).
std::pair<Matrix, Matrix> rank_factor(const Matrix& e);

// V / span(relations), with the complement spanned by non-pivot coordinates.
class Quotient {
 public:
  Quotient() = default;
  Quotient(int ambient, const std::vector<std::vector<Scalar>>& relations);
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(free_.size()); }
  const std::vector<int>& free_coordinates() const { return free_; }
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  std::vector<Scalar> coords(const std::vector<Scalar>& v) const;
  std::vector<Scalar> lift(const std::vector<Scalar>& q) const;
  bool in_relations(const std::vector<Scalar>& v) const;

 private:
  int n_ = 0;
  Matrix rows_;
  std::vector<int> pivots_, free_;
};

}  // namespace sn
