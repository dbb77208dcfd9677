#pragma once

#include <vector>

#include "stringnet/matrix.hpp"

namespace sn {

using Vec = std::vector<Scalar>;

// Finite-dimensional associative algebra. mult_table[i] is the matrix of
// left multiplication by the i-th basis element.
class FdAlgebra {
 public:
  explicit FdAlgebra(std::vector<Matrix> mult_table);
  int dim() const { return n_; }
  const Vec& unit() const { return unit_; }
  Vec mul(const Vec& x, const Vec& y) const;
  Matrix left(const Vec& x) const;
  Matrix center_basis() const;
  // Columns span e A e.
  Matrix corner_basis(const Vec& e) const;

 private:
  int n_;
  std::vector<Matrix> L_;
  Vec unit_;
};

// Complete list of primitive orthogonal central idempotents.
std::vector<Vec> decompose_algebra(const std::vector<Matrix>& mult_table);

// Complete list of primitive orthogonal idempotents (not central in general).
std::vector<Vec> primitive_idempotents(const std::vector<Matrix>& mult_table);

// Distinct roots lying in K of a polynomial with coefficients low-to-high.
std::vector<Scalar> roots_in_field(const Vec& poly, const NumberField* K);

// Monic minimal polynomial of x in the unital subalgebra with unit e.
Vec minimal_polynomial(const FdAlgebra& A, const Vec& x, const Vec& e);

Vec poly_gcd(Vec a, Vec b);

}  // namespace sn
