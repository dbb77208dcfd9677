#pragma once

#include <string>
#include <vector>

#include "stringnet/number_field.hpp"

namespace sn {

// Element of a number field, stored as coefficients in powers of the generator.
// A scalar over Q is promoted silently when combined with a larger field.
class Scalar {
 public:
  Scalar();
  Scalar(long n);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(const NumberField* K, std::vector<Rational> coeffs);

  static Scalar zero(const NumberField* K);
  static Scalar one(const NumberField* K);
  static Scalar generator(const NumberField* K);

  const NumberField* field() const { return K_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  const Rational& rational_part() const { return c_[0]; }
  // index of the highest nonzero coefficient, -1 for zero
  int top_degree() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inv() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // value under the k-th complex embedding of the field
  Complex embed(int k = 0) const;
  std::string str() const;

 private:
  void adopt(const NumberField* K);
  const NumberField* K_;
  std::vector<Rational> c_;
};

const NumberField* common_field(const NumberField* a, const NumberField* b);

}  // namespace sn
