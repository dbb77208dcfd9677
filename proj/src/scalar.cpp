#include "stringnet/scalar.hpp"

#include <sstream>

#include "stringnet/errors.hpp"

namespace sn {

const NumberField* common_field(const NumberField* a, const NumberField* b) {
  if (a == b) return a;
  if (a->degree() == 1) return b;
  if (b->degree() == 1) return a;
  if (a->same_as(*b)) return a;
  throw FieldError("scalars from different fields '" + a->name() + "' and '" + b->name() + "'");
}

Scalar::Scalar() : K_(NumberField::rationals().get()), c_{Rational(0)} {}
Scalar::Scalar(long n) : K_(NumberField::rationals().get()), c_{Rational(n)} {}
Scalar::Scalar(const Rational& q) : K_(NumberField::rationals().get()), c_{q} {}

Scalar::Scalar(const NumberField* K, std::vector<Rational> coeffs) : K_(K), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) > K_->degree())
    throw ContractViolation("too many coefficients for field " + K_->name());
  c_.resize(K_->degree(), Rational(0));
}

Scalar Scalar::zero(const NumberField* K) { return Scalar(K, {}); }
Scalar Scalar::one(const NumberField* K) { return Scalar(K, {Rational(1)}); }
Scalar Scalar::generator(const NumberField* K) {
  if (K->degree() == 1) return Scalar(K, {-K->minimal_polynomial()[0]});
  return Scalar(K, {Rational(0), Rational(1)});
}

void Scalar::adopt(const NumberField* K) {
  if (K == K_) return;
  K_ = K;
  c_.resize(K->degree(), Rational(0));
}

bool Scalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

int Scalar::top_degree() const {
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    if (c_[i] != 0) return i;
  return -1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt(common_field(K_, o.K_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  adopt(common_field(K_, o.K_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const NumberField* K = common_field(K_, o.K_);
  if (o.c_.size() == 1 || o.is_rational()) {
    Rational q = o.c_[0];
    adopt(K);
    for (auto& x : c_) x *= q;
    return *this;
  }
  if (c_.size() == 1 || is_rational()) {
    Rational q = c_[0];
    c_ = o.c_;
    K_ = K;
    for (auto& x : c_) x *= q;
    return *this;
  }
  int d = K->degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  std::vector<Rational> out(d, Rational(0));
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& p = K->power(k);
    for (int i = 0; i < d; ++i)
      if (p[i] != 0) out[i] += prod[k] * p[i];
  }
  K_ = K;
  c_ = std::move(out);
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ContractViolation("division by zero scalar");
  int d = K_->degree();
  if (d == 1 || is_rational()) {
    Scalar r = Scalar::zero(K_);
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // solve M x = e_0 where column j of M is this * alpha^j
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d + 1, Rational(0)));
  for (int j = 0; j < d; ++j) {
    Scalar basis = Scalar::zero(K_);
    basis.c_[j] = 1;
    Scalar col = *this * basis;
    for (int i = 0; i < d; ++i) M[i][j] = col.c_[i];
  }
  M[0][d] = 1;
  for (int col = 0, row = 0; col < d; ++col, ++row) {
    int piv = row;
    while (piv < d && M[piv][col] == 0) ++piv;
    if (piv == d) throw FieldError("non-invertible element in field " + K_->name());
    std::swap(M[piv], M[row]);
    Rational s = M[row][col];
    for (int k = col; k <= d; ++k) M[row][k] /= s;
    for (int i = 0; i < d; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rational f = M[i][col];
      for (int k = col; k <= d; ++k) M[i][k] -= f * M[row][k];
    }
  }
  std::vector<Rational> x(d);
  for (int i = 0; i < d; ++i) x[i] = M[i][d];
  return Scalar(K_, std::move(x));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
  size_t n = std::max(c_.size(), o.c_.size());
  if (K_ != o.K_ && c_.size() > 1 && o.c_.size() > 1 && !K_->same_as(*o.K_)) return false;
  for (size_t i = 0; i < n; ++i) {
    Rational a = i < c_.size() ? c_[i] : Rational(0);
    Rational b = i < o.c_.size() ? o.c_[i] : Rational(0);
    if (a != b) return false;
  }
  return true;
}

Complex Scalar::embed(int k) const {
  if (c_.size() == 1) return Complex((long double)c_[0].get_d(), 0);
  Complex a = K_->embeddings().at(k), acc = 0;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    acc = acc * a + Complex((long double)c_[i].get_d(), 0);
  return acc;
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational q = c_[i];
    bool neg = q < 0;
    if (neg) q = -q;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << q.get_str();
      continue;
    }
    if (q != 1) os << q.get_str() << "*";
    os << K_->generator();
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace sn
