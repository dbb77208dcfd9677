#include "stringnet/number_field.hpp"

#include <algorithm>
#include <cmath>

#include "stringnet/errors.hpp"

namespace sn {

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// integer primitive multiple of a rational polynomial
std::vector<mpz_class> integerize(const std::vector<Rational>& p) {
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, c.get_den());
  std::vector<mpz_class> out;
  for (const auto& c : p) {
    Rational v = c * l;
    out.push_back(v.get_num());
  }
  return out;
}

Rational eval(const std::vector<mpz_class>& p, const Rational& x) {
  Rational acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
  return acc;
}

bool has_rational_root(const std::vector<mpz_class>& p) {
  if (p.front() == 0) return true;
  auto ps = divisors(p.front());
  auto qs = divisors(p.back());
  for (const auto& a : ps)
    for (const auto& b : qs)
      for (int s : {1, -1}) {
        Rational r(s * a, b);
        r.canonicalize();
        if (eval(p, r) == 0) return true;
      }
  return false;
}

bool has_quadratic_factor(const std::vector<mpz_class>& a) {
  // a[0..4], looking for (p2 x^2 + p1 x + p0)(q2 x^2 + q1 x + q0)
  auto d4 = divisors(a[4]);
  auto d0 = divisors(a[0]);
  for (const auto& p2abs : d4) {
    for (int s2 : {1, -1}) {
      mpz_class p2 = s2 * p2abs, q2 = a[4] / p2;
      for (const auto& p0abs : d0) {
        for (int s0 : {1, -1}) {
          mpz_class p0 = s0 * p0abs, q0 = a[0] / p0;
          mpz_class det = q2 * p0 - p2 * q0;
          auto check = [&](const mpz_class& p1, const mpz_class& q1) {
            return p2 * q1 + p1 * q2 == a[3] && p1 * q0 + p0 * q1 == a[1] &&
                   p2 * q0 + p1 * q1 + p0 * q2 == a[2];
          };
          if (det != 0) {
            mpz_class np1 = a[3] * p0 - p2 * a[1];
            mpz_class nq1 = q2 * a[1] - q0 * a[3];
            if (np1 % det != 0 || nq1 % det != 0) continue;
            if (check(np1 / det, nq1 / det)) return true;
          } else {
            mpz_class bound = abs(a[1]) + abs(a[2]) + abs(a[3]) + 2;
            for (mpz_class p1 = -bound; p1 <= bound; ++p1) {
              if (p2 == 0) continue;
              mpz_class rest = a[3] - p1 * q2;
              if (rest % p2 != 0) continue;
              if (check(p1, rest / p2)) return true;
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

bool irreducible_over_q(const std::vector<Rational>& monic) {
  int d = static_cast<int>(monic.size()) - 1;
  if (d <= 1) return true;
  auto p = integerize(monic);
  if (has_rational_root(p)) return false;
  if (d <= 3) return true;
  if (d == 4) return !has_quadratic_factor(p);
  return true;
}

std::vector<Complex> complex_roots(const std::vector<Complex>& monic) {
  int n = static_cast<int>(monic.size()) - 1;
  std::vector<Complex> z(n);
  if (n <= 0) return z;
  auto f = [&](Complex x) {
    Complex acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + monic[i];
    return acc;
  };
  auto df = [&](Complex x) {
    Complex acc = 0;
    for (int i = n; i >= 1; --i) acc = acc * x + monic[i] * (long double)i;
    return acc;
  };
  long double radius = 1;
  for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::abs(monic[i]));
  Complex seed(0.4L, 0.9L);
  Complex w = 1;
  for (int i = 0; i < n; ++i) {
    z[i] = w * radius * 0.5L;
    w *= seed;
  }
  for (int it = 0; it < 2000; ++it) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      Complex den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      if (std::abs(den) == 0) den = 1e-30L;
      Complex step = f(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-30L) break;
  }
  for (auto& r : z) {
    for (int it = 0; it < 20; ++it) {
      Complex d = df(r);
      if (std::abs(d) == 0) break;
      r -= f(r) / d;
    }
  }
  return z;
}

std::optional<Rational> rationalize(long double x, long max_den, long double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double r = x;
  for (int it = 0; it < 64; ++it) {
    long double fl = std::floor(r);
    if (std::fabs(fl) > 1e18L) return std::nullopt;
    mpz_class a(static_cast<double>(fl));
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    Rational q(h1, k1);
    q.canonicalize();
    if (std::fabs(x - (long double)q.get_d()) <= tol) return q;
    long double frac = r - fl;
    if (frac < 1e-30L) break;
    r = 1 / frac;
  }
  if (k1 == 0) return std::nullopt;
  Rational q(h1, k1);
  q.canonicalize();
  if (std::fabs(x - (long double)q.get_d()) <= tol) return q;
  return std::nullopt;
}

NumberField::NumberField(std::string name, std::string generator,
                         std::vector<Rational> minpoly,
                         std::optional<double> embedding_hint)
    : name_(std::move(name)),
      generator_(std::move(generator)),
      minpoly_(std::move(minpoly)),
      hint_(embedding_hint) {
  if (minpoly_.size() < 2 || minpoly_.back() != 1)
    throw FieldError("minimal polynomial of field '" + name_ + "' must be monic of degree >= 1");
  int d = degree();
  if (d <= 4) {
    if (!irreducible_over_q(minpoly_))
      throw FieldError("minimal polynomial of field '" + name_ + "' is reducible over Q");
  } else {
    verified_ = false;
  }
  powers_.assign(std::max(1, 2 * d - 1), std::vector<Rational>(d, Rational(0)));
  for (int k = 0; k < static_cast<int>(powers_.size()); ++k) {
    if (k < d) {
      powers_[k][k] = 1;
      continue;
    }
    // alpha * alpha^{k-1}
    const auto& prev = powers_[k - 1];
    std::vector<Rational> next(d, Rational(0));
    for (int i = 0; i + 1 < d; ++i) next[i + 1] = prev[i];
    const Rational& top = prev[d - 1];
    if (top != 0)
      for (int i = 0; i < d; ++i) next[i] -= top * minpoly_[i];
    powers_[k] = next;
  }
  std::vector<Complex> mp;
  for (const auto& c : minpoly_) mp.emplace_back((long double)c.get_d(), 0.0L);
  embeddings_ = complex_roots(mp);
  for (auto& z : embeddings_)
    if (std::fabs(z.imag()) < 1e-25L) z = Complex(z.real(), 0);
  std::sort(embeddings_.begin(), embeddings_.end(), [&](const Complex& a, const Complex& b) {
    if (hint_) {
      long double da = std::abs(a - (long double)*hint_), db = std::abs(b - (long double)*hint_);
      if (std::fabs(da - db) > 1e-12L) return da < db;
    }
    if (std::fabs(a.real() - b.real()) > 1e-12L) return a.real() > b.real();
    return a.imag() > b.imag();
  });
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const auto q = std::make_shared<const NumberField>(
      "Q", "x", std::vector<Rational>{Rational(0), Rational(1)});
  return q;
}

bool NumberField::same_as(const NumberField& o) const {
  return this == &o || (minpoly_ == o.minpoly_ && generator_ == o.generator_);
}

}  // namespace sn
