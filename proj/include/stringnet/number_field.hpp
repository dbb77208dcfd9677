#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sn {

using Rational = mpq_class;
using Complex = std::complex<long double>;

// Q(alpha) with alpha a root of a monic polynomial over Q.
class NumberField {
 public:
  // minpoly holds c_0..c_d with c_d == 1.
  NumberField(std::string name, std::string generator,
              std::vector<Rational> minpoly,
              std::optional<double> embedding_hint = std::nullopt);

  static std::shared_ptr<const NumberField> rationals();

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::string& name() const { return name_; }
  const std::string& generator() const { return generator_; }
  const std::vector<Rational>& minimal_polynomial() const { return minpoly_; }
  std::optional<double> embedding_hint() const { return hint_; }
  // false when the degree is above 4 and irreducibility was taken on trust
  bool irreducibility_verified() const { return verified_; }

  // alpha^k reduced to degree < d, for 0 <= k <= 2d-2
  const std::vector<Rational>& power(int k) const { return powers_.at(k); }

  // numeric roots of the minimal polynomial; the hinted root comes first
  const std::vector<Complex>& embeddings() const { return embeddings_; }

  bool same_as(const NumberField& o) const;

 private:
  std::string name_, generator_;
  std::vector<Rational> minpoly_;
  std::optional<double> hint_;
  bool verified_ = true;
  std::vector<std::vector<Rational>> powers_;
  std::vector<Complex> embeddings_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Durand-Kerner on a monic complex polynomial given low-to-high.
std::vector<Complex> complex_roots(const std::vector<Complex>& monic);

// Rational approximation by continued fractions, denominator bounded.
std::optional<Rational> rationalize(long double x, long max_den, long double tol);

// Irreducibility over Q for degree <= 4 (rational-root and quadratic-factor tests).
bool irreducible_over_q(const std::vector<Rational>& monic);

}  // namespace sn
