#include "stringnet/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "stringnet/errors.hpp"
#include "stringnet/linalg.hpp"

namespace sn {

namespace {

const NumberField* field_of(const std::vector<Matrix>& mats) {
  const NumberField* K = NumberField::rationals().get();
  for (const auto& m : mats)
    for (const auto& x : m.data())
      if (x.field()->degree() > 1) return x.field();
  return K;
}

Vec axpy(const Scalar& a, const Vec& x, Vec y) {
  for (size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

void trim(Vec& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// remainder of a modulo b, b nonzero
Vec poly_mod(Vec a, const Vec& b) {
  trim(a);
  Scalar lead = b.back().inv();
  while (a.size() >= b.size()) {
    Scalar f = a.back() * lead;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Scalar poly_eval(const Vec& p, const Scalar& x) {
  Scalar acc;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

struct Splitter {
  const FdAlgebra& A;
  const NumberField* K;
  bool central;
  Matrix Z;  // center basis, used when central

  Matrix span_for(const Vec& e) const {
    if (!central) return A.corner_basis(e);
    Matrix cols(A.dim(), Z.cols());
    for (int j = 0; j < Z.cols(); ++j) {
      Vec v = A.mul(e, Z.col(j));
      for (int i = 0; i < A.dim(); ++i) cols(i, j) = v[i];
    }
    return column_basis(cols);
  }

  void run(const Vec& e, std::vector<Vec>& out) const {
    Matrix S = span_for(e);
    if (S.cols() <= 1) {
      out.push_back(e);
      return;
    }
    std::vector<Vec> cands;
    for (int j = 0; j < S.cols(); ++j) cands.push_back(S.col(j));
    for (int c = 1; c <= 3; ++c)
      for (int j = 0; j < S.cols(); ++j)
        for (int k = 0; k < S.cols(); ++k)
          if (j != k) cands.push_back(axpy(Scalar(c), S.col(k), S.col(j)));
    std::string witness;
    for (const auto& x : cands) {
      Vec m = minimal_polynomial(A, x, e);
      int deg = static_cast<int>(m.size()) - 1;
      if (deg < 2) continue;
      Vec dm;
      for (int i = 1; i <= deg; ++i) dm.push_back(Scalar(i) * m[i]);
      if (poly_gcd(m, dm).size() > 1) continue;
      auto roots = roots_in_field(m, K);
      if (static_cast<int>(roots.size()) < deg) {
        if (witness.empty()) witness = "element " + vec_str(x) + " has minimal polynomial " +
                                       vec_str(m) + " not split over " + K->name();
        continue;
      }
      for (int i = 0; i < deg; ++i) {
        Vec ei = e;
        for (int j = 0; j < deg; ++j) {
          if (j == i) continue;
          Vec factor = axpy(-roots[j], e, x);
          Scalar s = (roots[i] - roots[j]).inv();
          for (auto& f : factor) f *= s;
          ei = A.mul(ei, factor);
        }
        run(ei, out);
      }
      return;
    }
    if (witness.empty()) witness = "no separating element found in a " + std::to_string(S.cols()) +
                                   "-dimensional block";
    throw NotSplit(witness);
  }
};

void check_idempotents(const FdAlgebra& A, const std::vector<Vec>& es, bool central) {
  Vec sum(A.dim());
  for (size_t i = 0; i < es.size(); ++i) {
    if (A.mul(es[i], es[i]) != es[i]) throw ContractViolation("computed idempotent is not idempotent");
    for (size_t j = 0; j < es.size(); ++j)
      if (i != j && !is_zero_vec(A.mul(es[i], es[j])))
        throw ContractViolation("computed idempotents are not orthogonal");
    for (int k = 0; k < A.dim(); ++k) sum[k] += es[i][k];
    if (central) {
      for (int b = 0; b < A.dim(); ++b) {
        Vec eb(A.dim());
        eb[b] = Scalar(1);
        if (A.mul(es[i], eb) != A.mul(eb, es[i]))
          throw ContractViolation("computed idempotent is not central");
      }
    }
  }
  if (sum != A.unit()) throw ContractViolation("computed idempotents do not sum to the unit");
}

void check_semisimple(const FdAlgebra& A, const std::vector<Matrix>& L) {
  int n = A.dim();
  Matrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Matrix P = L[i] * L[j];
      Scalar tr;
      for (int k = 0; k < n; ++k) tr += P(k, k);
      G(i, j) = tr;
      G(j, i) = tr;
    }
  Matrix N = nullspace(G);
  if (N.cols() > 0) throw NotSemisimple("radical element " + vec_str(N.col(0)));
}

}  // namespace

Vec poly_gcd(Vec a, Vec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar s = a.back().inv();
    for (auto& x : a) x *= s;
  }
  return a;
}

FdAlgebra::FdAlgebra(std::vector<Matrix> mult_table) : n_(static_cast<int>(mult_table.size())), L_(std::move(mult_table)) {
  for (const auto& m : L_)
    if (m.rows() != n_ || m.cols() != n_) throw ContractViolation("multiplication table shape mismatch");
  if (n_ == 0) throw ContractViolation("zero algebra");
  // sum_i u_i L_i = I
  Matrix S(n_ * n_, n_), rhs(n_ * n_, 1);
  for (int i = 0; i < n_; ++i)
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) S(r * n_ + c, i) = L_[i](r, c);
  for (int r = 0; r < n_; ++r) rhs(r * n_ + r, 0) = Scalar(1);
  auto u = solve_linear(S, rhs);
  if (!u) throw ContractViolation("algebra has no unit");
  unit_ = u->col(0);
}

Vec FdAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) {
        const Scalar& m = L_[i](r, c);
        if (!m.is_zero() && !y[c].is_zero()) out[r] += x[i] * m * y[c];
      }
  }
  return out;
}

Matrix FdAlgebra::left(const Vec& x) const {
  Matrix M(n_, n_);
  for (int i = 0; i < n_; ++i)
    if (!x[i].is_zero()) M += x[i] * L_[i];
  return M;
}

Matrix FdAlgebra::center_basis() const {
  // z e_i - e_i z = 0 for all i
  Matrix C(n_ * n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int r = 0; r < n_; ++r)
      for (int k = 0; k < n_; ++k) C(i * n_ + r, k) = L_[k](r, i) - L_[i](r, k);
  return nullspace(C);
}

Matrix FdAlgebra::corner_basis(const Vec& e) const {
  Matrix cols(n_, n_);
  for (int j = 0; j < n_; ++j) {
    Vec b(n_);
    b[j] = Scalar(1);
    Vec v = mul(mul(e, b), e);
    for (int i = 0; i < n_; ++i) cols(i, j) = v[i];
  }
  return column_basis(cols);
}

Vec minimal_polynomial(const FdAlgebra& A, const Vec& x, const Vec& e) {
  std::vector<Vec> pw{e};
  for (int k = 1; k <= A.dim() + 1; ++k) {
    Vec next = A.mul(pw.back(), x);
    Matrix P(A.dim(), k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < A.dim(); ++i) P(i, j) = pw[j][i];
    auto sol = solve_linear(P, Matrix::column(next));
    if (sol) {
      Vec m(k + 1);
      for (int j = 0; j < k; ++j) m[j] = -(*sol)(j, 0);
      m[k] = Scalar(1);
      return m;
    }
    pw.push_back(next);
  }
  throw ContractViolation("minimal polynomial search failed");
}

std::vector<Scalar> roots_in_field(const Vec& poly_in, const NumberField* K) {
  Vec poly = poly_in;
  trim(poly);
  std::vector<Scalar> out;
  if (poly.size() < 2) return out;
  Scalar lead = poly.back().inv();
  for (auto& c : poly) c *= lead;
  int m = static_cast<int>(poly.size()) - 1, d = K->degree();
  std::vector<std::vector<Complex>> R(d);
  for (int k = 0; k < d; ++k) {
    std::vector<Complex> mp;
    for (const auto& c : poly) mp.push_back(c.embed(k));
    R[k] = complex_roots(mp);
  }
  const auto& emb = K->embeddings();
  auto try_tuple = [&](const std::vector<Complex>& vals) {
    // solve sum_i c_i emb[k]^i = vals[k] for real rational c
    std::vector<std::vector<Complex>> V(d, std::vector<Complex>(d + 1));
    for (int k = 0; k < d; ++k) {
      Complex p = 1;
      for (int i = 0; i < d; ++i) {
        V[k][i] = p;
        p *= (d == 1 ? Complex(0) : emb[k]);
      }
      V[k][d] = vals[k];
    }
    for (int c = 0; c < d; ++c) {
      int piv = c;
      for (int r = c + 1; r < d; ++r)
        if (std::abs(V[r][c]) > std::abs(V[piv][c])) piv = r;
      std::swap(V[piv], V[c]);
      if (std::abs(V[c][c]) < 1e-30L) return;
      for (int r = 0; r < d; ++r) {
        if (r == c) continue;
        Complex f = V[r][c] / V[c][c];
        for (int k = c; k <= d; ++k) V[r][k] -= f * V[c][k];
      }
    }
    std::vector<Rational> coeffs;
    for (int c = 0; c < d; ++c) {
      Complex v = V[c][d] / V[c][c];
      if (std::fabs(v.imag()) > 1e-8L) return;
      auto q = rationalize(v.real(), 1000000, 1e-9L);
      if (!q) return;
      coeffs.push_back(*q);
    }
    Scalar r(K, coeffs);
    if (!poly_eval(poly, r).is_zero()) return;
    for (const auto& o : out)
      if (o == r) return;
    out.push_back(r);
  };
  std::vector<int> idx(d, 0);
  while (true) {
    std::vector<Complex> vals(d);
    for (int k = 0; k < d; ++k) vals[k] = R[k][idx[k]];
    try_tuple(vals);
    int k = 0;
    while (k < d && ++idx[k] == m) idx[k++] = 0;
    if (k == d) break;
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) {
    long double x = a.embed(0).real(), y = b.embed(0).real();
    if (x != y) return x < y;
    return a.embed(0).imag() < b.embed(0).imag();
  });
  return out;
}

std::vector<Vec> decompose_algebra(const std::vector<Matrix>& mult_table) {
  FdAlgebra A(mult_table);
  check_semisimple(A, mult_table);
  Splitter s{A, field_of(mult_table), true, A.center_basis()};
  std::vector<Vec> out;
  s.run(A.unit(), out);
  check_idempotents(A, out, true);
  return out;
}

std::vector<Vec> primitive_idempotents(const std::vector<Matrix>& mult_table) {
  FdAlgebra A(mult_table);
  check_semisimple(A, mult_table);
  Splitter sc{A, field_of(mult_table), true, A.center_basis()};
  std::vector<Vec> central;
  sc.run(A.unit(), central);
  Splitter sp{A, sc.K, false, Matrix()};
  std::vector<Vec> out;
  for (const auto& c : central) sp.run(c, out);
  check_idempotents(A, out, false);
  return out;
}

}  // namespace sn
