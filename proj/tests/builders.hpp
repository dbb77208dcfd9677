#pragma once

#include <memory>

#include "stringnet/fusion_data.hpp"
#include "stringnet/validate.hpp"

namespace sntest {

using namespace sn;

inline std::shared_ptr<FusionCategory> vec_zn(int n, FieldPtr K = NumberField::rationals()) {
  std::vector<std::string> names;
  std::vector<Label> dual;
  for (int g = 0; g < n; ++g) {
    names.push_back("g" + std::to_string(g));
    dual.push_back((n - g) % n);
  }
  auto C = std::make_shared<FusionCategory>("Vec(Z/" + std::to_string(n) + ")", K, names, 0, dual);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) C->set_N(a, b, (a + b) % n, 1);
  C->fill_default_F();
  C->set_spherical_declared(true);
  derive_duality(*C);
  return C;
}

inline FieldPtr q_sqrt5() {
  static FieldPtr K = std::make_shared<NumberField>("Q(r5)", "r", std::vector<Rational>{-5, 0, 1}, 2.236);
  return K;
}

inline std::shared_ptr<FusionCategory> fibonacci() {
  FieldPtr K = q_sqrt5();
  auto C = std::make_shared<FusionCategory>("Fib", K, std::vector<std::string>{"1", "tau"}, 0,
                                            std::vector<Label>{0, 1});
  C->set_N(0, 0, 0, 1);
  C->set_N(0, 1, 1, 1);
  C->set_N(1, 0, 1, 1);
  C->set_N(1, 1, 0, 1);
  C->set_N(1, 1, 1, 1);
  Scalar r = Scalar::generator(K.get());
  Scalar phi = (Scalar(1) + r) / Scalar(2);
  Scalar pinv = phi.inv();
  Matrix F(2, 2);
  F(0, 0) = pinv;
  F(0, 1) = Scalar(1);
  F(1, 0) = pinv;
  F(1, 1) = -pinv;
  C->set_F(1, 1, 1, 1, F);
  C->fill_default_F();
  C->set_spherical_declared(true);
  derive_duality(*C);
  return C;
}

}  // namespace sntest
