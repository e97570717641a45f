#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qse {

using Rational = boost::multiprecision::cpp_rational;

// Degree-M polynomial F(n) = sum_l A_l n^l with F(0) = 1 and F(k) = 0 for
// k = 1..M, held as exact rationals.  A_0 = 1 and A_M = (-1)^M / M!.
struct InterpolationPolynomial {
  int degree = 0;                // M
  std::vector<Rational> coeffs;  // A_0..A_M
};

// Cap on the coefficient-vector representation.  Value evaluation
// (interpolation_value) has no such cap.
inline constexpr int kMaxDegree = 20;

// Exact Gaussian elimination on the coupled system
// 1 + sum_{l>=1} A_l k^l = 0 for k = 1..M.
InterpolationPolynomial solve_vandermonde(int M);

// Expands prod_{k=1..M} (1 - n/k) by rational convolution; independent
// closed-form route to the same polynomial.
InterpolationPolynomial product_form(int M);

Rational eval_poly(const InterpolationPolynomial& p, long long n);

// F evaluated at level n directly as prod_{k=1..M} (1 - n/k); used where
// only values on integer levels are needed, for any M >= 0.
Rational interpolation_value(int M, long long n);

double to_double(const Rational& r);

}  // namespace qse
