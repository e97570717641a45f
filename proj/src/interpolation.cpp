#include "qse/interpolation.hpp"

#include <stdexcept>
#include <string>

namespace qse {

namespace {

void check_degree(int M) {
  if (M < 0) throw std::invalid_argument("degree must be nonnegative");
  if (M > kMaxDegree) {
    throw std::invalid_argument("degree " + std::to_string(M) +
                                " unsupported; coefficient solve is capped at " +
                                std::to_string(kMaxDegree));
  }
}

Rational int_pow(long long base, int exp) {
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

InterpolationPolynomial solve_vandermonde(int M) {
  check_degree(M);
  InterpolationPolynomial poly;
  poly.degree = M;
  poly.coeffs.assign(M + 1, Rational(0));
  poly.coeffs[0] = 1;  // F(0) = 1 forces A_0 = 1
  if (M == 0) return poly;

  // Row k (k = 1..M): sum_{l=1..M} k^l A_l = -1.
  std::vector<std::vector<Rational>> a(M, std::vector<Rational>(M + 1));
  for (int k = 1; k <= M; ++k) {
    for (int l = 1; l <= M; ++l) a[k - 1][l - 1] = int_pow(k, l);
    a[k - 1][M] = -1;
  }

  for (int col = 0; col < M; ++col) {
    int pivot = col;
    while (pivot < M && a[pivot][col] == 0) ++pivot;
    if (pivot == M) throw std::logic_error("singular interpolation system");
    std::swap(a[col], a[pivot]);
    for (int row = 0; row < M; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (int j = col; j <= M; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  for (int l = 0; l < M; ++l) poly.coeffs[l + 1] = a[l][M] / a[l][l];
  return poly;
}

InterpolationPolynomial product_form(int M) {
  check_degree(M);
  InterpolationPolynomial poly;
  poly.degree = M;
  poly.coeffs.assign(M + 1, Rational(0));
  poly.coeffs[0] = 1;
  // Convolve with (1 - n/k) one factor at a time.
  for (int k = 1; k <= M; ++k) {
    for (int l = k; l >= 1; --l) {
      poly.coeffs[l] -= poly.coeffs[l - 1] / k;
    }
  }
  return poly;
}

Rational eval_poly(const InterpolationPolynomial& p, long long n) {
  Rational acc = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = acc * n + *it;
  }
  return acc;
}

Rational interpolation_value(int M, long long n) {
  if (M < 0) throw std::invalid_argument("degree must be nonnegative");
  Rational v = 1;
  for (int k = 1; k <= M; ++k) {
    v *= Rational(k - n, k);
  }
  return v;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace qse
