#include "qse/state_families.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace qse {

namespace {

constexpr int kMaxBinomialM = 60;

// Exact binomial coefficient; safe for M <= 60 with 128-bit intermediates.
double binomial_coefficient(int M, int n) {
  unsigned __int128 b = 1;
  for (int j = 1; j <= n; ++j) {
    b = b * static_cast<unsigned int>(M - n + j) / static_cast<unsigned int>(j);
  }
  return static_cast<double>(static_cast<std::uint64_t>(b));
}

// x^e with 0^0 = 1.
double pow0(double x, int e) { return e == 0 ? 1.0 : std::pow(x, e); }

}  // namespace

TargetState binomial_target(const BinomialSpec& spec) {
  if (spec.M < 1) throw std::invalid_argument("binomial M must be positive");
  if (spec.M > kMaxBinomialM) {
    throw std::invalid_argument("binomial M capped at " +
                                std::to_string(kMaxBinomialM));
  }
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw std::invalid_argument("binomial p must lie in [0, 1]");
  }
  TargetState t;
  t.M = spec.M;
  t.coeffs.resize(spec.M + 1);
  for (int n = 0; n <= spec.M; ++n) {
    t.coeffs[n] = std::sqrt(binomial_coefficient(spec.M, n) * pow0(spec.p, n) *
                            pow0(1.0 - spec.p, spec.M - n));
  }
  return t;
}

StateVector coherent_reference(double alpha, int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  StateVector s{ComplexVector::Zero(dim)};
  double amp = std::exp(-alpha * alpha / 2.0);
  for (int n = 0; n < dim; ++n) {
    s.amplitudes(n) = amp;
    amp *= alpha / std::sqrt(double(n + 1));
  }
  const double norm2 = s.amplitudes.squaredNorm();
  if (norm2 < 1.0 - 1e-10) {
    throw DimensionError("coherent state truncated too hard: norm deficit " +
                         std::to_string(1.0 - norm2) + " at dim " +
                         std::to_string(dim));
  }
  s.amplitudes /= std::sqrt(norm2);
  return s;
}

double coherent_limit_fidelity(double alpha, int M, int dim) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  const double p = alpha * alpha / double(M);
  if (p > 1.0) {
    throw std::invalid_argument("invalid limit: alpha^2 = " +
                                std::to_string(alpha * alpha) +
                                " exceeds M = " + std::to_string(M));
  }
  const TargetState target = binomial_target({p, M});
  const FockOperator h = build_generator(target, dim);
  const StateVector image = apply(h, basis_state(0, dim));
  return fidelity(image, coherent_reference(alpha, dim));
}

FockOperator kilin_horoshko_generator(int M, int dim) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  if (dim < 2 * M + 1) {
    throw DimensionError("dim " + std::to_string(dim) +
                         " too small; minimum is 2M+1 = " +
                         std::to_string(2 * M + 1));
  }
  double sqrt_mfact = 1.0;
  for (int j = 1; j <= M; ++j) sqrt_mfact *= std::sqrt(double(j));

  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n + M < dim; ++n) {
    // F(n) a^M at (n, n+M) with F = 1 - n/M, mirrored for a^dag^M F(n).
    double climb = 1.0;
    for (int j = 1; j <= M; ++j) climb *= std::sqrt(double(n + j));
    const double v = (1.0 - double(n) / double(M)) * climb / sqrt_mfact;
    h(n, n + M) += v;
    h(n + M, n) += v;
  }
  return {h, true};
}

}  // namespace qse
