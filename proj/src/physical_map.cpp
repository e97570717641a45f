#include "qse/physical_map.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qse/generator.hpp"

namespace qse {

namespace {

void check_ion_spec(const IonSpec& spec) {
  if (!(spec.eta > 0.0) || !std::isfinite(spec.eta)) {
    throw std::invalid_argument("Lamb-Dicke parameter eta must be positive");
  }
  if (spec.k < 1) throw std::invalid_argument("detuning index k must be >= 1");
  if (spec.dim < 1) throw std::invalid_argument("dimension must be positive");
}

}  // namespace

SusceptibilityReport susceptibility_requirements(double p, double pump_amplitude) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("p must lie strictly inside (0, 1); endpoints "
                                "have no pump or linear term to match");
  }
  if (!(pump_amplitude > 0.0) || !std::isfinite(pump_amplitude)) {
    throw std::invalid_argument("pump amplitude must be positive");
  }
  const double sqrt_p = std::sqrt(p);
  const double diag = 2.0 * std::sqrt(1.0 - p);
  SusceptibilityReport r;
  r.p = p;
  r.pump_amplitude = pump_amplitude;
  r.chi3_xxyy_required = 0.0;
  r.chi3_xxxy_required = -sqrt_p / pump_amplitude;
  r.chi3_xxxx_required = diag;
  r.linear_combo_xy_required = sqrt_p;
  r.linear_combo_xx_required = -diag;
  return r;
}

FockOperator ion_f(const IonSpec& spec) {
  check_ion_spec(spec);
  const double eta2 = spec.eta * spec.eta;
  const double envelope = std::exp(-eta2 / 2.0);
  ComplexMatrix m = ComplexMatrix::Zero(spec.dim, spec.dim);
  for (int n = 0; n < spec.dim; ++n) {
    // (-eta^2)^l / (l!(l+k)!) * n!/(n-l)!, accumulated term by term; the
    // series terminates at l = n because a^dag^l a^l kills |n> beyond that.
    long double term = 1.0L;
    for (int j = 1; j <= spec.k; ++j) term /= j;  // l = 0: 1/k!
    long double sum = term;
    for (int l = 1; l <= n; ++l) {
      term *= -static_cast<long double>(eta2) * (n - l + 1);
      term /= static_cast<long double>(l) * (l + spec.k);
      sum += term;
    }
    m(n, n) = envelope * static_cast<double>(sum);
  }
  return {m, true};
}

FockOperator ion_hamiltonian(const IonSpec& spec) {
  check_ion_spec(spec);
  const FockOperator f = ion_f(spec);
  ComplexMatrix lower_k = ComplexMatrix::Identity(spec.dim, spec.dim);
  const ComplexMatrix lower = ladder_matrix(Ladder::lower, spec.dim).entries;
  for (int j = 0; j < spec.k; ++j) lower_k = lower_k * lower;

  Complex i_eta_k = 1.0;
  for (int j = 0; j < spec.k; ++j) i_eta_k *= Complex(0.0, spec.eta);

  const ComplexMatrix half = 0.5 * spec.omega * i_eta_k * (f.entries * lower_k);
  ComplexMatrix h = half + half.adjoint();
  return {h, true};
}

FockOperator ion_lamb_dicke_approx(const IonSpec& spec) {
  check_ion_spec(spec);
  if (spec.k != 1) {
    throw std::invalid_argument("Lamb-Dicke form is stated for k = 1 only");
  }
  const double eta2 = spec.eta * spec.eta;
  const double envelope = std::exp(-eta2 / 2.0);
  ComplexMatrix h = ComplexMatrix::Zero(spec.dim, spec.dim);
  for (int n = 0; n + 1 < spec.dim; ++n) {
    // (1 - (eta^2/2) n) a at (n, n+1), minus the conjugate at (n+1, n).
    const double factor = (1.0 - eta2 / 2.0 * n) * std::sqrt(double(n + 1));
    const Complex v = Complex(0.0, 0.5 * spec.eta) * envelope * factor;
    h(n, n + 1) += v * spec.omega;
    h(n + 1, n) += std::conj(v * spec.omega);
  }
  return {h, true};
}

IonGeneratorComparison compare_ion_generator(const IonSpec& spec) {
  check_ion_spec(spec);
  if (spec.k != 1) {
    throw std::invalid_argument("generator comparison is stated for k = 1 only");
  }
  // Gauge a -> e^{i theta} a with theta chosen so the lowering-part scalar
  // (i/2) eta omega e^{i theta} becomes real and positive; realized by
  // conjugating with diag(e^{i n theta}).
  const double theta = -std::arg(spec.omega) - std::numbers::pi / 2.0;
  ComplexVector phases(spec.dim);
  for (int n = 0; n < spec.dim; ++n) {
    phases(n) = std::exp(Complex(0.0, theta * n));
  }
  const ComplexMatrix ion = ion_hamiltonian(spec).entries;
  ComplexMatrix gauged(spec.dim, spec.dim);
  for (int i = 0; i < spec.dim; ++i) {
    for (int j = 0; j < spec.dim; ++j) {
      gauged(i, j) = std::conj(phases(i)) * ion(i, j) * phases(j);
    }
  }

  TargetState one_photon{1, {0.0, 1.0}};
  const ComplexMatrix gen = build_generator(one_photon, spec.dim).entries;

  const double ion_norm = gauged.norm();
  const double gen_norm = gen.norm();
  if (ion_norm == 0.0 || gen_norm == 0.0) {
    throw std::invalid_argument("degenerate comparison: zero matrix");
  }
  IonGeneratorComparison cmp;
  cmp.frobenius_distance = (gauged / ion_norm - gen / gen_norm).norm();
  cmp.eta_match_required = std::sqrt(2.0);
  return cmp;
}

}  // namespace qse
