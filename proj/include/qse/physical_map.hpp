#pragma once

#include <complex>

#include "qse/fock.hpp"

namespace qse {

// Medium requirements for realizing the vacuum/one-photon generator with a
// classically pumped nonlinear medium.  All quantities are dimensionless;
// tensor components the matching leaves coupled are reported as the
// combinations that are actually constrained.
struct SusceptibilityReport {
  double p;
  double pump_amplitude;
  double chi3_xxyy_required;        // must vanish: the generator has no a^dag^2 term
  double chi3_xxxy_required;
  double chi3_xxxx_required;
  double linear_combo_xy_required;  // chi1_xy E + chi3_xyyy |E|^2 E
  double linear_combo_xx_required;  // chi1_xx + chi3_xyxy |E|^2
};

// Forward map from the tuning parameter p to medium requirements:
//   chi1_xy E + chi3_xyyy |E|^2 E = -chi3_xxxy E = sqrt(p)
//   chi1_xx + chi3_xyxy |E|^2 = -chi3_xxxx = -2 sqrt(1-p)
// Endpoints p = 0, 1 are excluded (no pump / no linear term to match).
SusceptibilityReport susceptibility_requirements(double p, double pump_amplitude);

// Raman-driven trapped ion: eta is the Lamb-Dicke parameter, k the laser
// detuning index (detuning = k * trap frequency), omega the effective
// two-photon Rabi frequency.
struct IonSpec {
  double eta = 0.1;
  int k = 1;
  Complex omega{1.0, 0.0};
  int dim = 2;
};

// Diagonal operator with
//   <n|f_k|n> = e^{-eta^2/2} sum_{l=0..n} (-eta^2)^l / (l!(l+k)!) n!/(n-l)!
// The sum is finite on each level, so entries are exact up to round-off.
FockOperator ion_f(const IonSpec& spec);

// (1/2) omega f_k(n; eta) (i eta a)^k + H.c.
FockOperator ion_hamiltonian(const IonSpec& spec);

// Small-eta form for k = 1:
//   (i eta/2) e^{-eta^2/2} [omega (1 - (eta^2/2) n) a - omega* a^dag (1 - (eta^2/2) n)]
FockOperator ion_lamb_dicke_approx(const IonSpec& spec);

struct IonGeneratorComparison {
  double frobenius_distance;   // gauged, unit-Frobenius-normalized matrices
  double eta_match_required;   // always sqrt(2)
};

// Phase-gauges the k=1 ion Hamiltonian so its lowering part is real and
// positive, normalizes it and the pure-|1> generator (1-n)a + a^dag(1-n)
// to unit Frobenius norm, and reports their distance on the shared
// truncation.  eta_match_required is the eta at which the approximate
// diagonal factor 1 - (eta^2/2) n coincides with 1 - n.
IonGeneratorComparison compare_ion_generator(const IonSpec& spec);

}  // namespace qse
