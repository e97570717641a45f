#pragma once

#include "qse/fock.hpp"
#include "qse/generator.hpp"

namespace qse {

// Binomial photon statistics: p is the single-photon emission probability,
// M the maximum photon number.  Interpolates |M> (p -> 1) and a coherent
// state of amplitude sqrt(pM) (p -> 0, M -> inf).
struct BinomialSpec {
  double p = 0.0;
  int M = 1;
};

// C_n = [ M!/(n!(M-n)!) p^n (1-p)^{M-n} ]^{1/2}, with 0^0 = 1 so the
// p = 0 and p = 1 endpoints are exact.
TargetState binomial_target(const BinomialSpec& spec);

// Truncated coherent state e^{-alpha^2/2} alpha^n / sqrt(n!), renormalized
// on the truncation; errors if the retained norm falls below 1 - 1e-10.
StateVector coherent_reference(double alpha, int dim);

// Fidelity between the generator image of |0> for the binomial target with
// p = alpha^2/M and the truncated coherent state of amplitude alpha.
double coherent_limit_fidelity(double alpha, int M, int dim);

// Number-state generator with the simple interpolation F = 1 - n/M:
// (1/sqrt(M!)) [F a^M + a^dag^M F].  Maps |0> <-> |M> like the full
// degree-M generator but differs from it as a matrix for M >= 2.
FockOperator kilin_horoshko_generator(int M, int dim);

}  // namespace qse
