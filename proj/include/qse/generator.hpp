#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qse/fock.hpp"

namespace qse {

// Real target superposition sum_{n=0}^{M} C_n |n>.  M is declared, not
// inferred: trailing zero coefficients keep the declared cutoff.
struct TargetState {
  int M = 0;
  std::vector<double> coeffs;  // C_0..C_M
};

// Throws std::invalid_argument unless coeffs has length M+1, all entries
// are finite, and sum C_n^2 = 1 within 1e-12.  Vectors are never
// auto-normalized; use normalize() for that.
void validate_target(const TargetState& t);

// TargetState with M = coeffs.size()-1, validated.
TargetState make_target(std::vector<double> coeffs);

// Scales the vector to unit sum of squares (error on the zero vector).
TargetState normalize(std::vector<double> coeffs);

// Raw assembly of f0(n) + sum_{m=1..M} (C_m/sqrt(m!)) [F(n) a^m + a^dag^m F(n)]
// with F the interpolation polynomial for M and f0(n) = C_0 [2(1-n)F(n) - 1].
// Skips normalization checks so that the breakdown of the inverse contract
// H|Psi> = |0> on unnormalized vectors can be demonstrated.
FockOperator assemble_generator(const std::vector<double>& coeffs, int dim);

// Validating front end: Hermitian H with H|0> = |Psi> and H|Psi> = |0>,
// so e^{-iHt} reaches the target at t = (m+1/2)pi.  Requires dim >= 2M+1.
FockOperator build_generator(const TargetState& target, int dim);

// General projector construction
//   sum_n C_n (|0><n| + |n><0|) - C_0 sum_{k<=M} |k><k| + P F P
// with P = I - sum_{k<=M} |k><k| and F = diag(f_diag).  Same generator
// contracts for any f_diag; the diagonal freedom lives above level M.
FockOperator build_projector_form(const TargetState& target,
                                  const std::vector<double>& f_diag, int dim);

// Normal-ordered expansion: (p, q) -> real coefficient of a^dag^p a^q.
// Hermitian for real targets: coefficient(p,q) == coefficient(q,p).
// Zero coefficients are never stored.
struct NormalForm {
  std::map<std::pair<int, int>, double> terms;
};

// Rewrites sum_l c_l (a^dag a)^l into diagonal monomials a^dag^k a^k using
// Stirling numbers of the second kind.  Degree capped at 20.
NormalForm normal_order_number_poly(const std::vector<double>& number_poly);

// Full monomial expansion of the generator: f0 contributes (k,k) terms,
// F(n) a^m contributes (k, k+m) terms and the Hermitian mirrors.  M <= 10.
NormalForm normal_form_of_generator(const TargetState& target);

// Dense reconstruction sum_{(p,q)} c_pq raise^p lower^q on a truncation;
// the independent route back from monomials to a matrix.
FockOperator normal_form_matrix(const NormalForm& nf, int dim);

// F(t) = |<Psi| e^{-iHt} |0>|^2 sampled on `steps` uniform points covering
// [0, t_max]; equals sin^2 t + C_0^2 cos^2 t for normalized targets.
FidelityTrace fidelity_trace(const TargetState& target, int dim, double t_max,
                             int steps);

}  // namespace qse
