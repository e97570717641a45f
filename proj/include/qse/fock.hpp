#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace qse {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// A requested truncation cannot honor a numerical contract (e.g. the
// generator needs dim >= 2M+1 to act exactly on the retained subspace).
// Kept distinct from std::invalid_argument so the CLI can map it to a
// separate exit status.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// State on the truncated Fock space span{|0>, ..., |dim-1>}.
struct StateVector {
  ComplexVector amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
};

// |n> embedded in a dim-dimensional truncation.
StateVector basis_state(int n, int dim);

bool is_normalized(const StateVector& s, double tol = 1e-12);

// Dense operator on the truncated Fock space (hbar = 1 units).  The
// hermitian flag is a promise consumed by evolve(); builders set it only
// when construction guarantees H == H^dag.
struct FockOperator {
  ComplexMatrix entries;
  bool hermitian = false;

  int dim() const { return static_cast<int>(entries.rows()); }
};

enum class Ladder { lower, raise, number };

// lower: <n-1|a|n> = sqrt(n); raise: conjugate transpose; number: diag(n).
// Matrices are exact on the retained subspace; truncation corrupts only
// the last row/column of products that climb past dim-1.
FockOperator ladder_matrix(Ladder kind, int dim);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

// Matrix-vector product.  The result is deliberately not renormalized:
// generation contracts are checked on raw images.
StateVector apply(const FockOperator& op, const StateVector& s);

// e^{-i h t} s via eigendecomposition of the Hermitian matrix, unitary up
// to round-off at any t.
StateVector evolve(const FockOperator& h, double t, const StateVector& s);

// |<a|b>|^2 for normalized inputs; clamped to [0,1] against round-off.
double fidelity(const StateVector& a, const StateVector& b);

struct FidelityTrace {
  std::vector<double> times;
  std::vector<double> fidelities;
};

}  // namespace qse
