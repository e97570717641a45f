#include "qse/fock.hpp"

#include <cmath>
#include <string>

namespace qse {

namespace {

void check_dim(int dim) {
  if (dim < 1) {
    throw std::invalid_argument("Fock-space dimension must be positive, got " +
                                std::to_string(dim));
  }
}

}  // namespace

StateVector basis_state(int n, int dim) {
  check_dim(dim);
  if (n < 0 || n >= dim) {
    throw std::invalid_argument("basis index " + std::to_string(n) +
                                " outside truncation of dimension " +
                                std::to_string(dim));
  }
  StateVector s{ComplexVector::Zero(dim)};
  s.amplitudes(n) = 1.0;
  return s;
}

bool is_normalized(const StateVector& s, double tol) {
  return std::abs(s.amplitudes.squaredNorm() - 1.0) <= tol;
}

FockOperator ladder_matrix(Ladder kind, int dim) {
  check_dim(dim);
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  switch (kind) {
    case Ladder::lower:
      for (int n = 1; n < dim; ++n) m(n - 1, n) = std::sqrt(double(n));
      return {m, false};
    case Ladder::raise:
      for (int n = 1; n < dim; ++n) m(n, n - 1) = std::sqrt(double(n));
      return {m, false};
    case Ladder::number:
      for (int n = 0; n < dim; ++n) m(n, n) = double(n);
      return {m, true};
  }
  throw std::invalid_argument("unknown ladder kind");
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

StateVector apply(const FockOperator& op, const StateVector& s) {
  if (op.dim() != s.dim()) {
    throw std::invalid_argument("operator dimension " +
                                std::to_string(op.dim()) +
                                " does not match state dimension " +
                                std::to_string(s.dim()));
  }
  return {op.entries * s.amplitudes};
}

StateVector evolve(const FockOperator& h, double t, const StateVector& s) {
  if (h.dim() != s.dim()) {
    throw std::invalid_argument("operator dimension " +
                                std::to_string(h.dim()) +
                                " does not match state dimension " +
                                std::to_string(s.dim()));
  }
  if (!h.hermitian || !is_hermitian(h.entries)) {
    throw std::invalid_argument("evolve requires a Hermitian generator");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.entries);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  ComplexVector in_eigenbasis = es.eigenvectors().adjoint() * s.amplitudes;
  for (int j = 0; j < h.dim(); ++j) {
    in_eigenbasis(j) *= std::exp(Complex(0.0, -es.eigenvalues()(j) * t));
  }
  return {es.eigenvectors() * in_eigenbasis};
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("fidelity requires equal dimensions");
  }
  // Tolerance is looser than the 1e-12 normalization contract so that
  // states carried through evolve (norm preserved to 1e-10) still qualify.
  const double tol = 1e-8;
  if (std::abs(a.amplitudes.squaredNorm() - 1.0) > tol ||
      std::abs(b.amplitudes.squaredNorm() - 1.0) > tol) {
    throw std::invalid_argument("fidelity requires normalized states");
  }
  double f = std::norm(a.amplitudes.dot(b.amplitudes));
  if (f < 0.0) f = 0.0;
  if (f > 1.0) {
    if (f > 1.0 + 1e-12) throw std::runtime_error("fidelity exceeded 1");
    f = 1.0;
  }
  return f;
}

}  // namespace qse
