#include "qse/generator.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "qse/interpolation.hpp"

namespace qse {

namespace {

// sqrt(top * (top-1) * ... * (top-count+1)); the matrix element of a
// count-step ladder climb ending at level top.
double sqrt_falling_factorial(int top, int count) {
  long double prod = 1.0L;
  for (int j = 0; j < count; ++j) prod *= static_cast<long double>(top - j);
  return static_cast<double>(sqrtl(prod));
}

double sqrt_factorial(int m) { return sqrt_falling_factorial(m, m); }

// Stirling numbers of the second kind up to row `rows`; S(20,k) < 2^63.
std::vector<std::vector<std::int64_t>> stirling2_table(int rows) {
  std::vector<std::vector<std::int64_t>> s(rows + 1);
  for (int l = 0; l <= rows; ++l) {
    s[l].assign(l + 1, 0);
    s[l][0] = (l == 0) ? 1 : 0;
    for (int k = 1; k <= l; ++k) {
      std::int64_t above = (k <= l - 1) ? s[l - 1][k] : 0;
      std::int64_t left = s[l - 1][k - 1];
      s[l][k] = left + static_cast<std::int64_t>(k) * above;
    }
  }
  return s;
}

void insert_term(NormalForm& nf, int p, int q, double c) {
  if (c == 0.0) return;
  nf.terms[{p, q}] += c;
  if (nf.terms[{p, q}] == 0.0) nf.terms.erase({p, q});
}

// f0 value at level n: C_0 [2(1-n) F(n) - 1], evaluated exactly before the
// final scaling by C_0.
double f0_value(double c0, int M, int n) {
  Rational v = 2 * (1 - Rational(n)) * interpolation_value(M, n) - 1;
  return c0 * to_double(v);
}

}  // namespace

void validate_target(const TargetState& t) {
  if (t.M < 0) throw std::invalid_argument("target M must be nonnegative");
  if (static_cast<int>(t.coeffs.size()) != t.M + 1) {
    throw std::invalid_argument(
        "target coeffs length " + std::to_string(t.coeffs.size()) +
        " does not match M+1 = " + std::to_string(t.M + 1));
  }
  double sum = 0.0;
  for (double c : t.coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("target coefficient not finite");
    sum += c * c;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("target not normalized: sum C_n^2 = " +
                                std::to_string(sum));
  }
}

TargetState make_target(std::vector<double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("target needs at least C_0");
  TargetState t{static_cast<int>(coeffs.size()) - 1, std::move(coeffs)};
  validate_target(t);
  return t;
}

TargetState normalize(std::vector<double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("target needs at least C_0");
  double sum = 0.0;
  for (double c : coeffs) sum += c * c;
  if (sum <= 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  double inv = 1.0 / std::sqrt(sum);
  for (double& c : coeffs) c *= inv;
  TargetState t{static_cast<int>(coeffs.size()) - 1, std::move(coeffs)};
  return t;
}

FockOperator assemble_generator(const std::vector<double>& coeffs, int dim) {
  if (coeffs.empty()) throw std::invalid_argument("target needs at least C_0");
  const int M = static_cast<int>(coeffs.size()) - 1;
  if (dim < 2 * M + 1) {
    throw DimensionError("dim " + std::to_string(dim) +
                         " too small for generator; minimum is 2M+1 = " +
                         std::to_string(2 * M + 1));
  }
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  if (M == 0) {
    // Degenerate vacuum target: C_0 |0><0| (tie-break, contracts trivial).
    h(0, 0) = coeffs[0];
    return {h, true};
  }
  for (int n = 0; n < dim; ++n) h(n, n) = f0_value(coeffs[0], M, n);

  std::vector<double> f_diag(dim);
  for (int n = 0; n < dim; ++n) f_diag[n] = to_double(interpolation_value(M, n));

  for (int m = 1; m <= M; ++m) {
    if (coeffs[m] == 0.0) continue;
    const double scale = coeffs[m] / sqrt_factorial(m);
    for (int n = 0; n + m < dim; ++n) {
      // F(n) a^m lands at (n, n+m); a^dag^m F(n) mirrors it.
      const double v = scale * f_diag[n] * sqrt_falling_factorial(n + m, m);
      h(n, n + m) += v;
      h(n + m, n) += v;
    }
  }
  return {h, true};
}

FockOperator build_generator(const TargetState& target, int dim) {
  validate_target(target);
  FockOperator h = assemble_generator(target.coeffs, dim);
  if (!is_hermitian(h.entries)) {
    throw std::runtime_error("generator assembly lost hermiticity");
  }
  return h;
}

FockOperator build_projector_form(const TargetState& target,
                                  const std::vector<double>& f_diag, int dim) {
  validate_target(target);
  const int M = target.M;
  if (dim < M + 1) {
    throw DimensionError("dim " + std::to_string(dim) +
                         " too small for projector form; minimum is M+1 = " +
                         std::to_string(M + 1));
  }
  if (static_cast<int>(f_diag.size()) != dim) {
    throw std::invalid_argument("f_diag length must equal dim");
  }
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n <= M; ++n) {
    h(0, n) += target.coeffs[n];
    h(n, 0) += target.coeffs[n];
  }
  for (int k = 0; k <= M; ++k) h(k, k) -= target.coeffs[0];
  // P F P with diagonal F reduces to f_diag above level M.
  for (int n = M + 1; n < dim; ++n) h(n, n) += f_diag[n];
  return {h, true};
}

NormalForm normal_order_number_poly(const std::vector<double>& number_poly) {
  NormalForm nf;
  if (number_poly.empty()) return nf;
  const int deg = static_cast<int>(number_poly.size()) - 1;
  if (deg > kMaxDegree) {
    throw std::invalid_argument("number polynomial degree capped at " +
                                std::to_string(kMaxDegree));
  }
  static const auto stirling = stirling2_table(kMaxDegree);
  for (int k = 0; k <= deg; ++k) {
    double c = 0.0;
    for (int l = k; l <= deg; ++l) {
      c += number_poly[l] * static_cast<double>(stirling[l][k]);
    }
    insert_term(nf, k, k, c);
  }
  return nf;
}

NormalForm normal_form_of_generator(const TargetState& target) {
  validate_target(target);
  const int M = target.M;
  if (M > 10) {
    throw std::invalid_argument("normal form supported for M <= 10");
  }
  NormalForm nf;
  if (M == 0) {
    // C_0 |0><0| as the normal-ordered projector series
    // sum_k (-1)^k/k! a^dag^k a^k, carried to the degree cap (exact on any
    // truncation with dim <= kMaxDegree+1).
    double kfact = 1.0;
    for (int k = 0; k <= kMaxDegree; ++k) {
      if (k > 0) kfact *= k;
      insert_term(nf, k, k, target.coeffs[0] * ((k % 2 == 0) ? 1.0 : -1.0) / kfact);
    }
    return nf;
  }

  const InterpolationPolynomial F = solve_vandermonde(M);
  std::vector<double> F_coeffs(M + 1);
  for (int l = 0; l <= M; ++l) F_coeffs[l] = to_double(F.coeffs[l]);

  // Diagonal part: f0 = C_0 [2(1-n)F(n) - 1], expanded as a polynomial in n
  // (exact rational coefficients before the C_0 scaling).
  std::vector<Rational> f0_poly(M + 2, Rational(0));
  f0_poly[0] = -1;
  for (int l = 0; l <= M; ++l) {
    f0_poly[l] += 2 * F.coeffs[l];
    f0_poly[l + 1] -= 2 * F.coeffs[l];
  }
  std::vector<double> f0_coeffs(M + 2);
  for (int l = 0; l <= M + 1; ++l) {
    f0_coeffs[l] = target.coeffs[0] * to_double(f0_poly[l]);
  }
  nf = normal_order_number_poly(f0_coeffs);

  // Off-diagonal part: F(n) a^m = sum_k sigma_k a^dag^k a^{k+m} where
  // sigma_k normal-orders F's powers of the number operator.
  NormalForm F_diag = normal_order_number_poly(F_coeffs);
  for (int m = 1; m <= M; ++m) {
    if (target.coeffs[m] == 0.0) continue;
    const double scale = target.coeffs[m] / sqrt_factorial(m);
    for (const auto& [pq, sigma] : F_diag.terms) {
      const int k = pq.first;
      insert_term(nf, k, k + m, scale * sigma);
      insert_term(nf, k + m, k, scale * sigma);
    }
  }
  return nf;
}

FockOperator normal_form_matrix(const NormalForm& nf, int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  int max_exp = 0;
  for (const auto& [pq, c] : nf.terms) {
    max_exp = std::max({max_exp, pq.first, pq.second});
  }
  // Powers of the truncated ladder matrices.
  const ComplexMatrix lower = ladder_matrix(Ladder::lower, dim).entries;
  const ComplexMatrix raise = ladder_matrix(Ladder::raise, dim).entries;
  std::vector<ComplexMatrix> lower_pow(max_exp + 1), raise_pow(max_exp + 1);
  lower_pow[0] = ComplexMatrix::Identity(dim, dim);
  raise_pow[0] = ComplexMatrix::Identity(dim, dim);
  for (int e = 1; e <= max_exp; ++e) {
    lower_pow[e] = lower_pow[e - 1] * lower;
    raise_pow[e] = raise_pow[e - 1] * raise;
  }
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (const auto& [pq, c] : nf.terms) {
    h += c * (raise_pow[pq.first] * lower_pow[pq.second]);
  }
  return {h, is_hermitian(h)};
}

FidelityTrace fidelity_trace(const TargetState& target, int dim, double t_max,
                             int steps) {
  validate_target(target);
  if (steps < 2) throw std::invalid_argument("trace needs at least 2 steps");
  if (t_max < 0.0 || !std::isfinite(t_max)) {
    throw std::invalid_argument("t_max must be finite and nonnegative");
  }
  const FockOperator h = build_generator(target, dim);

  StateVector psi{ComplexVector::Zero(dim)};
  for (int n = 0; n <= target.M; ++n) psi.amplitudes(n) = target.coeffs[n];

  // One eigendecomposition serves the whole grid.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.entries);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const ComplexVector vac = es.eigenvectors().adjoint().col(0);
  const ComplexVector tgt = es.eigenvectors().adjoint() * psi.amplitudes;

  FidelityTrace trace;
  trace.times.reserve(steps);
  trace.fidelities.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = t_max * double(i) / double(steps - 1);
    Complex overlap = 0.0;
    for (int j = 0; j < dim; ++j) {
      overlap += std::conj(tgt(j)) * std::exp(Complex(0.0, -es.eigenvalues()(j) * t)) * vac(j);
    }
    double f = std::norm(overlap);
    if (f > 1.0 && f <= 1.0 + 1e-12) f = 1.0;
    if (f < 0.0) f = 0.0;
    trace.times.push_back(t);
    trace.fidelities.push_back(f);
  }
  return trace;
}

}  // namespace qse
