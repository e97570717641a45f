#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qse/generator.hpp"
#include "qse/interpolation.hpp"
#include "test_support.hpp"

using namespace qse;
using qse::testing::embed_target;
using qse::testing::matrix_scale;
using qse::testing::max_abs_diff;
using qse::testing::random_target;

namespace {

// Hand-coded vacuum/one-photon generator
//   sqrt(1-p) [1 - 4n + 2n^2] + sqrt(p) [(1-n)a + a^dag(1-n)]
ComplexMatrix one_photon_fixture(double p, int dim) {
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    h(n, n) = std::sqrt(1.0 - p) * (1.0 - 4.0 * n + 2.0 * n * n);
  }
  for (int n = 0; n + 1 < dim; ++n) {
    const double v = std::sqrt(p) * (1.0 - n) * std::sqrt(n + 1.0);
    h(n, n + 1) += v;
    h(n + 1, n) += v;
  }
  return h;
}

// Hand-coded vacuum/two-photon generator
//   C0 [1 - 5n + 4n^2 - n^3] + (C2/sqrt2) [F a^2 + a^dag^2 F],
//   F(n) = 1 - (3/2)n + (1/2)n^2
ComplexMatrix two_photon_fixture(double c0, double c2, int dim) {
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    h(n, n) = c0 * (1.0 - 5.0 * n + 4.0 * n * n - 1.0 * n * n * n);
  }
  for (int n = 0; n + 2 < dim; ++n) {
    const double F = 1.0 - 1.5 * n + 0.5 * n * n;
    const double v =
        c2 / std::sqrt(2.0) * F * std::sqrt((n + 1.0) * (n + 2.0));
    h(n, n + 2) += v;
    h(n + 2, n) += v;
  }
  return h;
}

ComplexMatrix monomial(int p, int q, int dim) {
  ComplexMatrix raise = ladder_matrix(Ladder::raise, dim).entries;
  ComplexMatrix lower = ladder_matrix(Ladder::lower, dim).entries;
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  for (int i = 0; i < p; ++i) out = out * raise;
  for (int i = 0; i < q; ++i) out = out * lower;
  return out;
}

double coeff_or_zero(const NormalForm& nf, int p, int q) {
  auto it = nf.terms.find({p, q});
  return it == nf.terms.end() ? 0.0 : it->second;
}

}  // namespace

TEST_CASE("target validation") {
  CHECK_NOTHROW(make_target({0.6, 0.8}));
  CHECK_THROWS_AS(make_target({1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_target(TargetState{2, {1.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(normalize({0.0, 0.0}), std::invalid_argument);

  const TargetState t = normalize({3.0, 4.0});
  CHECK(t.coeffs[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(t.coeffs[1] == doctest::Approx(0.8).epsilon(1e-15));

  // Trailing zeros keep the declared cutoff.
  CHECK_NOTHROW(make_target({1.0, 0.0}));
  CHECK_NOTHROW(make_target({0.6, 0.8, 0.0}));
}

TEST_CASE("generation contracts on random targets") {
  std::mt19937_64 rng(42);
  for (int M = 1; M <= 8; ++M) {
    for (int rep = 0; rep < 6; ++rep) {
      const TargetState t = random_target(rng, M);
      const int dim = 2 * M + 4;
      const FockOperator h = build_generator(t, dim);
      const StateVector psi = embed_target(t, dim);

      const StateVector forward = apply(h, basis_state(0, dim));
      CHECK((forward.amplitudes - psi.amplitudes).norm() < 1e-10);

      const StateVector inverse = apply(h, psi);
      CHECK((inverse.amplitudes - basis_state(0, dim).amplitudes).norm() < 1e-10);
    }
  }
}

TEST_CASE("inverse contract breaks for unnormalized coefficients") {
  const std::vector<double> bad{1.0, 1.0};
  const FockOperator h = assemble_generator(bad, 6);

  // Forward map still lands on sum C_n |n> ...
  const StateVector forward = apply(h, basis_state(0, 6));
  CHECK(std::abs(forward.amplitudes(0) - 1.0) < 1e-12);
  CHECK(std::abs(forward.amplitudes(1) - 1.0) < 1e-12);

  // ... but the image of that vector misses |0> by a wide margin.
  StateVector psi{ComplexVector::Zero(6)};
  psi.amplitudes(0) = psi.amplitudes(1) = 1.0;
  const StateVector inverse = apply(h, psi);
  CHECK((inverse.amplitudes - basis_state(0, 6).amplitudes).norm() > 0.5);

  CHECK_THROWS_AS(build_generator(TargetState{1, bad}, 6), std::invalid_argument);
}

TEST_CASE("one-photon fixture is reproduced entrywise") {
  for (double p : {0.25, 0.5, 0.75}) {
    const TargetState t = make_target({std::sqrt(1.0 - p), std::sqrt(p)});
    const FockOperator h = build_generator(t, 8);
    CHECK(max_abs_diff(h.entries, one_photon_fixture(p, 8)) < 1e-12);
  }
}

TEST_CASE("two-photon fixture is reproduced entrywise") {
  for (auto [c0, c2] : {std::pair{0.6, 0.8}, std::pair{std::sqrt(0.5), std::sqrt(0.5)}}) {
    const TargetState t = make_target({c0, 0.0, c2});
    const FockOperator h = build_generator(t, 9);
    CHECK(max_abs_diff(h.entries, two_photon_fixture(c0, c2, 9)) < 1e-12);
  }
}

TEST_CASE("degenerate vacuum target produces the vacuum projector") {
  const FockOperator h = build_generator(make_target({1.0}), 4);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  CHECK(max_abs_diff(h.entries, expected) == 0.0);
}

TEST_CASE("generator reports the minimal dimension on truncation errors") {
  const TargetState t = make_target({0.6, 0.0, 0.8});
  CHECK_THROWS_WITH_AS(build_generator(t, 4),
                       doctest::Contains("2M+1 = 5"), DimensionError);
}

TEST_CASE("generator diagonal encodes the interpolation conditions") {
  std::mt19937_64 rng(5);
  for (int M : {1, 3, 5}) {
    const TargetState t = random_target(rng, M);
    const FockOperator h = build_generator(t, 2 * M + 2);
    const double c0 = t.coeffs[0];
    CHECK(std::abs(h.entries(0, 0) - c0) < 1e-12);
    for (int k = 1; k <= M; ++k) {
      CHECK(std::abs(h.entries(k, k) + c0) < 1e-12);
    }
    CHECK(to_double(interpolation_value(M, 0)) == 1.0);
    for (int k = 1; k <= M; ++k) {
      CHECK(to_double(interpolation_value(M, k)) == 0.0);
    }
  }
}

TEST_CASE("projector form on the vacuum-only target") {
  const TargetState t = make_target({1.0, 0.0});
  const FockOperator h = build_projector_form(t, std::vector<double>(5, 0.0), 5);
  // 2 C_0 |0><0| - C_0 (|0><0| + |1><1|): diag(1, -1, 0, ...).
  CHECK(std::abs(h.entries(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(h.entries(1, 1) + 1.0) < 1e-15);
  ComplexMatrix rest = h.entries;
  rest(0, 0) = rest(1, 1) = 0.0;
  CHECK(rest.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("projector form satisfies the forward contract") {
  const TargetState t = make_target({std::sqrt(0.5), std::sqrt(0.5)});
  const FockOperator h = build_projector_form(t, std::vector<double>(6, 0.0), 6);
  const StateVector image = apply(h, basis_state(0, 6));
  CHECK(std::abs(image.amplitudes(0) - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(image.amplitudes(1) - std::sqrt(0.5)) < 1e-15);
}

TEST_CASE("protected block is independent of the diagonal freedom") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int M : {1, 2, 4}) {
    const TargetState t = random_target(rng, M);
    const int dim = 2 * M + 4;
    std::vector<double> f1(dim), f2(dim);
    for (int n = 0; n < dim; ++n) {
      f1[n] = dist(rng);
      f2[n] = dist(rng);
    }
    const ComplexMatrix a = build_projector_form(t, f1, dim).entries;
    const ComplexMatrix b = build_projector_form(t, f2, dim).entries;
    CHECK(max_abs_diff(a.topLeftCorner(M + 1, M + 1), b.topLeftCorner(M + 1, M + 1)) ==
          0.0);
    // and matches the assembled generator there
    const ComplexMatrix g = build_generator(t, dim).entries;
    CHECK(max_abs_diff(a.topLeftCorner(M + 1, M + 1), g.topLeftCorner(M + 1, M + 1)) <
          1e-12);
  }
}

TEST_CASE("normal ordering of number polynomials") {
  const NormalForm linear = normal_order_number_poly({0.0, 1.0});
  CHECK(linear.terms.size() == 1);
  CHECK(coeff_or_zero(linear, 1, 1) == 1.0);

  const NormalForm square = normal_order_number_poly({0.0, 0.0, 1.0});
  CHECK(coeff_or_zero(square, 1, 1) == 1.0);
  CHECK(coeff_or_zero(square, 2, 2) == 1.0);
  // matrix oracle: (a^dag a)^2 == a^dag^2 a^2 + a^dag a on a dim-8 space
  const ComplexMatrix n2 = monomial(1, 1, 8) * monomial(1, 1, 8);
  CHECK(max_abs_diff(n2, monomial(2, 2, 8) + monomial(1, 1, 8)) < 1e-12);

  const NormalForm mixed = normal_order_number_poly({1.0, -4.0, 2.0});
  CHECK(coeff_or_zero(mixed, 0, 0) == 1.0);
  CHECK(coeff_or_zero(mixed, 1, 1) == -2.0);
  CHECK(coeff_or_zero(mixed, 2, 2) == 2.0);

  CHECK_THROWS_AS(normal_order_number_poly(std::vector<double>(22, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("normal form of the balanced one-photon target") {
  const TargetState t = make_target({std::sqrt(0.5), std::sqrt(0.5)});
  const NormalForm nf = normal_form_of_generator(t);
  const double r = std::sqrt(0.5);
  CHECK(coeff_or_zero(nf, 0, 0) == doctest::Approx(r).epsilon(1e-14));
  CHECK(coeff_or_zero(nf, 1, 1) == doctest::Approx(-2.0 * r).epsilon(1e-14));
  CHECK(coeff_or_zero(nf, 2, 2) == doctest::Approx(2.0 * r).epsilon(1e-14));
  CHECK(coeff_or_zero(nf, 0, 1) == doctest::Approx(r).epsilon(1e-14));
  CHECK(coeff_or_zero(nf, 1, 2) == doctest::Approx(-r).epsilon(1e-14));
  CHECK(nf.terms.size() == 7);
}

TEST_CASE("normal form is Hermitian-symmetric") {
  std::mt19937_64 rng(23);
  const NormalForm nf = normal_form_of_generator(random_target(rng, 5));
  for (const auto& [pq, c] : nf.terms) {
    CHECK(coeff_or_zero(nf, pq.second, pq.first) == c);
  }
}

TEST_CASE("pure number-state targets couple only across M quanta") {
  for (int M : {2, 3, 5}) {
    std::vector<double> c(M + 1, 0.0);
    c[M] = 1.0;
    const NormalForm nf = normal_form_of_generator(make_target(c));
    for (const auto& [pq, v] : nf.terms) {
      CHECK(std::abs(pq.first - pq.second) == M);
    }
  }
}

TEST_CASE("normal form reconstructs the generator matrix") {
  std::mt19937_64 rng(31);
  for (int M = 1; M <= 6; ++M) {
    const TargetState t = random_target(rng, M);
    const int dim = 2 * M + 4;
    const ComplexMatrix direct = build_generator(t, dim).entries;
    const ComplexMatrix rebuilt =
        normal_form_matrix(normal_form_of_generator(t), dim).entries;
    CHECK(max_abs_diff(direct, rebuilt) < 1e-12 * matrix_scale(direct));
  }
}

TEST_CASE("vacuum-target normal form reconstructs the projector") {
  const NormalForm nf = normal_form_of_generator(make_target({1.0}));
  const ComplexMatrix rebuilt = normal_form_matrix(nf, 4).entries;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  CHECK(max_abs_diff(rebuilt, expected) < 1e-12);
}

TEST_CASE("invariant subspace spanned by |0> and the target") {
  std::mt19937_64 rng(37);
  for (int M : {1, 2, 4, 6}) {
    const TargetState t = random_target(rng, M);
    const int dim = 2 * M + 4;
    const FockOperator h = build_generator(t, dim);
    const ComplexVector zero = basis_state(0, dim).amplitudes;
    const ComplexVector psi = embed_target(t, dim).amplitudes;
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int rep = 0; rep < 4; ++rep) {
      ComplexVector v = dist(rng) * zero + dist(rng) * psi;
      if (v.norm() < 1e-6) continue;
      const ComplexVector hv = h.entries * v;
      // Gram-Schmidt the image against the span.
      ComplexVector e1 = zero;
      ComplexVector e2 = psi - e1.dot(psi) * e1;
      const double e2n = e2.norm();
      ComplexVector residual = hv - e1.dot(hv) * e1;
      if (e2n > 1e-12) {
        e2 /= e2n;
        residual -= e2.dot(residual) * e2;
      }
      CHECK(residual.norm() < 1e-10 * std::max(1.0, hv.norm()));
    }
  }
}

TEST_CASE("fidelity trace follows sin^2 t + C0^2 cos^2 t") {
  const double pi = std::numbers::pi;
  const TargetState t = make_target({std::sqrt(0.5), std::sqrt(0.5)});

  SUBCASE("grid endpoints and the quarter period") {
    const FidelityTrace trace = fidelity_trace(t, 8, pi / 2.0, 3);
    REQUIRE(trace.times.size() == 3);
    CHECK(trace.fidelities[0] == doctest::Approx(0.5).epsilon(1e-12));   // C0^2
    CHECK(trace.fidelities[1] == doctest::Approx(0.75).epsilon(1e-12));  // t = pi/4
    CHECK(trace.fidelities[2] == doctest::Approx(1.0).epsilon(1e-12));   // t = pi/2
  }

  SUBCASE("dense grid matches the closed form pointwise") {
    std::mt19937_64 rng(41);
    for (int M : {1, 3}) {
      const TargetState target = random_target(rng, M);
      const double c0sq = target.coeffs[0] * target.coeffs[0];
      const FidelityTrace trace = fidelity_trace(target, 2 * M + 4, 3.0 * pi, 128);
      for (size_t i = 0; i < trace.times.size(); ++i) {
        const double s = std::sin(trace.times[i]);
        const double c = std::cos(trace.times[i]);
        CHECK(std::abs(trace.fidelities[i] - (s * s + c0sq * c * c)) < 1e-9);
      }
    }
  }

  SUBCASE("step validation") {
    CHECK_THROWS_AS(fidelity_trace(t, 8, 1.0, 1), std::invalid_argument);
  }
}
