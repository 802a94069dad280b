#include <doctest.h>

#include <cmath>

#include "qcoh/entanglement.hpp"
#include "qcoh/measures.hpp"

using namespace qcoh;

namespace {

PureState bell_state() {
  Vector v = Vector::Zero(4);
  v(0) = 1.0 / std::sqrt(2.0);
  v(3) = 1.0 / std::sqrt(2.0);
  return PureState{v};
}

DensityMatrix werner(double p) {
  Matrix m = (1.0 - p) * Matrix::Identity(4, 4) / 4.0 +
             p * pure_to_density(bell_state()).mat;
  return validate_density(m);
}

}  // namespace

TEST_CASE("pure concurrence closed cases") {
  Vector prod = Vector::Zero(4);
  prod(0) = 1.0;
  CHECK(pure_concurrence(PureState{prod}, {2, 2}) == doctest::Approx(0.0));
  CHECK(pure_concurrence(bell_state(), {2, 2}) == doctest::Approx(1.0));
  CHECK_THROWS_WITH_AS(pure_concurrence(bell_state(), {2, 3}),
                       doctest::Contains("DimMismatch"), Error);
}

TEST_CASE("Schmidt-diagonal states: C_E = 2 sqrt(sum_{i<j} |a_i a_j|^2)") {
  const int d = 4;
  Vector a(d);
  a << 0.1, Complex(0.3, 0.2), 0.7, Complex(0.0, 0.4);
  a.normalize();
  Vector psi = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) psi(i * d + i) = a(i);
  double sum = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) sum += std::norm(a(i)) * std::norm(a(j));
  CHECK(pure_concurrence(PureState{psi}, {d, d}) ==
        doctest::Approx(2.0 * std::sqrt(sum)).epsilon(1e-12));
}

TEST_CASE("determinant form agrees with the partial-trace form") {
  CHECK(pure_concurrence_determinant_form(bell_state(), {2, 2}) == doctest::Approx(1.0));
  Vector prod = Vector::Zero(6);
  prod(1) = 1.0;
  CHECK(pure_concurrence_determinant_form(PureState{prod}, {2, 3}) ==
        doctest::Approx(0.0));

  for (std::uint64_t s = 0; s < 20; ++s) {
    const int dS = 2 + int(s % 3);
    const int dA = 2 + int((s / 3) % 3);
    const auto psi = random_pure(dS * dA, s);
    CHECK(std::abs(pure_concurrence(psi, {dS, dA}) -
                   pure_concurrence_determinant_form(psi, {dS, dA})) < 1e-10);
  }
}

TEST_CASE("spin flip spectrum") {
  const auto bell = spin_flip_spectrum(pure_to_density(bell_state()));
  CHECK(bell.lambdas[0] == doctest::Approx(1.0));
  CHECK(bell.lambdas[1] == doctest::Approx(0.0));

  const auto mixed = spin_flip_spectrum(validate_density(Matrix::Identity(4, 4) / 4.0));
  for (double l : mixed.lambdas) CHECK(l == doctest::Approx(0.25));

  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto spec = spin_flip_spectrum(random_density(4, 4, s));
    for (int i = 0; i < 4; ++i) {
      CHECK(spec.lambdas[i] >= 0.0);
      if (i > 0) CHECK(spec.lambdas[i] <= spec.lambdas[i - 1]);
    }
  }
}

TEST_CASE("Wootters concurrence") {
  CHECK(wootters_concurrence(pure_to_density(bell_state())) == doctest::Approx(1.0));
  CHECK(wootters_concurrence(random_incoherent(4, 17)) == doctest::Approx(0.0));
  // Werner sweep against max(0, (3p-1)/2)
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    CHECK(std::abs(wootters_concurrence(werner(p)) - std::max(0.0, (3 * p - 1) / 2)) <
          1e-10);
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const double c = wootters_concurrence(random_density(4, 1 + int(s % 4), s));
    CHECK(c >= 0.0);
    CHECK(c <= 1.0 + 1e-12);
  }
}

TEST_CASE("pure two-qubit states: Wootters equals the pure formula") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto psi = random_pure(4, s);
    CHECK(std::abs(wootters_concurrence(pure_to_density(psi)) -
                   pure_concurrence(psi, {2, 2})) < 1e-10);
  }
}

TEST_CASE("coherence concurrence dominates entanglement concurrence on pure states") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const int dS = 2 + int(s % 3);
    const int dA = 2 + int((s / 3) % 3);
    const auto psi = random_pure(dS * dA, 7000 + s);
    CHECK(pure_coherence_concurrence(psi) >=
          pure_concurrence(psi, {dS, dA}) - 1e-10);
  }
}
