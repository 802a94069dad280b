#include <doctest.h>

#include <cmath>

#include "qcoh/convexroof.hpp"
#include "qcoh/entanglement.hpp"
#include "qcoh/measures.hpp"

using namespace qcoh;

namespace {

RoofConfig test_config(std::uint64_t seed = 0) {
  RoofConfig c;
  c.restarts = 8;
  c.max_iterations = 60;
  c.tolerance = 1e-9;
  c.seed = seed;
  return c;
}

DensityMatrix pure_plus_noise(const PureState& psi, double p) {
  const int d = psi.dim();
  Matrix m = p * pure_to_density(psi).mat + (1.0 - p) * Matrix::Identity(d, d) / double(d);
  return validate_density(m);
}

}  // namespace

TEST_CASE("decomposition_from_isometry: identity gives the spectral ensemble") {
  const auto rho = random_density(3, 3, 5);
  const auto e = decomposition_from_isometry(rho, Matrix::Identity(3, 3));
  CHECK(e.members.size() == 3);
  CHECK((ensemble_to_density(e).mat - rho.mat).norm() < 1e-12);
  // members are the eigenvectors: each reproduces an eigenprojector
  for (const auto& [p, psi] : e.members) {
    const Matrix proj = psi.amps * psi.amps.adjoint();
    CHECK((rho.mat * psi.amps - p * psi.amps).norm() < 1e-10);
    (void)proj;
  }
}

TEST_CASE("decomposition_from_isometry: any isometry reproduces the state") {
  const auto rho = random_density(4, 2, 9);
  // 2x4 isometry: first two rows of a 4x4 unitary built from a QR factorization
  Matrix z = Matrix::Random(4, 4);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix v = Matrix(qr.householderQ()).adjoint().topRows(2);
  const auto e = decomposition_from_isometry(rho, v);
  CHECK((ensemble_to_density(e).mat - rho.mat).norm() < 1e-10);

  Matrix bad = Matrix::Ones(2, 4);
  CHECK_THROWS_WITH_AS(decomposition_from_isometry(rho, bad),
                       doctest::Contains("NotIsometry"), Error);
}

TEST_CASE("decomposition_from_isometry: Hadamard on I/2 gives the |+>,|-> ensemble") {
  const auto rho = validate_density(0.5 * Matrix::Identity(2, 2));
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  const auto e = decomposition_from_isometry(rho, h);
  REQUIRE(e.members.size() == 2);
  for (const auto& [p, psi] : e.members) {
    CHECK(p == doctest::Approx(0.5));
    CHECK(std::abs(psi.amps(0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(psi.amps(1)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  }
}

TEST_CASE("roof of a pure state is the pure objective") {
  const auto psi = random_pure(4, 3);
  const auto res = convex_roof_minimize(pure_to_density(psi),
                                        RoofObjective::CoherenceConcurrence, test_config());
  CHECK(res.value == doctest::Approx(pure_coherence_concurrence(psi)).epsilon(1e-10));
  CHECK(res.certification == Certification::UpperBound);
}

TEST_CASE("roof of an incoherent state is zero") {
  const auto res = convex_roof_minimize(random_incoherent(4, 11),
                                        RoofObjective::CoherenceConcurrence, test_config());
  CHECK(res.value < 1e-8);
}

TEST_CASE("pure MCS mixed with white noise: roof equals l1") {
  const auto rho = pure_plus_noise(maximally_coherent_state(2), 0.5);
  const auto res = coherence_concurrence(rho, test_config());
  CHECK(res.value == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(res.value == doctest::Approx(l1_coherence(rho)).epsilon(1e-4));
}

TEST_CASE("qubit coherence concurrence roof matches 2|rho_12|") {
  Matrix m(2, 2);
  m << 0.5, 0.3, 0.3, 0.5;
  const auto rho = validate_density(m);
  const auto res = coherence_concurrence(rho, test_config());
  CHECK(res.value == doctest::Approx(0.6).epsilon(1e-4));
  CHECK(res.diagnostics.find("qubit closed form") != std::string::npos);

  const auto mcs = coherence_concurrence(pure_to_density(maximally_coherent_state(3)),
                                         test_config());
  CHECK(mcs.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("roof value dominates l1 (corollary bound)") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const int d = 2 + int(s % 3);
    const auto rho = random_density(d, d, s);
    RoofConfig cfg = test_config(s);
    cfg.restarts = 3;
    CHECK(coherence_concurrence(rho, cfg).value >= l1_coherence(rho) - 1e-6);
  }
}

TEST_CASE("intrinsic randomness roof") {
  Matrix m(2, 2);
  m << 0.5, 0.3, 0.3, 0.5;
  const auto res = intrinsic_randomness(validate_density(m), test_config());
  const double expected = binary_entropy_of_concurrence(0.6);
  CHECK(res.value == doctest::Approx(expected).epsilon(1e-3));

  CHECK(intrinsic_randomness(random_incoherent(3, 2), test_config()).value < 1e-8);
  CHECK(intrinsic_randomness(pure_to_density(maximally_coherent_state(4)), test_config())
            .value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("mixed concurrence roof") {
  // separable diagonal product mixture
  const auto diag = random_incoherent(4, 3);
  const auto sep =
      mixed_concurrence_upper(diag, BipartiteSplit{2, 2}, test_config());
  CHECK(sep.value < 1e-8);

  // Werner p = 0.9 vs the Wootters oracle 0.85
  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  Matrix w = 0.9 * pure_to_density(PureState{bell}).mat + 0.1 * Matrix::Identity(4, 4) / 4.0;
  const auto res =
      mixed_concurrence_upper(validate_density(w), BipartiteSplit{2, 2}, test_config());
  CHECK(res.value == doctest::Approx(0.85).epsilon(1e-3));
  CHECK(res.diagnostics.find("EXCEEDED") == std::string::npos);

  const auto pure_bell = mixed_concurrence_upper(pure_to_density(PureState{bell}),
                                                 BipartiteSplit{2, 2}, test_config());
  CHECK(pure_bell.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("roof results are sound upper bounds achieved by their own ensembles") {
  for (std::uint64_t s = 0; s < 4; ++s) {
    const int d = 2 + int(s % 2);
    const auto rho = random_density(d, d, 100 + s);
    const auto res = coherence_concurrence(rho, test_config(s));
    // value is the weighted average of its own ensemble
    double avg = 0.0;
    for (const auto& [p, psi] : res.ensemble.members) {
      avg += p * pure_coherence_concurrence(psi);
    }
    CHECK(std::abs(avg - res.value) < 1e-10);
    // ensemble reconstructs the state
    CHECK((ensemble_to_density(res.ensemble).mat - rho.mat).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("more restarts never increase the reported value") {
  const auto rho = random_density(3, 3, 55);
  double prev = std::numeric_limits<double>::infinity();
  for (int restarts : {1, 3, 8}) {
    RoofConfig cfg = test_config(42);
    cfg.restarts = restarts;
    const double v = coherence_concurrence(rho, cfg).value;
    CHECK(v <= prev + 1e-12);
    prev = v;
  }
}

TEST_CASE("determinism given the seed") {
  const auto rho = random_density(3, 2, 66);
  const double a = coherence_concurrence(rho, test_config(9)).value;
  const double b = coherence_concurrence(rho, test_config(9)).value;
  CHECK(a == b);
}

TEST_CASE("config validation") {
  const auto rho = random_density(3, 3, 1);
  RoofConfig cfg = test_config();
  cfg.ensemble_size = 2;  // below rank
  CHECK_THROWS_WITH_AS(convex_roof_minimize(rho, RoofObjective::CoherenceConcurrence, cfg),
                       doctest::Contains("BadParams"), Error);
  CHECK_THROWS_WITH_AS(convex_roof_minimize(rho, RoofObjective::EntanglementConcurrence,
                                            test_config(), BipartiteSplit{2, 2}),
                       doctest::Contains("DimMismatch"), Error);
}
