// Acceptance harness: ten numbered criteria, one pass/fail line each.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "qcoh/convexroof.hpp"
#include "qcoh/entanglement.hpp"
#include "qcoh/measures.hpp"
#include "qcoh/theorems.hpp"

using namespace qcoh;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& title,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

bool record_bad(const CheckRecord& r, std::string& detail) {
  if (r.passed) return false;
  detail = r.check_name + " " + r.inputs_digest + ": lhs=" + std::to_string(r.lhs) +
           " rhs=" + std::to_string(r.rhs);
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "l1 norm agrees with the GGM pair-spectrum form", [](std::string& detail) {
    for (std::uint64_t s = 0; s < 500; ++s) {
      const int d = 2 + int(s % 7);
      const int rank = 1 + int(s % d);
      const auto rec = verify_proposition(random_density(d, rank, s),
                                          "seed=" + std::to_string(s));
      if (record_bad(rec, detail)) return false;
    }
    return true;
  });

  run_criterion(2, "pure concurrence equals l1 of the projector", [](std::string& detail) {
    for (std::uint64_t s = 0; s < 500; ++s) {
      const int d = 2 + int(s % 15);
      const auto psi = random_pure(d, s);
      const double lhs = pure_coherence_concurrence(psi);
      const double rhs = l1_coherence(pure_to_density(psi));
      if (std::abs(lhs - rhs) > 1e-12) {
        detail = "d=" + std::to_string(d) + " seed=" + std::to_string(s) +
                 " gap=" + std::to_string(lhs - rhs);
        return false;
      }
    }
    return true;
  });

  run_criterion(3, "CNOT output concurrence equals 2|rho_12|", [](std::string& detail) {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const auto rec = verify_corollary2(random_density(2, 1 + int(s % 2), s),
                                         "seed=" + std::to_string(s));
      if (record_bad(rec, detail)) return false;
    }
    return true;
  });

  run_criterion(4, "C_E <= C after the copying unitary (pure)", [](std::string& detail) {
    for (std::uint64_t s = 0; s < 500; ++s) {
      const int d = 2 + int(s % 5);
      const auto rec = verify_theorem2_pure(random_pure(d, s), d,
                                            "d=" + std::to_string(d) +
                                                " seed=" + std::to_string(s));
      if (record_bad(rec, detail)) return false;
    }
    return true;
  });

  run_criterion(5, "C_E >= sqrt(2/(d(d-1))) C, saturated by MCSs", [](std::string& detail) {
    for (std::uint64_t s = 0; s < 500; ++s) {
      const int d = 2 + int(s % 5);
      const auto rec = verify_theorem3_pure(random_pure(d, s), d,
                                            "d=" + std::to_string(d) +
                                                " seed=" + std::to_string(s));
      if (record_bad(rec, detail)) return false;
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int d = 2; d <= 6; ++d) {
      std::vector<double> theta(d);
      for (auto& t : theta) t = u(rng);
      const auto psi = mcs_with_phases(d, theta);
      const auto rec = verify_theorem3_pure(psi, d, "mcs d=" + std::to_string(d));
      const double expect = std::sqrt(2.0 * (d - 1) / double(d));
      if (record_bad(rec, detail)) return false;
      if (std::abs(rec.lhs - rec.rhs) > 1e-9 || std::abs(rec.lhs - expect) > 1e-9) {
        detail = "mcs d=" + std::to_string(d) + " lhs=" + std::to_string(rec.lhs) +
                 " rhs=" + std::to_string(rec.rhs);
        return false;
      }
    }
    return true;
  });

  run_criterion(6, "coherence concurrence roof dominates the l1 norm", [](std::string& detail) {
    RoofConfig bound_cfg;
    bound_cfg.restarts = 2;
    bound_cfg.max_iterations = 40;
    bound_cfg.tolerance = 1e-8;
    for (std::uint64_t s = 0; s < 200; ++s) {
      const int d = 2 + int(s % 3);
      bound_cfg.seed = s;
      const auto rho = random_density(d, 1 + int(s % d), s);
      for (const auto& rec :
           verify_corollary1(rho, bound_cfg, false, "seed=" + std::to_string(s))) {
        if (record_bad(rec, detail)) return false;
      }
    }
    RoofConfig eq_cfg;
    eq_cfg.restarts = 20;
    eq_cfg.max_iterations = 30;
    eq_cfg.tolerance = 1e-5;
    for (std::uint64_t s = 0; s < 50; ++s) {
      const int d = 2 + int(s % 3);
      const double p = 0.1 * (1.0 + double(s % 9));
      const auto psi = pure_to_density(random_pure(d, 2000 + s));
      const Matrix mixed =
          p * psi.mat + (1.0 - p) * Matrix::Identity(d, d) / double(d);
      eq_cfg.seed = s;
      const std::string digest =
          "d=" + std::to_string(d) + " p=" + std::to_string(p) + " seed=" + std::to_string(s);
      for (const auto& rec : verify_corollary1(validate_density(mixed), eq_cfg, true, digest)) {
        if (record_bad(rec, detail)) return false;
      }
    }
    return true;
  });

  run_criterion(7, "qubit roofs match the closed forms", [](std::string& detail) {
    RoofConfig cfg;
    cfg.restarts = 12;
    cfg.max_iterations = 200;
    cfg.tolerance = 1e-11;
    for (std::uint64_t s = 0; s < 50; ++s) {
      cfg.seed = s;
      const auto rho = random_density(2, 2, 3000 + s);
      const double cc_roof = coherence_concurrence(rho, cfg).value;
      const double cc_closed = qubit_coherence_concurrence(rho);
      if (std::abs(cc_roof - cc_closed) > 1e-4) {
        detail = "cc seed=" + std::to_string(s) + " roof=" + std::to_string(cc_roof) +
                 " closed=" + std::to_string(cc_closed);
        return false;
      }
      const double ri_roof = intrinsic_randomness(rho, cfg).value;
      const double ri_closed = qubit_intrinsic_randomness(rho);
      if (std::abs(ri_roof - ri_closed) > 1e-3) {
        detail = "ri seed=" + std::to_string(s) + " roof=" + std::to_string(ri_roof) +
                 " closed=" + std::to_string(ri_closed);
        return false;
      }
    }
    return true;
  });

  run_criterion(8, "two-qubit roof matches the Wootters formula", [](std::string& detail) {
    Vector bell = Vector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const Matrix proj = bell * bell.adjoint();
    for (int i = 0; i <= 10; ++i) {
      const double p = 0.1 * i;
      const Matrix werner = p * proj + (1.0 - p) * Matrix::Identity(4, 4) / 4.0;
      const double w = wootters_concurrence(validate_density(werner));
      const double expect = std::max(0.0, (3.0 * p - 1.0) / 2.0);
      if (std::abs(w - expect) > 1e-10) {
        detail = "werner p=" + std::to_string(p) + " w=" + std::to_string(w);
        return false;
      }
    }
    RoofConfig cfg;
    cfg.restarts = 4;
    cfg.max_iterations = 200;
    cfg.tolerance = 1e-9;
    const BipartiteSplit split{2, 2};
    for (std::uint64_t s = 0; s < 25; ++s) {
      cfg.seed = s;
      const auto rho = random_density(4, 1 + int(s % 4), 4000 + s);
      const double roof = mixed_concurrence_upper(rho, split, cfg).value;
      const double w = wootters_concurrence(rho);
      if (std::abs(roof - w) > 1e-3) {
        detail = "seed=" + std::to_string(s) + " roof=" + std::to_string(roof) +
                 " wootters=" + std::to_string(w);
        return false;
      }
    }
    return true;
  });

  run_criterion(9, "measure requirements (C1)-(C4) hold on sampled states", [](std::string& detail) {
    RoofConfig cfg;
    cfg.restarts = 3;
    cfg.max_iterations = 30;
    cfg.tolerance = 1e-6;
    for (int d : {2, 3, 4}) {
      for (const auto& rec : verify_requirements_suite(d, 100, 99, cfg)) {
        if (record_bad(rec, detail)) return false;
      }
    }
    return true;
  });

  run_criterion(10, "incoherent channels preserve incoherence", [](std::string& detail) {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const int d = 2 + int(s % 5);
      const auto ch = random_incoherent_channel(d, 1 + int(s % 3), s);
      const auto out = apply_channel(ch, random_incoherent(d, 5000 + s));
      double off = 0.0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) off = std::max(off, std::abs(out.mat(i, j)));
      if (off > 1e-9) {
        detail = "seed=" + std::to_string(s) + " max offdiag=" + std::to_string(off);
        return false;
      }
    }
    return true;
  });

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures;
}
