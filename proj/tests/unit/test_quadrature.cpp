#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "oracle/oracle_values.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/quadrature.hpp"
#include "zetaladder/zeta.hpp"

using namespace zl;

TEST_CASE("Gauss-Legendre 16 integrates polynomials of degree 31") {
  const GaussRule& g = gauss_legendre_16();
  double wsum = 0.0, p30 = 0.0, p31 = 0.0;
  for (int i = 0; i < 16; ++i) {
    wsum += g.weights[i];
    p30 += g.weights[i] * std::pow(g.nodes[i], 30);
    p31 += g.weights[i] * std::pow(g.nodes[i], 31);
  }
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p30 == doctest::Approx(2.0 / 31.0).epsilon(1e-13));
  CHECK(std::abs(p31) <= 1e-15);
}

TEST_CASE("panel width resolves the local oscillation scale") {
  for (double t : {10.0, 100.0, 1e3, 1e5, 1e7, 1e9}) {
    const double scale = 2.0 * M_PI / std::log(t / (2.0 * M_PI));
    CHECK(panel_width(t) <= 2.0);
    CHECK(panel_width(t) <= 3.0 * scale * (1 + 1e-12));
  }
}

TEST_CASE("empty interval") {
  const QuadratureResult r = integrate_z2(100.0, 100.0, 1e-3);
  CHECK(r.value == 0.0);
  CHECK(r.panels == 0);
  CheckpointStore store;
  CHECK(hl_integral(0.0, 1e-3, store).value == 0.0);
}

TEST_CASE("J(T) matches the high-precision quadrature oracle") {
  CheckpointStore store;
  HardyLittlewood hl(store);
  for (const auto& v : oracle::kHardyLittlewood) {
    INFO("T = " << v.t);
    const double tol = v.t <= 200 ? 1e-9 : 1e-4;
    CHECK(std::abs(hl.integral(v.t).value - v.j) <= tol);
    CHECK(std::abs(integrate_z2(0.0, v.t, default_tol(0.0, v.t)).value - v.j) <= tol);
  }
}

TEST_CASE("J(T) follows the main terms") {
  CheckpointStore store;
  const double T = 1e5;
  const double j = hl_integral(T, default_tol(0, T), store).value;
  const double c = 0.57721566490153286;
  const double main = T * std::log(T) - (1 + std::log(2 * M_PI) - 2 * c) * T;
  CHECK(std::abs(j - main) <= std::sqrt(T) * std::log(T));
  CHECK(std::abs(j / (T * std::log(T)) - 1.0) <= 0.15);
}

TEST_CASE("additivity over random triples") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 2e4);
  for (int i = 0; i < 10; ++i) {
    double x[3] = {u(rng), u(rng), u(rng)};
    std::sort(x, x + 3);
    const double tol = default_tol(x[0], x[2]);
    const double ac = integrate_z2(x[0], x[2], tol).value;
    const double ab = integrate_z2(x[0], x[1], default_tol(x[0], x[1])).value;
    const double bc = integrate_z2(x[1], x[2], default_tol(x[1], x[2])).value;
    CHECK(std::abs(ac - ab - bc) <= 2 * tol);
  }
}

TEST_CASE("J is monotone and cached values are reused") {
  CheckpointStore store;
  HardyLittlewood hl(store);
  double prev = 0.0;
  for (double T = 11.0; T < 3000.0; T *= 1.37) {
    const double j = hl.integral(T).value;
    CHECK(j >= prev);
    prev = j;
  }
  const QuadratureResult first = hl.integral(1e5);
  CHECK(first.panels > 0);
  const QuadratureResult second = hl.integral(1e5);
  CHECK(second.panels == 0);
  CHECK(second.value == first.value);

  // A fresh engine over the warm store agrees bit for bit without new work.
  HardyLittlewood warm(store);
  const QuadratureResult again = warm.integral(1e5);
  CHECK(again.panels == 0);
  CHECK(again.value == first.value);
}

TEST_CASE("values do not depend on cache contents or thread count") {
  CheckpointStore a, b, c;
  HardyLittlewood one(a, 1), three(b, 3);
  const double target = 54321.5;
  const double v1 = one.integral(target).value;
  const double v3 = three.integral(target).value;
  CHECK(v1 == v3);
  HardyLittlewood stepped(c);
  stepped.integral(1234.5);
  stepped.integral(30000.0);
  CHECK(stepped.integral(target).value == v1);
  CHECK(integrate_z2(100.0, 5000.0, 5.0, 1).value == integrate_z2(100.0, 5000.0, 5.0, 4).value);
}

TEST_CASE("increment equals the difference of integrals") {
  CheckpointStore store;
  HardyLittlewood hl(store);
  const QuadratureResult inc = hl.increment(2000.0, 2500.0);
  CHECK(inc.value == hl.integral(2500.0).value - hl.integral(2000.0).value);
  CHECK(std::abs(inc.value - integrate_z2(2000.0, 2500.0, 0.5).value) <= 1e-6);
}

TEST_CASE("quadrature nodes reproduce the integral") {
  double sum = 0.0;
  for (const QuadratureNode& n : quadrature_nodes(300.0, 340.0)) sum += n.weight * std::pow(hardy_z(n.t).z, 2);
  CHECK(sum == doctest::Approx(integrate_z2(300.0, 340.0, 1e-3).value).epsilon(1e-12));
}

TEST_CASE("domain and capability errors") {
  CHECK_THROWS_AS(integrate_z2(5.0, 1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(integrate_z2(0.0, 10.0, -1.0), DomainError);
  CheckpointStore store;
  HardyLittlewood hl(store);
  CHECK_THROWS_AS(hl.integral(-1.0), DomainError);
  CHECK_THROWS_AS(hl.integral(2e9), CapabilityError);
}

TEST_CASE("checkpoint store round trip is bit exact") {
  CheckpointStore store;
  store.insert(10.0, 0.1 + 0.2, 1e-12);
  store.insert(12345.678901234567, 98765.43210987654, 3.3e-7);
  store.insert(1e6, 1.2345678901234567e7, 1e-3);
  const std::string text = store.serialize();
  const CheckpointStore back = CheckpointStore::parse(text, "mem");
  REQUIRE(back.size() == store.size());
  for (const auto& [t, rec] : store.records()) {
    const auto got = back.find(t);
    REQUIRE(got.has_value());
    CHECK(got->j == rec.j);
    CHECK(got->tol == rec.tol);
  }
  CHECK(back.serialize() == text);

  const auto path = std::filesystem::temp_directory_path() / "zl_store_roundtrip.tsv";
  store.save(path.string());
  const CheckpointStore loaded = CheckpointStore::load(path.string());
  CHECK(loaded.serialize() == text);
  std::filesystem::remove(path);
  CHECK(CheckpointStore::load(path.string()).size() == 0);
}

TEST_CASE("first insert at a height wins") {
  CheckpointStore store;
  store.insert(50.0, 1.0, 0.0);
  store.insert(50.0, 2.0, 0.0);
  CHECK(store.find(50.0)->j == 1.0);
  CHECK(store.dirty());
}

TEST_CASE("malformed checkpoints are rejected with the offending line") {
  const char* bad[] = {
      "10\t1.5\n11\n",                  // missing field
      "10\t1.5\t0\n9\t1.6\t0\n",        // unsorted
      "10\t1.5\t0\n11\t1.4\t0\n",       // J decreasing
      "10\tabc\t0\n",                   // not a number
      "10\tnan\t0\n",                   // not finite
      "10\t1.5\t-1\n",                  // negative error
  };
  for (const char* text : bad) {
    INFO(text);
    try {
      CheckpointStore::parse(text, "cache.tsv");
      FAIL("accepted malformed input");
    } catch (const LoadError& e) {
      CHECK(std::string(e.what()).find("cache.tsv:") != std::string::npos);
    }
  }
}
