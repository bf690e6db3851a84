#include <doctest.h>

#include <cmath>
#include <sstream>

#include "boundedcf/asymptotics.hpp"
#include "boundedcf/complex_cf.hpp"
#include "boundedcf/grid.hpp"
#include "boundedcf/report.hpp"
#include "boundedcf/spectral.hpp"

using namespace boundedcf;

TEST_SUITE("asymptotics") {
  TEST_CASE("exact power laws") {
    const std::vector<Sample> sq{{10, 100}, {100, 10000}, {1000, 1e6}};
    const auto fit = fit_exponent(sq);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(fit.residual_se < 1e-12);
    CHECK(fit.n_min == 10);
    CHECK(fit.n_max == 1000);
    CHECK(fit.points == 3);
    const std::vector<Sample> flat{{10, 7}, {20, 7}, {40, 7}, {80, 7}};
    CHECK(std::abs(fit_exponent(flat).slope) < 1e-14);
    std::vector<Sample> odd;
    for (std::uint64_t N = 16; N <= 1 << 20; N *= 2) odd.push_back({N, 3.5 * std::pow(N, 1.0625)});
    CHECK(fit_exponent(odd).slope == doctest::Approx(1.0625).epsilon(1e-13));
    CHECK(fit_exponent(odd).predict(1 << 10) == doctest::Approx(3.5 * std::pow(1024.0, 1.0625)).epsilon(1e-12));
  }

  TEST_CASE("fit needs three positive samples") {
    const std::vector<Sample> few{{10, 1}, {20, 0}, {40, 2}};
    CHECK_THROWS_AS(fit_exponent(few), DomainError);
    const std::vector<Sample> same{{10, 1}, {10, 2}, {10, 3}};
    CHECK_THROWS_AS(fit_exponent(same), DomainError);
  }

  TEST_CASE("omega exponent and B ratios, A = 2") {
    const auto table = enumerate_real(2, 1 << 18, true);
    const double delta = solve_dimension(2).delta;
    const auto grid = dyadic_grid(10, 18);
    const auto fit = omega_fit(table, grid);
    CHECK(std::abs(fit.slope - 2.0 * delta) < 0.03);
    const auto ratios = estimate_B(table, 0.0, delta, grid);
    for (const auto& r : ratios) {
      CHECK(std::isfinite(r.ratio));
      CHECK(r.ratio > 0.0);
      CHECK(r.psi == doctest::Approx(static_cast<double>(table.cumulative(r.N))));
    }
    CHECK(relative_spread(ratios, 1 << 17) < 0.10);
    // weighted version with the pole from the spectral module
    const double s01 = solve_pole(2, 0.1).s0;
    const auto weighted = estimate_B(table, 0.1, s01, grid);
    for (const auto& r : weighted) {
      CHECK(std::isfinite(r.ratio));
      CHECK(r.ratio > 0.0);
    }
    CHECK(relative_spread(weighted, 1 << 16) < 0.15);
  }

  TEST_CASE("synthetic table gives unit ratios") {
    // weighted_n = 2 s n^(2s - 1) discretizes d/dn n^(2s)
    const double s = 0.6;
    CountTable table(1 << 16, false);
    double target = 0.0;
    std::uint64_t have = 0;
    for (std::uint64_t n = 1; n <= (1 << 16); ++n) {
      target += 2.0 * s * std::pow(static_cast<double>(n), 2.0 * s - 1.0) * 1000.0;
      const auto want = static_cast<std::uint64_t>(std::llround(target));
      if (want > have) table.add(n, 1, want - have);
      have = std::max(have, want);
    }
    const auto grid = dyadic_grid(8, 16);
    const auto ratios = estimate_B(table, 0.0, s, grid);
    for (const auto& r : ratios) CHECK(r.ratio / 1000.0 == doctest::Approx(1.0).epsilon(0.02));
  }

  TEST_CASE("smoothing, gamma in {0.3, 0.5}") {
    const auto table = enumerate_real(2, 1 << 18);
    const double delta = solve_dimension(2).delta;
    const auto grid = dyadic_grid(10, 18);
    for (double gamma : {0.3, 0.5}) {
      const auto rep = smoothing_experiment(table, delta, gamma, grid);
      CHECK(rep.inclusion_ok);
      CHECK(rep.predicted == doctest::Approx(2.0 * delta - gamma / 2.0));
      CHECK(std::abs(rep.fit.slope - rep.predicted) < 0.05);
      REQUIRE(rep.window_fit.has_value());
      CHECK(std::abs(rep.window_fit->slope - (1.0 - gamma / 2.0)) < 0.02);
      for (const auto& r : rep.records) {
        CHECK(r.inclusion_ok);
        REQUIRE(r.ratio.has_value());
        CHECK(std::isfinite(*r.ratio));
        CHECK(*r.ratio > 0.0);
      }
    }
  }

  TEST_CASE("degenerate window reduces to the exact-denominator fit") {
    const auto table = enumerate_real(2, 1 << 14);
    const auto grid = dyadic_grid(8, 14);
    const auto rep = smoothing_experiment(table, 0.53, 2.5, grid);
    std::vector<Sample> sigma;
    for (auto N : grid) sigma.push_back({N, static_cast<double>(sigma_count(table, N))});
    CHECK(rep.fit.slope == doctest::Approx(fit_exponent(sigma).slope).epsilon(1e-14));
    CHECK_FALSE(rep.window_fit.has_value());
    for (const auto& r : rep.records) {
      CHECK(r.width == 0);
      CHECK_FALSE(r.ratio.has_value());
    }
    CHECK_THROWS_AS(smoothing_experiment(table, 0.53, 0.0, grid), DomainError);
    CHECK_THROWS_AS(smoothing_experiment(table, 0.53, 0.5, dyadic_grid(8, 15)), DomainError);
  }

  TEST_CASE("smoothing from scratch") {
    const auto grid = dyadic_grid(8, 14);
    const auto rep = smoothing_experiment(2, 0.5, grid, 2);
    CHECK(rep.delta == doctest::Approx(0.53128050627).epsilon(1e-10));
    CHECK(rep.records.size() == grid.size());
  }

  TEST_CASE("complex exponent fits") {
    const QuadraticField g(1);
    CHECK_THROWS_AS(complex_exponent_fit(g, std::vector<QuadElement>{}, dyadic_grid(4, 8)), DomainError);

    const auto alphabet = default_alphabet(g, 50);
    ComplexEnumerationOptions opts;
    opts.collect_lengths = false;
    opts.validate = false;
    const auto table = enumerate_complex(g, alphabet, 1 << 10, opts);
    const auto fit = complex_exponent_fit(table, dyadic_grid(4, 10));
    CHECK(fit.slope > 0.0);
    CHECK(fit.slope < 2.0);
    const auto top = complex_exponent_fit(table, dyadic_grid(8, 10));
    const auto lower = complex_exponent_fit(table, dyadic_grid(6, 8));
    CHECK(std::abs(top.slope - lower.slope) < 0.1);

    // a single digit yields one point per length: bounded growth
    const std::vector<QuadElement> single{QuadElement(2, 0)};
    const auto one = enumerate_complex(g, single, 1 << 16);
    CHECK(one.total() < 20);
    const auto flat = complex_exponent_fit(one, dyadic_grid(8, 16));
    CHECK(flat.slope < 0.2);
  }
}

TEST_SUITE("grid_report") {
  TEST_CASE("grid parsing") {
    CHECK(parse_count("65536") == 65536);
    CHECK(parse_count("2^16") == 65536);
    CHECK(parse_grid("2^3..2^6") == std::vector<std::uint64_t>{8, 16, 32, 64});
    CHECK(parse_grid("100, 10,100") == std::vector<std::uint64_t>{10, 100});
    CHECK(parse_grid("2^4") == std::vector<std::uint64_t>{16});
    CHECK_THROWS_AS(parse_grid("2^6..2^3"), DomainError);
    CHECK_THROWS_AS(parse_count("abc"), DomainError);
    CHECK_THROWS_AS(parse_count("2^70"), DomainError);
    CHECK(parse_real_list("-0.2,0,0.1") == std::vector<double>{-0.2, 0.0, 0.1});
    CHECK_THROWS_AS(parse_real_list("0.1,,0.2"), DomainError);
    CHECK_THROWS_AS(parse_real_list("0.1x"), DomainError);
  }

  TEST_CASE("config files") {
    std::istringstream in("# comment\nA = 3\n\nN=2^10   # trailing\ngamma= 0.5\n");
    const auto cfg = read_config(in);
    CHECK(cfg.size() == 3);
    CHECK(cfg.at("A") == "3");
    CHECK(cfg.at("N") == "2^10");
    CHECK(cfg.at("gamma") == "0.5");
    std::istringstream bad("A 3\n");
    CHECK_THROWS(read_config(bad));
    std::istringstream empty_key(" = 3\n");
    CHECK_THROWS(read_config(empty_key));
  }

  TEST_CASE("json records round trip") {
    const auto r = solve_dimension(3);
    const Json j = to_json(r);
    std::ostringstream out;
    write_json(out, j);
    const auto back = dimension_from_json(Json::parse(out.str()));
    CHECK(back.bound == r.bound);
    CHECK(back.delta == r.delta);
    CHECK(back.lo == r.lo);
    CHECK(back.hi == r.hi);
    CHECK(back.m == r.m);
    CHECK(back.residual == r.residual);
    CHECK(back.delta_check == r.delta_check);
    for (const char* key : {"A", "delta", "lo", "hi", "m", "residual"}) CHECK(j.contains(key));
  }

  TEST_CASE("fit report and csv") {
    std::vector<Sample> s;
    for (std::uint64_t N = 16; N <= 4096; N *= 2) s.push_back({N, 2.0 * std::pow(N, 1.5)});
    const auto fit = fit_exponent(s);
    const Json j = fit_report(fit, 1.5);
    CHECK(j.at("fit").at("slope").get<double>() == fit.slope);
    CHECK(j.at("fit").at("range")[0].get<std::uint64_t>() == 16);
    CHECK(j.at("samples").size() == s.size());
    CHECK(j.at("prediction").get<double>() == 1.5);
    std::ostringstream csv;
    write_fit_csv(csv, fit);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "N,count,predicted");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
      std::stringstream ls(line);
      std::string n, c, p;
      std::getline(ls, n, ',');
      std::getline(ls, c, ',');
      std::getline(ls, p, ',');
      CHECK(std::stod(c) == s[rows].count);
      CHECK(std::stod(p) == doctest::Approx(s[rows].count).epsilon(1e-12));
      ++rows;
    }
    CHECK(rows == s.size());
  }
}
