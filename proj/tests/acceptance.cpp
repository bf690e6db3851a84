// Acceptance checks 1-9. Usage: acceptance [criterion...]; no arguments runs all.
// Prints one PASS/FAIL line per criterion and exits 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "boundedcf/asymptotics.hpp"
#include "boundedcf/complex_cf.hpp"
#include "boundedcf/enumeration.hpp"
#include "boundedcf/grid.hpp"
#include "boundedcf/real_cf.hpp"
#include "boundedcf/spectral.hpp"
#include "oracles.hpp"

using namespace boundedcf;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// 1. round trip of 10^5 random reduced fractions, denominators <= 10^6
Outcome round_trip() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> den(2, 1000000);
  int failures = 0;
  int bad_terminal = 0;
  int done = 0;
  while (done < 100000) {
    const std::uint64_t n = den(rng);
    const std::uint64_t a = std::uniform_int_distribution<std::uint64_t>(1, n - 1)(rng);
    if (std::gcd(a, n) != 1) continue;
    const ExactRational x(a, n);
    const auto digits = cf_expand(x);
    if (reconstruct(digits) != x) ++failures;
    if (digits.back() < 2) ++bad_terminal;
    ++done;
  }
  return {failures == 0 && bad_terminal == 0,
          std::to_string(done) + " fractions, " + std::to_string(failures) + " round-trip failures, " +
              std::to_string(bad_terminal) + " terminal digits < 2"};
}

// 2. enumerate_real == brute_force_real, A in 2..5, N = 2000
Outcome oracle_real() {
  std::string detail;
  bool pass = true;
  for (std::uint64_t A = 2; A <= 5; ++A) {
    const auto fast = enumerate_real(A, 2000, true);
    const bool same = fast == brute_force_real(A, 2000);
    pass = pass && same;
    detail += "A=" + std::to_string(A) + (same ? " equal" : " DIFFER") + " (|Omega|=" +
              std::to_string(fast.total()) + ") ";
  }
  return {pass, detail};
}

// 3. delta_2 at m = 32 vs 64 and vs the periodic-orbit oracle
Outcome dimension() {
  const auto r32 = solve_dimension(2, kDefaultBisectionTol, 32);
  const auto r64 = solve_dimension(2, kDefaultBisectionTol, 64);
  const double po = oracle::periodic_orbit_dimension(2, 12);
  const double rel_m = std::abs(r32.delta - r64.delta) / r32.delta;
  const double rel_po = std::abs(r32.delta - po) / po;
  const bool pass = rel_m < 1e-10 && rel_po < 1e-6 && r32.delta > 0.531 && r32.delta < 0.532;
  return {pass, "delta(32)=" + fmt("%.15f", r32.delta) + " delta(64)=" + fmt("%.15f", r64.delta) +
                    " oracle=" + fmt("%.12f", po) + " rel diff m " + fmt("%.2e", rel_m) + ", oracle " +
                    fmt("%.2e", rel_po)};
}

// 4. operator series at 0 vs exact orbit sums, depth 10
Outcome identity() {
  double worst = 0.0;
  for (std::uint64_t A : {2u, 3u}) {
    for (double sigma : {0.7, 0.8}) {
      for (double w : {0.0, 0.1}) {
        const double series = operator_series_at_zero(A, sigma, w, 10);
        const double exact = oracle::exact_orbit_sum(static_cast<unsigned>(A), sigma, w, 10);
        worst = std::max(worst, std::abs(series - exact));
      }
    }
  }
  return {worst <= 1e-8, "max |series - exact orbit sum| = " + fmt("%.3e", worst) + " (tol 1e-8)"};
}

struct RealData {
  CountTable table;
  double delta;
  std::vector<std::uint64_t> grid;
};

const RealData& real_data() {
  static const RealData data = [] {
    RealData d;
    d.grid = dyadic_grid(12, 20);
    d.table = enumerate_real(2, 1 << 20, false, std::max(1u, std::thread::hardware_concurrency()));
    d.delta = solve_dimension(2).delta;
    return d;
  }();
  return data;
}

// 5. slope of |Omega_{N,2}| over 2^12..2^20 within 0.03 of 2 delta_2
Outcome counting() {
  const auto& d = real_data();
  const auto fit = omega_fit(d.table, d.grid);
  const double diff = std::abs(fit.slope - 2.0 * d.delta);
  return {diff <= 0.03, "slope " + fmt("%.5f", fit.slope) + " vs 2*delta " + fmt("%.5f", 2.0 * d.delta) +
                            " |diff| " + fmt("%.5f", diff) + " (tol 0.03)"};
}

// 6. smoothing with gamma = 0.5
Outcome smoothing() {
  const auto& d = real_data();
  const auto rep = smoothing_experiment(d.table, d.delta, 0.5, d.grid);
  const double diff = std::abs(rep.fit.slope - rep.predicted);
  const double wdiff = rep.window_fit ? std::abs(rep.window_fit->slope - 0.75) : 1.0;
  const bool pass = diff <= 0.05 && wdiff <= 0.02 && rep.inclusion_ok;
  return {pass, "slope " + fmt("%.5f", rep.fit.slope) + " vs " + fmt("%.5f", rep.predicted) + " |diff| " +
                    fmt("%.5f", diff) + " (tol 0.05); window slope " +
                    fmt("%.5f", rep.window_fit ? rep.window_fit->slope : NAN) + " (tol 0.02 of 0.75); inclusion " +
                    (rep.inclusion_ok ? "ok" : "VIOLATED")};
}

// 7. complex round trip and lattice-scan oracle
Outcome complex_checks() {
  int failures = 0;
  int done = 0;
  for (int d : {1, 3}) {
    const QuadraticField field(d);
    std::mt19937_64 rng(700 + d);
    std::uniform_int_distribution<long long> c(-100, 100);
    int count = 0;
    while (count < 10000) {
      const QuadElement beta(c(rng), c(rng));
      const QuadElement alpha(c(rng), c(rng));
      if (beta.is_zero() || field.norm(beta) > 10000) continue;
      QuadElement z = field.div(alpha, beta);
      z = z - field.nearest_lattice_point(z);
      if (z.is_zero() || height_squared(field, z) > 10000) continue;
      const auto digits = cf_expand_complex(field, z);
      if (reconstruct_complex(field, digits) != z) ++failures;
      ++count;
    }
    done += count;
  }
  const QuadraticField g(1);
  const auto alphabet = default_alphabet(g, 8);
  const auto fast = enumerate_complex(g, alphabet, 100);
  const bool same = fast == brute_force_complex(g, alphabet, 100);
  return {failures == 0 && same, std::to_string(done) + " field rationals, " + std::to_string(failures) +
                                     " failures; d=1 norm<=8 N=100 tables " + (same ? "equal" : "DIFFER") +
                                     " (|Omega|=" + std::to_string(fast.total()) + ")"};
}

// 8. spectral sanity
Outcome spectral() {
  double worst_count = 0.0;
  for (std::uint64_t A = 1; A <= 8; ++A) {
    worst_count = std::max(worst_count, std::abs(leading_eigenvalue(A, 0.0, 0.0) - static_cast<double>(A)));
  }
  bool monotone = true;
  bool convex = true;
  bool positive = true;
  for (std::uint64_t A : {2u, 3u, 4u}) {
    std::vector<double> logs;
    for (int k = 0; k <= 17; ++k) {
      const auto data = dominant_eig(build_operator(A, 0.1 + 0.05 * k, 0.0, 32));
      for (double v : data.eigenfunction) positive = positive && v > 0.0;
      logs.push_back(std::log(data.lambda));
    }
    for (std::size_t k = 1; k < logs.size(); ++k) monotone = monotone && logs[k] < logs[k - 1];
    for (std::size_t k = 1; k + 1 < logs.size(); ++k) convex = convex && logs[k + 1] - 2 * logs[k] + logs[k - 1] >= -1e-9;
  }
  double worst_pole = 0.0;
  for (std::uint64_t A : {2u, 3u, 5u}) {
    worst_pole = std::max(worst_pole, std::abs(solve_pole(A, 0.0).s0 - solve_dimension(A).delta));
  }
  const bool pass = worst_count <= 1e-12 && monotone && convex && positive && worst_pole <= 2 * kDefaultBisectionTol;
  return {pass, "max|lambda(0,0,A) - A| " + fmt("%.2e", worst_count) + "; decreasing " + (monotone ? "yes" : "NO") +
                    "; log-convex " + (convex ? "yes" : "NO") + "; eigenfunction positive " +
                    (positive ? "yes" : "NO") + "; max|s0(0) - delta| " + fmt("%.2e", worst_pole)};
}

// 9. invariant battery and parallel determinism
Outcome properties() {
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) failed.emplace_back(what);
  };
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  const auto seq = enumerate_real(2, 1 << 18, true, 1);
  expect(seq == enumerate_real(2, 1 << 18, true, hw), "real parallel == sequential (A=2)");
  expect(enumerate_real(5, 1 << 15, true, 1) == enumerate_real(5, 1 << 15, true, hw), "real parallel == sequential (A=5)");
  {
    const QuadraticField e(3);
    const auto alphabet = default_alphabet(e, 20);
    ComplexEnumerationOptions one;
    ComplexEnumerationOptions many;
    many.threads = hw;
    expect(enumerate_complex(e, alphabet, 500, one) == enumerate_complex(e, alphabet, 500, many),
           "complex parallel == sequential (d=3)");
    expect(enumerate_complex(e, alphabet, 150) == brute_force_complex(e, alphabet, 150), "complex oracle d=3");
  }
  {
    std::mt19937_64 rng(9);
    bool chain = true;
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t N = std::uniform_int_distribution<std::uint64_t>(2, 1 << 18)(rng);
      const std::uint64_t lo = std::uniform_int_distribution<std::uint64_t>(2, N)(rng);
      const auto th = thickened_count(seq, ThickenedWindow::range(lo, N));
      chain = chain && sigma_count(seq, N) <= th && th <= omega_count(seq, N);
    }
    expect(chain, "inclusion chain");
  }
  {
    const auto a3 = enumerate_real(3, 1 << 14);
    bool mono = true;
    for (std::uint64_t N = 2; N <= (1 << 14); N += 97) {
      mono = mono && omega_count(seq, N) <= omega_count(a3, N) && omega_count(seq, N) <= omega_count(seq, N + 1);
    }
    expect(mono, "omega monotone in N and A");
  }
  {
    bool ok = true;
    for (std::uint64_t n = 0; n <= 5000; ++n) ok = ok && seq.weighted(n, 0.0) == static_cast<double>(seq.count(n));
    expect(ok, "weighted(n, 0) == count(n)");
  }
  {
    std::ostringstream out;
    const auto small = enumerate_real(3, 3000, true);
    write_csv(out, small);
    std::istringstream in(out.str());
    const auto csv = read_csv(in);
    bool ok = true;
    for (const auto& row : csv.rows) {
      ok = ok && row.count == small.count(row.n);
      for (std::size_t k = 0; k < csv.w_grid.size(); ++k) ok = ok && row.weighted[k] == small.weighted(row.n, csv.w_grid[k]);
    }
    expect(ok, "csv round trip");
  }
  {
    bool ok = true;
    for (std::uint64_t A = 2; A <= 6; ++A) {
      for (double sigma = 0.3; sigma <= 0.9 + 1e-9; sigma += 0.2) {
        ok = ok && std::abs(leading_eigenvalue(A, sigma, 0.0, 32) - leading_eigenvalue(A, sigma, 0.0, 64)) < 1e-12;
      }
    }
    expect(ok, "spectral convergence m vs 2m");
  }
  {
    double prev = 0.0;
    bool ok = true;
    for (std::uint64_t A = 2; A <= 5; ++A) {
      const double d = solve_dimension(A).delta;
      ok = ok && d > prev;
      prev = d;
    }
    expect(ok, "delta_2 < delta_3 < delta_4 < delta_5");
  }
  std::string detail = failed.empty() ? "all invariants hold (threads=" + std::to_string(hw) + ")" : "failed:";
  for (const auto& f : failed) detail += " [" + f + "]";
  return {failed.empty(), detail};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "round-trip exactness", 10.0, round_trip},
      {2, "real oracle equivalence", 60.0, oracle_real},
      {3, "dimension delta_2", 5.0, dimension},
      {4, "operator identity", 10.0, identity},
      {5, "counting asymptotics", 300.0, counting},
      {6, "smoothing", 300.0, smoothing},
      {7, "complex round trip and oracle", 60.0, complex_checks},
      {8, "spectral sanity", 60.0, spectral},
      {9, "property suite", 300.0, properties},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.contains(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.time_limit;
    const bool pass = o.pass && in_time;
    std::printf("%s %d %s: %s; %.2f s (limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.time_limit);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
