#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "boundedcf/complex_cf.hpp"
#include "boundedcf/enumeration.hpp"
#include "boundedcf/lattice.hpp"

namespace boundedcf {

namespace {

using Wide = __int128;
using Point = LatticeCoords<Wide>;

Point to_point(const QuadElement& a) {
  if (!a.is_integral()) throw DomainError("alphabet digits must lie in O_d");
  return {static_cast<Wide>(numerator_of(a.u).convert_to<long long>()),
          static_cast<Wide>(numerator_of(a.v).convert_to<long long>())};
}

class ComplexSearch {
 public:
  ComplexSearch(const FieldShape& shape, std::vector<Point> alphabet, std::uint64_t N,
                const ComplexEnumerationOptions& options)
      : f_(shape), alphabet_(std::move(alphabet)), N_(static_cast<Wide>(N)), options_(options) {}

  // Tries digit i in front of the node p/q, whose own digit string (read
  // outward) is `path`; records and recurses when the result is valid.
  void visit_child(const Point& p, const Point& q, std::size_t i, CountTable& table,
                   std::vector<std::size_t>& path) const {
    const Point Q = lattice_add(lattice_mul(f_, alphabet_[i], q), p);
    const Wide nq = lattice_norm(f_, Q);
    if (nq > N_ || nq == 0) return;
    const auto [num, den] = scaled_quotient(f_, q, Q);
    if (!in_closed_cell_scaled(f_, num.u, num.v, den)) return;
    const Wide np = lattice_norm(f_, q);
    path.push_back(i);
    if (options_.validate) check_expansion(q, Q, path);
    table.add(static_cast<std::uint64_t>(np > nq ? np : nq), path.size());
    extend(q, Q, table, path);
    path.pop_back();
  }

  void extend(const Point& p, const Point& q, CountTable& table, std::vector<std::size_t>& path) const {
    // The digit placed in front of p/q is round(alpha + p/q), so p/q itself
    // must round to 0; boundary points that lose the tie have no extensions.
    const auto [num, den] = scaled_quotient(f_, p, q);
    if (!nearest_scaled(f_, num.u, num.v, den).is_zero()) return;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) visit_child(p, q, i, table, path);
  }

  void run_subtree(std::size_t first, CountTable& table) const {
    std::vector<std::size_t> path;
    visit_child(Point{0, 0}, Point{1, 0}, first, table, path);
  }

  std::size_t alphabet_size() const { return alphabet_.size(); }

 private:
  // Forward expansion of P/Q must reproduce path_ read back to front.
  void check_expansion(Point P, Point Q, const std::vector<std::size_t>& path) const {
    for (std::size_t k = path.size(); k-- > 0;) {
      if (P.is_zero()) throw std::logic_error("re-expansion terminated early");
      const auto [num, den] = scaled_quotient(f_, Q, P);
      const Point digit = nearest_scaled(f_, num.u, num.v, den);
      if (!(digit == alphabet_[path[k]])) throw std::logic_error("re-expansion digit mismatch");
      const Point rest = lattice_sub(Q, lattice_mul(f_, digit, P));
      Q = P;
      P = rest;
    }
    if (!P.is_zero()) throw std::logic_error("re-expansion did not terminate");
  }

  FieldShape f_;
  std::vector<Point> alphabet_;
  Wide N_;
  ComplexEnumerationOptions options_;
};

}  // namespace

CountTable enumerate_complex(const QuadraticField& field, std::span<const QuadElement> alphabet,
                             std::uint64_t N, const ComplexEnumerationOptions& options) {
  if (N > (std::uint64_t{1} << 40)) throw DomainError("enumerate_complex is limited to N <= 2^40");
  std::set<QuadElement> unique(alphabet.begin(), alphabet.end());
  std::vector<Point> digits;
  for (const auto& a : unique) digits.push_back(to_point(a));

  CountTable table(N, options.collect_lengths, 8);
  const ComplexSearch search(field.shape(), std::move(digits), N, options);
  const std::size_t tasks = search.alphabet_size();
  const unsigned threads = std::max(1u, options.threads);

  if (threads == 1) {
    for (std::size_t i = 0; i < tasks; ++i) search.run_subtree(i, table);
    return table;
  }
  std::vector<CountTable> partial(threads);
  std::atomic<std::size_t> next_task{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        CountTable local(N, options.collect_lengths, 8);
        for (std::size_t i = next_task++; i < tasks; i = next_task++) search.run_subtree(i, local);
        partial[t] = std::move(local);
      });
    }
  }
  for (const auto& p : partial) table += p;
  return table;
}

CountTable brute_force_complex(const QuadraticField& field, std::span<const QuadElement> alphabet,
                               std::uint64_t N) {
  if (N > 10000) throw DomainError("brute_force_complex is limited to N <= 10^4");
  const std::set<QuadElement> allowed(alphabet.begin(), alphabet.end());
  CountTable table(N, true, 8);
  if (N < 1) return table;

  const FieldShape& f = field.shape();
  const double v_coeff = f.norm - f.trace * f.trace / 4.0;
  const long long v_max = static_cast<long long>(std::sqrt(N / v_coeff)) + 1;
  const long long u_max = static_cast<long long>(std::sqrt(static_cast<double>(N))) + v_max + 1;
  std::vector<QuadElement> ball;
  for (long long u = -u_max; u <= u_max; ++u) {
    for (long long v = -v_max; v <= v_max; ++v) {
      if (lattice_norm(f, u, v) <= static_cast<long long>(N)) ball.emplace_back(u, v);
    }
  }
  const auto units = field.units();
  for (const auto& beta : ball) {
    if (beta.is_zero()) continue;
    // One representative per unit class of denominators.
    bool canonical = true;
    for (const auto& unit : units) {
      if (field.mul(beta, unit) > beta) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    const ExactRational nb = field.norm(beta);
    for (const auto& alpha : ball) {
      // |alpha/beta| < 1 on I_d.
      if (alpha.is_zero() || field.norm(alpha) >= nb) continue;
      const QuadElement z = field.div(alpha, beta);
      if (!field.in_closed_domain(z)) continue;
      if (field.norm(euclid_gcd(field, alpha, beta)) != 1) continue;
      const auto digits = cf_expand_complex(field, z);
      bool ok = true;
      for (const auto& d : digits) {
        if (!allowed.contains(d)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      table.add(numerator_of(nb).convert_to<std::uint64_t>(), digits.size());
    }
  }
  return table;
}

}  // namespace boundedcf
