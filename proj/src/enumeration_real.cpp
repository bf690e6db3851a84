#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>
#include <vector>

#include "boundedcf/enumeration.hpp"
#include "boundedcf/real_cf.hpp"

namespace boundedcf {

namespace {

struct Node {
  std::uint64_t q_prev;
  std::uint64_t q_cur;
  std::uint32_t depth;
};

// Upper bound on the expansion length of a rational with denominator <= N:
// the l-th continuant is at least the Fibonacci number F_{l+1}.
std::size_t max_length_for(std::uint64_t N) {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::size_t l = 0;
  while (b <= N) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
    ++l;
  }
  return l + 1;
}

// Expands the subtree below `root` (root itself is not recorded).
void search_subtree(const Node& root, std::uint64_t bound, std::uint64_t N, CountTable& table,
                    std::vector<Node>& stack) {
  stack.clear();
  stack.push_back(root);
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    for (std::uint64_t a = 1; a <= bound; ++a) {
      const std::uint64_t q = a * node.q_cur + node.q_prev;
      if (q > N) break;
      if (a >= 2) table.add(q, node.depth + 1);
      stack.push_back({node.q_cur, q, node.depth + 1});
    }
  }
}

}  // namespace

CountTable enumerate_real(std::uint64_t bound, std::uint64_t N, bool collect_lengths,
                          unsigned threads) {
  if (N < 2) throw DomainError("enumerate_real requires N >= 2");
  if (bound < 1) throw DomainError("enumerate_real requires a digit bound >= 1");
  const std::size_t length_cap = collect_lengths ? max_length_for(N) : 0;
  CountTable table(N, collect_lengths, length_cap);
  const Node root{0, 1, 0};
  std::vector<Node> stack;

  if (threads <= 1) {
    search_subtree(root, bound, N, table, stack);
    return table;
  }

  // Breadth-first split until there are enough subtrees to balance the
  // workers; shallow leaves are recorded directly.
  std::vector<Node> frontier{root};
  while (frontier.size() < 8 * static_cast<std::size_t>(threads)) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (std::uint64_t a = 1; a <= bound; ++a) {
        const std::uint64_t q = a * node.q_cur + node.q_prev;
        if (q > N) break;
        if (a >= 2) table.add(q, node.depth + 1);
        next.push_back({node.q_cur, q, node.depth + 1});
      }
    }
    if (next.empty()) return table;
    frontier = std::move(next);
  }

  std::vector<CountTable> partial(threads);
  std::atomic<std::size_t> next_task{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        CountTable local(N, collect_lengths, length_cap);
        std::vector<Node> local_stack;
        for (std::size_t i = next_task++; i < frontier.size(); i = next_task++) {
          search_subtree(frontier[i], bound, N, local, local_stack);
        }
        partial[t] = std::move(local);
      });
    }
  }
  for (const auto& p : partial) table += p;
  return table;
}

CountTable brute_force_real(std::uint64_t bound, std::uint64_t N) {
  if (N < 2) throw DomainError("brute_force_real requires N >= 2");
  if (N > 100000) throw DomainError("brute_force_real is limited to N <= 100000");
  CountTable table(N, true, max_length_for(N));
  for (std::uint64_t n = 2; n <= N; ++n) {
    for (std::uint64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const DigitSequence digits = cf_expand(ExactRational(a, n));
      const bool ok = std::all_of(digits.begin(), digits.end(),
                                  [bound](const BigInt& d) { return d <= bound; });
      if (ok) table.add(n, digits.size());
    }
  }
  return table;
}

std::uint64_t sigma_count(const CountTable& table, std::uint64_t N) { return table.count(N); }

std::uint64_t omega_count(const CountTable& table, std::uint64_t N) { return table.cumulative(N); }

ThickenedWindow ThickenedWindow::for_gamma(std::uint64_t N, double gamma) {
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
  if (N < 1) throw DomainError("window needs N >= 1");
  ThickenedWindow w;
  w.N = N;
  w.gamma = gamma;
  w.epsilon = std::pow(static_cast<double>(N), -gamma / 2.0);
  w.width = static_cast<std::uint64_t>(std::floor(static_cast<double>(N) * w.epsilon));
  if (w.width >= N) throw DomainError("window underflow: floor(N*eps) >= N");
  w.n_low = N - w.width;
  return w;
}

ThickenedWindow ThickenedWindow::range(std::uint64_t n_low, std::uint64_t N) {
  if (n_low > N) throw DomainError("window lower end exceeds N");
  ThickenedWindow w;
  w.N = N;
  w.width = N - n_low;
  w.n_low = n_low;
  w.epsilon = static_cast<double>(w.width) / static_cast<double>(N);
  return w;
}

std::uint64_t thickened_count(const CountTable& table, const ThickenedWindow& window) {
  if (table.max_key() < window.N) {
    throw DomainError("count table stops at " + std::to_string(table.max_key()) +
                      ", window needs " + std::to_string(window.N));
  }
  std::uint64_t sum = 0;
  for (std::uint64_t n = window.n_low; n <= window.N; ++n) sum += table.count(n);
  return sum;
}

double truncated_orbit_sum(std::uint64_t bound, double sigma, double w, std::size_t depth) {
  if (depth < 1) throw DomainError("orbit sum depth must be >= 1");
  struct Frame {
    BigInt q_prev;
    BigInt q_cur;
    std::size_t length;
  };
  long double sum = 0.0L;
  std::vector<Frame> stack{{BigInt(0), BigInt(1), 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.length == depth) continue;
    for (std::uint64_t a = 1; a <= bound; ++a) {
      BigInt q = a * f.q_cur + f.q_prev;
      if (a >= 2) {
        const long double qd = q.convert_to<long double>();
        sum += std::pow(qd, -2.0L * sigma) * std::exp(static_cast<long double>(w) * (f.length + 1));
      }
      stack.push_back({f.q_cur, std::move(q), f.length + 1});
    }
  }
  return static_cast<double>(sum);
}

}  // namespace boundedcf
