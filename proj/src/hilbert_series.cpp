#include "jacring/quotient.hpp"

namespace jacring {

std::vector<long long> ci_hilbert_series(const std::vector<int>& generator_degrees,
                                         const Grading& grading) {
  if (generator_degrees.size() != grading.num_vars()) {
    throw NonCIShape("complete intersection needs " + std::to_string(grading.num_vars()) +
                     " generator degrees, got " + std::to_string(generator_degrees.size()));
  }
  std::vector<long long> num{1};
  for (int e : generator_degrees) {
    if (e < 1) throw NonCIShape("generator degree " + std::to_string(e) + " is not positive");
    std::vector<long long> next(num.size() + e, 0);
    for (std::size_t i = 0; i < num.size(); ++i) {
      next[i] += num[i];
      next[i + e] -= num[i];
    }
    num = std::move(next);
  }
  // Exact division by each (1 - t^w): q_i = n_i + q_{i-w}.
  for (int w : grading.weights()) {
    if (num.size() < static_cast<std::size_t>(w)) {
      throw NonCIShape("Hilbert series is not a polynomial");
    }
    const std::size_t qlen = num.size() - w;
    std::vector<long long> q(qlen, 0);
    for (std::size_t i = 0; i < qlen; ++i) q[i] = num[i] + (i >= static_cast<std::size_t>(w) ? q[i - w] : 0);
    // remainder terms must vanish
    for (std::size_t i = qlen; i < num.size(); ++i) {
      long long r = num[i] + (i >= static_cast<std::size_t>(w) ? q[i - w] : 0);
      if (r != 0) throw NonCIShape("Hilbert series is not a polynomial for these weights");
    }
    num = std::move(q);
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return num;
}

}  // namespace jacring
