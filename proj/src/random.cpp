#include "hypersimp/random.hpp"

#include <algorithm>

#include "hypersimp/hypergraph.hpp"

namespace hypersimp {

AliasTable::AliasTable(std::span<const std::uint64_t> weights) {
  const std::size_t n = weights.size();
  long double total = 0;
  for (auto w : weights) total += w;
  if (n == 0 || total <= 0) throw Error("alias table needs a positive total weight");

  prob_.assign(n, 0.0);
  alias_.assign(n, 0);
  std::vector<long double> scaled(n);
  std::vector<std::size_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] * (long double)n / total;
    (scaled[i] < 1 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const auto s = small.back();
    small.pop_back();
    const auto l = large.back();
    prob_[s] = static_cast<double>(scaled[s]);
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1;
    if (scaled[l] < 1) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding; zero weights must still never be drawn.
  const auto positive = static_cast<std::size_t>(
      std::find_if(weights.begin(), weights.end(), [](auto w) { return w > 0; }) - weights.begin());
  for (auto i : large) prob_[i] = 1.0, alias_[i] = i;
  for (auto i : small) {
    prob_[i] = weights[i] > 0 ? 1.0 : 0.0;
    alias_[i] = weights[i] > 0 ? i : positive;
  }
}

}  // namespace hypersimp
