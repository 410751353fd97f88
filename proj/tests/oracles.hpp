#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "hypersimp/hypergraph.hpp"

namespace hypersimp::oracle {

// Betweenness from all-pairs distances and path counts:
// sum over s < t of sigma_sv * sigma_vt / sigma_st on shortest s-t paths.
inline std::vector<double> recount_betweenness(const Hypergraph& g) {
  const std::size_t n = g.num_edges();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto& x = g.edge(a);
      const auto& y = g.edge(b);
      for (Vertex v : x)
        if (std::find(y.begin(), y.end(), v) != y.end()) adj[a][b] = true;
    }
  std::vector<std::vector<long>> dist(n, std::vector<long>(n, -1));
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    dist[s][s] = 0;
    sigma[s][s] = 1;
    q.push(s);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (std::size_t w = 0; w < n; ++w) {
        if (!adj[v][w]) continue;
        if (dist[s][w] < 0) dist[s][w] = dist[s][v] + 1, q.push(w);
        if (dist[s][w] == dist[s][v] + 1) sigma[s][w] += sigma[s][v];
      }
    }
  }
  std::vector<double> bc(n, 0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      if (dist[s][t] < 0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t || dist[s][v] < 0 || dist[v][t] < 0) continue;
        if (dist[s][v] + dist[v][t] == dist[s][t]) bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  return bc;
}

}  // namespace hypersimp::oracle
