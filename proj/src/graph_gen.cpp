#include "dpcolor/graph_gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dpcolor {

namespace {

int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

std::uint64_t code_under(const std::vector<std::uint32_t>& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (adj[order[i]] >> order[j] & 1u) code |= 1ull << pair_bit(i, j);
    }
  }
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 11) throw GraphError("canonical codes support at most 11 vertices");
  if (!g.is_simple()) throw GraphError("canonical codes are for simple graphs");
  std::vector<std::uint32_t> adj(n, 0);
  std::vector<int> degree(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });
  // Blocks of equal degree are permuted independently.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && degree[order[j]] == degree[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::uint64_t best = ~0ull;
  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      best = std::min(best, code_under(adj, order));
      return;
    }
    auto first = order.begin() + blocks[block].first;
    auto last = order.begin() + blocks[block].second;
    std::sort(first, last);
    do {
      self(self, block + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

Multigraph from_canonical_code(int n, std::uint64_t code) {
  Multigraph g(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (code >> pair_bit(i, j) & 1ull) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<Multigraph> connected_graphs(int n) {
  if (n < 1 || n > 7) throw GraphError("connected graph generation supports 1 <= n <= 7");
  std::vector<Multigraph> out{Multigraph(1)};
  // Every connected graph arises from a connected graph on one vertex fewer
  // by adding a vertex joined to a nonempty subset (delete a non-cut vertex).
  for (int size = 2; size <= n; ++size) {
    std::map<std::pair<int, std::uint64_t>, Multigraph> found;
    for (const auto& base : out) {
      for (std::uint32_t subset = 1; subset < (1u << (size - 1)); ++subset) {
        Multigraph g(size);
        for (const auto& e : base.edges()) g.add_edge(e.u, e.v);
        for (int v = 0; v < size - 1; ++v) {
          if (subset >> v & 1u) g.add_edge(v, size - 1);
        }
        const std::uint64_t code = canonical_code(g);
        found.try_emplace({g.edge_count(), code}, from_canonical_code(size, code));
      }
    }
    out.clear();
    for (auto& [key, g] : found) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Multigraph> connected_graphs_up_to(int n_max) {
  std::vector<Multigraph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto part = connected_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Multigraph> trees(int n) {
  std::vector<Multigraph> out;
  for (auto& g : connected_graphs(n)) {
    if (g.edge_count() == n - 1) out.push_back(std::move(g));
  }
  return out;
}

Multigraph random_connected_graph(int n, std::mt19937_64& rng, double p) {
  if (n < 1) throw GraphError("need n >= 1");
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Multigraph g(n);
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (coin(rng)) g.add_edge(i, j);
      }
    }
    if (g.is_connected()) return g;
  }
  throw GraphError("could not sample a connected graph");
}

}  // namespace dpcolor
