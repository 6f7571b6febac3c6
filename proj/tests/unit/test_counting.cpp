#include "doctest.h"

#include <algorithm>
#include <random>

#include "dpcolor/counting.hpp"
#include "dpcolor/finite_field.hpp"
#include "dpcolor/graph_gen.hpp"

using namespace dpcolor;

namespace {

std::uint64_t brute_count(const SLabeling& l) {
  const int n = l.graph.vertex_count();
  std::vector<int> c(n, 0);
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (std::size_t e = 0; e < l.perms.size() && ok; ++e) {
      const Arc a = l.orientation.arcs[e];
      for (const auto& p : l.perms[e]) {
        if (p(c[a.tail]) == c[a.head]) ok = false;
      }
    }
    total += ok;
    int v = 0;
    while (v < n && ++c[v] == l.k) c[v++] = 0;
    if (v == n) return total;
  }
}

// Minimum over every labeling of every edge (no normalization, no dedup).
std::uint64_t brute_min(const Multigraph& g, const PermutationSet& s) {
  SLabeling l = SLabeling::identity(g, s.degree());
  const int m = g.pair_count();
  std::vector<std::size_t> choice(m, 0);
  std::uint64_t best = ~0ull;
  while (true) {
    for (int e = 0; e < m; ++e) l.perms[e][0] = s[choice[e]];
    best = std::min(best, brute_count(l));
    int e = 0;
    while (e < m && ++choice[e] == s.size()) choice[e++] = 0;
    if (e == m) return best;
  }
}

std::uint64_t brute_signed(const SignedGraph& sg, int k) {
  const auto pal = signed_palette(k);
  const int n = sg.graph.vertex_count();
  std::vector<int> c(n, 0);
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (std::size_t e = 0; e < sg.sign.size(); ++e) {
      const auto& r = sg.graph.edges()[e];
      if (pal[c[r.v]] == sg.sign[e] * pal[c[r.u]]) ok = false;
    }
    total += ok;
    int v = 0;
    while (v < n && ++c[v] == k) c[v++] = 0;
    if (v == n) return total;
  }
}

std::uint64_t brute_signed_min(const Multigraph& g, int k) {
  std::uint64_t best = ~0ull;
  SignedGraph sg = SignedGraph::all_positive(g);
  for (std::uint64_t mask = 0; mask < (1ull << g.pair_count()); ++mask) {
    for (int e = 0; e < g.pair_count(); ++e) sg.sign[e] = (mask >> e) & 1 ? -1 : 1;
    best = std::min(best, brute_signed(sg, k));
  }
  return best;
}

std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Permutation P(const char* s) { return Permutation::parse(s); }

const Multigraph kC4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
const Multigraph kK3(3, {{0, 1}, {0, 2}, {1, 2}});

}  // namespace

TEST_CASE("counting fixed labelings") {
  for (int k = 2; k <= 6; ++k) {
    SLabeling l = SLabeling::identity(Multigraph(2, {{0, 1}}), k);
    std::vector<int> img(k);
    for (int i = 0; i < k; ++i) img[i] = (i + 1) % k;
    l.perms[0][0] = Permutation(img);
    CHECK(count_colorings(l) == static_cast<std::uint64_t>(k * (k - 1)));
  }
  CHECK(count_colorings(SLabeling::identity(Multigraph(3, {{0, 1}, {1, 2}}), 3)) == 12);
  SLabeling c4 = SLabeling::identity(kC4, 3);
  c4.perms[*kC4.edge_index(2, 3)][0] = P("120");
  CHECK(count_colorings(c4) == brute_count(c4));
  // Multigraph tuples and restricted palettes.
  Multigraph dipole(2);
  dipole.add_edge(0, 1, 2);
  SLabeling d = SLabeling::identity(dipole, 3);
  d.perms[0][1] = P("120");
  CHECK(count_colorings(d) == brute_count(d));
  CHECK(count_colorings(d) == 3);
  CHECK(count_colorings(SLabeling::identity(kK3, 4), {0, 1, 2}) == 6);
  CHECK_FALSE(is_proper_coloring(c4, {0, 1, 0, 1}));  // 120 sends 0 to 1 on edge 23
  CHECK(is_proper_coloring(c4, {0, 1, 0, 2}));
}

TEST_CASE("chromatic values match deletion-contraction") {
  CHECK(chromatic_value(kK3, 3) == 6);
  CHECK(chromatic_value(kC4, 3) == 18);
  CHECK(chromatic_value(Multigraph(3, {{0, 1}, {1, 2}}), 4) == 36);
  CHECK(chromatic_polynomial(kK3) == std::vector<std::int64_t>{0, 2, -3, 1});
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const auto poly = chromatic_polynomial(g);
      for (int k = 2; k <= 5; ++k) {
        CHECK(chromatic_value(g, k) == static_cast<std::uint64_t>(evaluate_polynomial(poly, k)));
      }
    }
  }
}

TEST_CASE("DP color function against exhaustive labelings") {
  const auto s3 = PermutationSet::symmetric(3);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const auto expected = brute_min(g, s3);
      CHECK(dp_color_function(g, 3).value == expected);
      CountOptions off;
      off.dedup = false;
      CHECK(dp_color_function(g, 3, off).value == expected);
      CountOptions par;
      par.jobs = 4;
      const auto r = dp_color_function(g, 3, par);
      CHECK(r.value == expected);
      REQUIRE(r.witness);
      CHECK(count_colorings(*r.witness) == expected);
    }
  }
  CHECK(dp_color_function(Multigraph(2, {{0, 1}}), 5).value == 20);
  CHECK(dp_color_function(kC4, 2).value == brute_min(kC4, PermutationSet::symmetric(2)));
  CHECK(dp_color_function(kC4, 4).value == brute_min(kC4, PermutationSet::symmetric(4)));
}

TEST_CASE("trees have the closed form") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : trees(n)) {
      for (int k : {3, 4, 5}) {
        const std::uint64_t expected = k * power(k - 1, n - 1);
        CHECK(dp_color_function(t, k).value == expected);
        CHECK(linear_color_function(t, k).value == expected);
        if (k % 2 == 1) CHECK(signed_color_function(t, k).value == expected);
      }
    }
  }
}

TEST_CASE("linear color function against exhaustive labelings") {
  const Field f4 = Field::of_order(4);
  CHECK(linear_color_function(kC4, 4).value == brute_min(kC4, PermutationSet::affine(f4)));
  CHECK(linear_color_function(kK3, 4).value == brute_min(kK3, PermutationSet::affine(f4)));
  const Field f5 = Field::of_order(5);
  CHECK(linear_color_function(kK3, 5).value == brute_min(kK3, PermutationSet::affine(f5)));
  CHECK_THROWS_AS(linear_color_function(kC4, 6), CountingError);
}

TEST_CASE("sandwich inequalities") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      if (g.edge_count() - n + 1 > 3) continue;
      for (int k : {3, 4}) {
        const auto dp = dp_color_function(g, k).value;
        const auto lin = linear_color_function(g, k).value;
        const auto chi = chromatic_value(g, k);
        const auto sgn = signed_color_function(g, k).value;
        CHECK(dp <= lin);
        CHECK(lin <= chi);
        CHECK(dp <= sgn);
        CHECK(sgn <= chi);
      }
    }
  }
}

TEST_CASE("signed counts") {
  const Multigraph k2(2, {{0, 1}});
  CHECK(signed_count(SignedGraph{k2, {-1}}, 2) == 2);
  CHECK(signed_count(SignedGraph::all_positive(k2), 3) == 6);
  CHECK(signed_count(SignedGraph{kK3, {-1, -1, -1}}, 3) == brute_signed(SignedGraph{kK3, {-1, -1, -1}}, 3));
  CHECK(signed_color_function(k2, 4).value == 12);
  CHECK(signed_palette(5) == std::vector<int>{-2, -1, 0, 1, 2});
  CHECK(signed_palette(4) == std::vector<int>{-2, -1, 1, 2});
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      if (g.pair_count() > 8) continue;
      for (int k : {2, 3, 4, 5}) {
        CHECK(signed_color_function(g, k).value == brute_signed_min(g, k));
      }
    }
  }
}

TEST_CASE("colorability") {
  CHECK_FALSE(dp_chromatic_leq(kC4, 2).colorable);
  const auto r = s_colorable(kC4, PermutationSet::symmetric(2));
  REQUIRE(r.witness);
  CHECK(count_colorings(*r.witness) == 0);
  CHECK(dp_chromatic_leq(Multigraph(4, {{0, 1}, {1, 2}, {1, 3}}), 2).colorable);
  const Multigraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(dp_chromatic_leq(k4, 4).colorable);
  CHECK_FALSE(dp_chromatic_leq(k4, 3).colorable);
  CHECK(signed_colorable(kC4, 3));
  CHECK_FALSE(signed_colorable(kK3, 2));
  // Multigraphs: a doubled edge needs three colors under every labeling.
  Multigraph dipole(2);
  dipole.add_edge(0, 1, 2);
  CHECK_FALSE(s_colorable(dipole, PermutationSet::symmetric(2)).colorable);
  CHECK(s_colorable(dipole, PermutationSet::symmetric(3)).colorable);
}

TEST_CASE("components multiply") {
  const Multigraph two(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {4, 6}, {5, 6}});
  for (int k : {3, 4}) {
    CHECK(dp_color_function(two, k).value == dp_color_function(kC4, k).value * dp_color_function(kK3, k).value);
  }
  const auto r = dp_color_function(two, 3);
  REQUIRE(r.witness);
  CHECK(count_colorings(*r.witness) == r.value);
  CHECK(dp_color_function(Multigraph(3), 4).value == 64);
}

TEST_CASE("budgets flag partial results") {
  // K4 at k = 4 has a positive minimum, so the search cannot stop at a zero.
  const Multigraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CountOptions tiny;
  tiny.budget = 1000;
  const auto r = dp_color_function(k4, 4, tiny);
  CHECK(r.partial);
  CHECK(r.labelings_examined < r.labelings_total);
}
