#include "dpcolor/counting.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "dpcolor/finite_field.hpp"
#include "dpcolor/parallel.hpp"

namespace dpcolor {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) throw CountingError("count overflows 64 bits");
  return a * b;
}

std::uint64_t palette_mask(int k, const std::vector<int>& palette) {
  if (palette.empty()) return ColoringCounter::full_palette(k);
  std::uint64_t mask = 0;
  for (int c : palette) {
    if (c < 0 || c >= k) throw CountingError("palette color out of range");
    mask |= 1ull << c;
  }
  return mask;
}

}  // namespace

ColoringCounter::ColoringCounter(const Multigraph& g, const Orientation& o, int k) : n_(g.vertex_count()), k_(k) {
  if (k < 1 || k > 64) throw CountingError("counting supports 1 <= k <= 64");
  if (o.arcs.size() != g.edges().size()) throw CountingError("orientation does not match graph");
  const SpanningTree forest = spanning_forest(g);
  std::vector<int> pos(n_);
  for (int i = 0; i < n_; ++i) pos[forest.order[i]] = i;

  std::vector<std::vector<Constraint>> per(n_);
  slot_offset_.resize(g.pair_count());
  for (int e = 0; e < g.pair_count(); ++e) {
    slot_offset_[e] = slot_count_;
    const Arc a = o.arcs[e];
    for (int c = 0; c < g.edges()[e].multiplicity; ++c) {
      const int slot = slot_count_++;
      if (pos[a.head] > pos[a.tail]) {
        per[pos[a.head]].push_back(Constraint{pos[a.tail], slot, false});
      } else {
        per[pos[a.tail]].push_back(Constraint{pos[a.head], slot, true});
      }
    }
  }
  begin_.push_back(0);
  for (const auto& list : per) {
    constraints_.insert(constraints_.end(), list.begin(), list.end());
    begin_.push_back(static_cast<int>(constraints_.size()));
  }
}

std::uint64_t ColoringCounter::descend(int pos, std::vector<int>& color, const std::uint8_t* const* fwd,
                                       const std::uint8_t* const* inv, std::uint64_t palette, std::uint64_t limit,
                                       std::uint64_t& count, std::uint64_t& steps) const {
  ++steps;
  std::uint64_t forbidden = 0;
  for (int i = begin_[pos]; i < begin_[pos + 1]; ++i) {
    const Constraint& c = constraints_[i];
    const std::uint8_t* map = c.inverse ? inv[c.slot] : fwd[c.slot];
    forbidden |= 1ull << map[color[c.earlier]];
  }
  std::uint64_t allowed = palette & ~forbidden;
  if (pos == n_ - 1) {
    count += static_cast<std::uint64_t>(std::popcount(allowed));
    return count;
  }
  while (allowed) {
    color[pos] = std::countr_zero(allowed);
    allowed &= allowed - 1;
    descend(pos + 1, color, fwd, inv, palette, limit, count, steps);
    if (count >= limit) break;
  }
  return count;
}

std::uint64_t ColoringCounter::count(const std::uint8_t* const* fwd, const std::uint8_t* const* inv,
                                     std::uint64_t palette, std::uint64_t limit, std::uint64_t& steps) const {
  if (n_ == 0) return 1;
  std::vector<int> color(n_, 0);
  std::uint64_t total = 0;
  descend(0, color, fwd, inv, palette, limit, total, steps);
  return total;
}

std::uint64_t count_colorings(const SLabeling& l, const std::vector<int>& palette, std::uint64_t& steps) {
  l.validate();
  const ColoringCounter counter(l.graph, l.orientation, l.k);
  std::vector<std::vector<std::uint8_t>> tables;
  tables.reserve(2 * counter.slot_count());
  std::vector<const std::uint8_t*> fwd(counter.slot_count()), inv(counter.slot_count());
  for (int e = 0; e < l.graph.pair_count(); ++e) {
    for (std::size_t c = 0; c < l.perms[e].size(); ++c) {
      const Permutation& p = l.perms[e][c];
      std::vector<std::uint8_t> f(l.k), r(l.k);
      for (int x = 0; x < l.k; ++x) {
        f[x] = static_cast<std::uint8_t>(p(x));
        r[p(x)] = static_cast<std::uint8_t>(x);
      }
      tables.push_back(std::move(f));
      tables.push_back(std::move(r));
      const int slot = counter.slot_offset(e) + static_cast<int>(c);
      fwd[slot] = tables[tables.size() - 2].data();
      inv[slot] = tables.back().data();
    }
  }
  return counter.count(fwd.data(), inv.data(), palette_mask(l.k, palette), kSaturated, steps);
}

std::uint64_t count_colorings(const SLabeling& l, const std::vector<int>& palette) {
  std::uint64_t steps = 0;
  return count_colorings(l, palette, steps);
}

bool is_proper_coloring(const SLabeling& l, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != l.graph.vertex_count()) return false;
  for (int c : coloring) {
    if (c < 0 || c >= l.k) return false;
  }
  for (std::size_t e = 0; e < l.perms.size(); ++e) {
    const Arc a = l.orientation.arcs[e];
    for (const auto& p : l.perms[e]) {
      if (p(coloring[a.tail]) == coloring[a.head]) return false;
    }
  }
  return true;
}

// --- minimisation over labelings ---------------------------------------------

namespace {

enum class Goal { minimum, colorable };

struct ComponentResult {
  std::uint64_t value = kSaturated;
  bool partial = false;
  bool found_witness = false;
  SLabeling witness;
  std::uint64_t examined = 0;
  std::uint64_t total = 0;
  std::uint64_t group_order = 1;
  std::uint64_t steps = 0;
};

ComponentResult run_component(const Multigraph& h, const PermutationSet& s, const CountOptions& opts, Goal goal,
                              std::uint64_t budget) {
  const int k = s.degree();
  const SpanningTree t = spanning_tree(h);
  const auto slots = free_slots(h, t);
  const ColoringCounter counter(h, canonical_orientation(h), k);

  std::vector<std::vector<std::uint8_t>> fwd_tab(s.size()), inv_tab(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    fwd_tab[i].resize(k);
    inv_tab[i].resize(k);
    for (int x = 0; x < k; ++x) {
      fwd_tab[i][x] = static_cast<std::uint8_t>(s[i](x));
      inv_tab[i][s[i](x)] = static_cast<std::uint8_t>(x);
    }
  }
  std::vector<std::uint8_t> id_tab(k);
  for (int x = 0; x < k; ++x) id_tab[x] = static_cast<std::uint8_t>(x);

  std::vector<int> free_index(counter.slot_count(), -1);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    free_index[counter.slot_offset(slots[i].edge) + slots[i].component] = static_cast<int>(i);
  }

  ComponentResult res;
  res.total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) res.total = saturating_mul(res.total, s.size());
  if (goal == Goal::colorable) res.value = 1;

  const std::size_t width = slots.size();
  constexpr std::size_t kBuffer = 4096;
  std::vector<int> buffer;
  buffer.reserve(kBuffer * std::max<std::size_t>(width, 1));
  std::size_t buffered = 0;
  std::vector<int> best_choice;
  bool done = false;

  auto flush = [&]() {
    std::vector<std::uint64_t> values(buffered), steps(buffered, 0);
    const std::uint64_t limit = goal == Goal::colorable ? 1 : (res.value == kSaturated ? kSaturated : res.value + 1);
    parallel_for(buffered, opts.jobs, [&](std::size_t item) {
      std::vector<const std::uint8_t*> fwd(counter.slot_count()), inv(counter.slot_count());
      const int* choice = buffer.data() + item * width;
      for (int sid = 0; sid < counter.slot_count(); ++sid) {
        const int fi = free_index[sid];
        fwd[sid] = fi < 0 ? id_tab.data() : fwd_tab[choice[fi]].data();
        inv[sid] = fi < 0 ? id_tab.data() : inv_tab[choice[fi]].data();
      }
      values[item] = counter.count(fwd.data(), inv.data(), ColoringCounter::full_palette(k), limit, steps[item]);
    });
    for (std::size_t item = 0; item < buffered; ++item) {
      res.steps += steps[item];
      ++res.examined;
      const bool better = goal == Goal::colorable ? values[item] == 0 : values[item] < res.value;
      if (better) {
        res.value = values[item];
        best_choice.assign(buffer.begin() + static_cast<std::ptrdiff_t>(item * width),
                           buffer.begin() + static_cast<std::ptrdiff_t>((item + 1) * width));
        res.found_witness = true;
        if (res.value == 0) {
          done = true;
          break;
        }
      }
    }
    buffer.clear();
    buffered = 0;
    if (res.steps > budget) {
      res.partial = true;
      done = true;
    }
  };

  const auto stats = enumerate_normalized_labelings(h, t, s, opts.dedup, [&](const std::vector<int>& choice) {
    buffer.insert(buffer.end(), choice.begin(), choice.end());
    if (++buffered == kBuffer) flush();
    return !done;
  });
  if (buffered > 0 && !done) flush();
  if (stats.deduplicated) res.group_order = s.size();
  if (res.found_witness) res.witness = materialize(h, slots, s, best_choice);
  return res;
}

void embed_component(SLabeling& full, const Multigraph& g, const std::vector<int>& comp, const SLabeling& part) {
  for (int e = 0; e < part.graph.pair_count(); ++e) {
    const auto& rec = part.graph.edges()[e];
    const int idx = *g.edge_index(comp[rec.u], comp[rec.v]);
    full.perms[idx] = part.perms[e];
  }
}

}  // namespace

CountReport s_color_function(const Multigraph& g, const PermutationSet& s, const CountOptions& opts) {
  if (!s.closed_under_inverse()) throw CountingError("permutation set must be closed under inverses");
  CountReport report;
  report.value = 1;
  report.labelings_total = 1;
  SLabeling witness = SLabeling::identity(g, s.degree());
  for (const auto& comp : g.components()) {
    const Multigraph h = g.induced(comp);
    const std::uint64_t remaining = opts.budget > report.steps ? opts.budget - report.steps : 0;
    ComponentResult r = run_component(h, s, opts, Goal::minimum, remaining);
    report.value = checked_mul(report.value, r.value);
    report.partial = report.partial || r.partial;
    report.labelings_examined += r.examined;
    report.labelings_total = saturating_mul(report.labelings_total, r.total);
    report.dedup_group_order = std::max(report.dedup_group_order, r.group_order);
    report.steps += r.steps;
    if (r.found_witness) embed_component(witness, g, comp, r.witness);
    if (report.partial) break;
  }
  report.witness = std::move(witness);
  return report;
}

std::uint64_t chromatic_value(const Multigraph& g, int k) {
  if (!g.is_simple()) throw CountingError("chromatic value expects a simple graph");
  return count_colorings(SLabeling::identity(g, k));
}

CountReport dp_color_function(const Multigraph& g, int k, const CountOptions& opts) {
  return s_color_function(g, PermutationSet::symmetric(k), opts);
}

CountReport linear_color_function(const Multigraph& g, int k, const CountOptions& opts) {
  if (!prime_power_decomposition(static_cast<std::uint64_t>(k))) {
    throw CountingError(std::to_string(k) + " is not a prime power");
  }
  return s_color_function(g, PermutationSet::affine(Field::of_order(static_cast<std::uint32_t>(k))), opts);
}

ColorabilityReport s_colorable(const Multigraph& g, const PermutationSet& s, const CountOptions& opts) {
  if (!s.closed_under_inverse()) throw CountingError("permutation set must be closed under inverses");
  ColorabilityReport report;
  for (const auto& comp : g.components()) {
    const Multigraph h = g.induced(comp);
    const std::uint64_t remaining = opts.budget > report.steps ? opts.budget - report.steps : 0;
    ComponentResult r = run_component(h, s, opts, Goal::colorable, remaining);
    report.labelings_examined += r.examined;
    report.steps += r.steps;
    if (r.found_witness) {
      report.colorable = false;
      SLabeling full = SLabeling::identity(g, s.degree());
      embed_component(full, g, comp, r.witness);
      report.witness = std::move(full);
      return report;
    }
    if (r.partial) {
      report.partial = true;
      return report;
    }
  }
  return report;
}

ColorabilityReport dp_chromatic_leq(const Multigraph& g, int k, const CountOptions& opts) {
  return s_colorable(g, PermutationSet::symmetric(k), opts);
}

// --- signed colorings ----------------------------------------------------------

std::vector<int> signed_palette(int k) {
  if (k < 1) throw CountingError("signed palette needs k >= 1");
  std::vector<int> colors;
  const int t = k / 2;
  for (int i = -t; i <= t; ++i) {
    if (i == 0 && k % 2 == 0) continue;
    colors.push_back(i);
  }
  return colors;
}

namespace {

struct SignedSearch {
  const std::vector<std::vector<std::pair<int, int>>>* earlier;  // (neighbour, sign), neighbour < v
  const std::vector<int>* colors;
  std::vector<int> kappa;
  std::uint64_t count = 0;

  void run(int v) {
    if (v == static_cast<int>(kappa.size())) {
      ++count;
      return;
    }
    for (int c : *colors) {
      bool ok = true;
      for (auto [u, sign] : (*earlier)[v]) {
        if (c == sign * kappa[u]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      kappa[v] = c;
      run(v + 1);
    }
  }
};

}  // namespace

std::uint64_t signed_count(const SignedGraph& sg, int k) {
  sg.validate();
  const auto colors = signed_palette(k);
  const int n = sg.graph.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> earlier(n);
  for (int e = 0; e < sg.graph.pair_count(); ++e) {
    const auto& rec = sg.graph.edges()[e];
    earlier[rec.v].push_back({rec.u, sg.sign[e]});
  }
  SignedSearch search{&earlier, &colors, std::vector<int>(n, 0), 0};
  search.run(0);
  return search.count;
}

namespace {

std::vector<int> non_forest_edges(const Multigraph& g) {
  const SpanningTree forest = spanning_forest(g);
  std::vector<int> out;
  for (int e = 0; e < g.pair_count(); ++e) {
    if (!forest.contains(e)) out.push_back(e);
  }
  if (out.size() > 30) throw CountingError("too many switching classes to enumerate");
  return out;
}

}  // namespace

CountReport signed_color_function(const Multigraph& g, int k, const CountOptions& opts) {
  if (!g.is_simple()) throw CountingError("signed graphs must be simple");
  const auto extra = non_forest_edges(g);
  CountReport report;
  report.value = kSaturated;
  report.labelings_total = 1ull << extra.size();
  SignedGraph sg = SignedGraph::all_positive(g);
  for (std::uint64_t mask = 0; mask < report.labelings_total; ++mask) {
    for (std::size_t i = 0; i < extra.size(); ++i) sg.sign[extra[i]] = (mask >> i) & 1 ? -1 : 1;
    const std::uint64_t value = signed_count(sg, k);
    ++report.labelings_examined;
    report.steps += value + 1;
    if (value < report.value) {
      report.value = value;
      report.signed_witness = sg;
    }
    if (report.value == 0) break;
    if (report.steps > opts.budget) {
      report.partial = true;
      break;
    }
  }
  return report;
}

bool signed_colorable(const Multigraph& g, int k) {
  const auto extra = non_forest_edges(g);
  SignedGraph sg = SignedGraph::all_positive(g);
  for (std::uint64_t mask = 0; mask < (1ull << extra.size()); ++mask) {
    for (std::size_t i = 0; i < extra.size(); ++i) sg.sign[extra[i]] = (mask >> i) & 1 ? -1 : 1;
    if (signed_count(sg, k) == 0) return false;
  }
  return true;
}

// --- deletion-contraction ------------------------------------------------------

namespace {

using Adjacency = std::vector<std::uint32_t>;

std::vector<std::int64_t> delcon(Adjacency adj) {
  const int n = static_cast<int>(adj.size());
  int eu = -1, ev = -1;
  for (int u = 0; u < n && eu < 0; ++u) {
    if (adj[u]) {
      eu = u;
      ev = std::countr_zero(adj[u]);
    }
  }
  if (eu < 0) {
    std::vector<std::int64_t> p(n + 1, 0);
    p[n] = 1;
    return p;
  }
  Adjacency deleted = adj;
  deleted[eu] &= ~(1u << ev);
  deleted[ev] &= ~(1u << eu);

  // Contract ev into eu, then drop ev and shift higher indices down.
  Adjacency merged = deleted;
  merged[eu] |= merged[ev];
  for (int w = 0; w < n; ++w) {
    if (merged[w] >> ev & 1u) {
      merged[w] &= ~(1u << ev);
      if (w != eu) merged[w] |= 1u << eu;
    }
  }
  merged[eu] &= ~(1u << eu);
  Adjacency contracted;
  for (int w = 0; w < n; ++w) {
    if (w == ev) continue;
    const std::uint32_t row = merged[w];
    const std::uint32_t low = row & ((1u << ev) - 1);
    const std::uint32_t high = (row >> (ev + 1)) << ev;
    contracted.push_back(low | high);
  }

  auto a = delcon(std::move(deleted));
  const auto b = delcon(std::move(contracted));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

std::vector<std::int64_t> chromatic_polynomial(const Multigraph& g) {
  if (g.vertex_count() > 31) throw CountingError("deletion-contraction supports at most 31 vertices");
  Adjacency adj(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return delcon(std::move(adj));
}

std::int64_t evaluate_polynomial(const std::vector<std::int64_t>& coefficients, std::int64_t k) {
  std::int64_t value = 0;
  for (std::size_t i = coefficients.size(); i-- > 0;) value = value * k + coefficients[i];
  return value;
}

}  // namespace dpcolor
