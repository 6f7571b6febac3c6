#include "dpcolor/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dpcolor/finite_field.hpp"

namespace dpcolor {

SLabeling SLabeling::identity(const Multigraph& g, int k) {
  SLabeling l;
  l.graph = g;
  l.orientation = canonical_orientation(g);
  l.k = k;
  const Permutation id = Permutation::identity(k);
  for (const auto& e : g.edges()) l.perms.emplace_back(e.multiplicity, id);
  return l;
}

void SLabeling::validate() const {
  const auto& es = graph.edges();
  if (orientation.arcs.size() != es.size() || perms.size() != es.size()) {
    throw LabelingError("labeling does not match the graph's edge records");
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Arc a = orientation.arcs[i];
    const bool forward = a.tail == es[i].u && a.head == es[i].v;
    const bool backward = a.tail == es[i].v && a.head == es[i].u;
    if (!forward && !backward) throw LabelingError("arc does not orient its edge record");
    if (static_cast<int>(perms[i].size()) != es[i].multiplicity) {
      throw LabelingError("tuple length differs from edge multiplicity on " + std::to_string(es[i].u) + "-" +
                          std::to_string(es[i].v));
    }
    for (const auto& p : perms[i]) {
      if (p.size() != k) throw LabelingError("permutation size differs from k");
    }
  }
}

SignedGraph SignedGraph::all_positive(const Multigraph& g) {
  return SignedGraph{g, std::vector<int>(g.pair_count(), 1)};
}

void SignedGraph::validate() const {
  if (!graph.is_simple()) throw LabelingError("signed graphs must be simple");
  if (static_cast<int>(sign.size()) != graph.pair_count()) throw LabelingError("one sign per edge required");
  for (int s : sign) {
    if (s != 1 && s != -1) throw LabelingError("edge signs must be +1 or -1");
  }
}

SLabeling apply_gauge(const SLabeling& l, const std::vector<Permutation>& taus) {
  if (static_cast<int>(taus.size()) != l.graph.vertex_count()) throw LabelingError("one gauge permutation per vertex required");
  for (const auto& t : taus) {
    if (t.size() != l.k) throw LabelingError("gauge permutation size differs from k");
  }
  std::vector<Permutation> inv;
  inv.reserve(taus.size());
  for (const auto& t : taus) inv.push_back(t.inverse());
  SLabeling out = l;
  for (std::size_t e = 0; e < l.perms.size(); ++e) {
    const Arc a = l.orientation.arcs[e];
    for (auto& p : out.perms[e]) p = compose(taus[a.head], compose(p, inv[a.tail]));
  }
  return out;
}

SLabeling gauge_at_vertex(const SLabeling& l, int u, const Permutation& alpha) {
  if (u < 0 || u >= l.graph.vertex_count()) throw LabelingError("vertex out of range");
  std::vector<Permutation> taus(l.graph.vertex_count(), Permutation::identity(l.k));
  taus[u] = alpha;
  return apply_gauge(l, taus);
}

SLabeling conjugate(const SLabeling& l, const Permutation& alpha) {
  if (alpha.size() != l.k) throw LabelingError("conjugating permutation size differs from k");
  SLabeling out = l;
  for (auto& tuple : out.perms) {
    for (auto& p : tuple) p = conjugate_by(p, alpha);
  }
  return out;
}

std::vector<Permutation> tree_gauge(const SLabeling& l, const SpanningTree& t) {
  const int n = l.graph.vertex_count();
  if (static_cast<int>(t.parent.size()) != n || static_cast<int>(t.order.size()) != n) {
    throw LabelingError("tree does not span the labeled graph");
  }
  std::vector<Permutation> taus(n, Permutation::identity(l.k));
  for (int v : t.order) {
    const int u = t.parent[v];
    if (u < 0) continue;
    const int e = t.parent_edge[v];
    const Arc a = l.orientation.arcs[e];
    const Permutation& p = l.perms[e].front();
    // Want taus[head] ∘ p ∘ taus[tail]^{-1} = id with taus[u] already fixed.
    taus[v] = a.tail == u ? compose(taus[u], p.inverse()) : compose(taus[u], p);
  }
  return taus;
}

SLabeling normalize_tree(const SLabeling& l, const SpanningTree& t) {
  if (!l.graph.is_connected()) throw LabelingError("tree normalization needs a connected graph");
  return apply_gauge(l, tree_gauge(l, t));
}

namespace {

std::vector<Permutation> conjugate_tuple(const std::vector<Permutation>& tuple, const Permutation& alpha) {
  std::vector<Permutation> out;
  out.reserve(tuple.size());
  for (const auto& p : tuple) out.push_back(conjugate_by(p, alpha));
  return out;
}

}  // namespace

std::vector<Permutation> canonical_conjugate(const std::vector<Permutation>& tuple, const PermutationSet& group) {
  if (tuple.empty()) throw LabelingError("canonical_conjugate needs a nonempty tuple");
  std::vector<Permutation> best = tuple;
  for (const auto& alpha : group.elements()) {
    auto cand = conjugate_tuple(tuple, alpha);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

std::vector<Permutation> canonical_conjugate(const std::vector<Permutation>& tuple) {
  if (tuple.empty()) throw LabelingError("canonical_conjugate needs a nonempty tuple");
  return canonical_conjugate(tuple, PermutationSet::symmetric(tuple.front().size()));
}

std::vector<Slot> free_slots(const Multigraph& g, const SpanningTree& t) {
  std::vector<Slot> slots;
  for (int e = 0; e < g.pair_count(); ++e) {
    const int first = t.contains(e) ? 1 : 0;
    for (int c = first; c < g.edges()[e].multiplicity; ++c) slots.push_back(Slot{e, c});
  }
  return slots;
}

SLabeling materialize(const Multigraph& g, const std::vector<Slot>& slots, const PermutationSet& s,
                      const std::vector<int>& choice) {
  if (choice.size() != slots.size()) throw LabelingError("choice length differs from slot count");
  SLabeling l = SLabeling::identity(g, s.degree());
  for (std::size_t i = 0; i < slots.size(); ++i) l.perms[slots[i].edge][slots[i].component] = s[choice[i]];
  return l;
}

std::vector<std::uint32_t> conjugation_table(const PermutationSet& s) {
  constexpr std::size_t kLimit = 1024;
  if (!s.is_group() || s.size() > kLimit) return {};
  const std::size_t sz = s.size();
  std::vector<std::uint32_t> table(sz * sz);
  for (std::size_t a = 0; a < sz; ++a) {
    const Permutation ainv = s[a].inverse();
    for (std::size_t p = 0; p < sz; ++p) {
      const int idx = s.index_of(compose(ainv, compose(s[p], s[a])));
      if (idx < 0) throw LabelingError("permutation set is not closed under conjugation");
      table[a * sz + p] = static_cast<std::uint32_t>(idx);
    }
  }
  return table;
}

namespace {

struct Orderly {
  std::size_t slot_count;
  std::size_t set_size;
  const std::vector<std::uint32_t>* conj;
  const std::function<bool(const std::vector<int>&)>* emit;
  std::vector<int> choice;
  EnumerationStats stats;

  // `stab` holds the conjugators fixing the prefix chosen so far.
  bool run(std::size_t depth, const std::vector<std::uint32_t>& stab) {
    if (depth == slot_count) {
      ++stats.emitted;
      if (!(*emit)(choice)) {
        stats.stopped = true;
        return false;
      }
      return true;
    }
    std::vector<std::uint32_t> next;
    for (std::size_t p = 0; p < set_size; ++p) {
      bool minimal = true;
      next.clear();
      for (std::uint32_t a : stab) {
        const std::uint32_t image = (*conj)[a * set_size + p];
        if (image < p) {
          minimal = false;
          break;
        }
        if (image == p) next.push_back(a);
      }
      if (!minimal) continue;
      choice[depth] = static_cast<int>(p);
      if (!run(depth + 1, next)) return false;
    }
    return true;
  }
};

bool product_run(std::vector<int>& choice, std::size_t depth, std::size_t set_size, EnumerationStats& stats,
                 const std::function<bool(const std::vector<int>&)>& emit) {
  if (depth == choice.size()) {
    ++stats.emitted;
    if (!emit(choice)) {
      stats.stopped = true;
      return false;
    }
    return true;
  }
  for (std::size_t p = 0; p < set_size; ++p) {
    choice[depth] = static_cast<int>(p);
    if (!product_run(choice, depth + 1, set_size, stats, emit)) return false;
  }
  return true;
}

}  // namespace

EnumerationStats enumerate_normalized_labelings(const Multigraph& g, const SpanningTree& t, const PermutationSet& s,
                                                bool dedup,
                                                const std::function<bool(const std::vector<int>&)>& emit) {
  const auto slots = free_slots(g, t);
  std::vector<std::uint32_t> conj;
  if (dedup) conj = conjugation_table(s);
  if (!conj.empty()) {
    Orderly o{slots.size(), s.size(), &conj, &emit, std::vector<int>(slots.size(), 0), {}};
    o.stats.deduplicated = true;
    std::vector<std::uint32_t> all(s.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
    o.run(0, all);
    return o.stats;
  }
  EnumerationStats stats;
  std::vector<int> choice(slots.size(), 0);
  product_run(choice, 0, s.size(), stats, emit);
  return stats;
}

SignedTranslation signed_to_labeling(const SignedGraph& sg, int k) {
  sg.validate();
  if (k < 2) throw LabelingError("signed translation needs k >= 2");
  const PrimePower pp = prime_power_decomposition(static_cast<std::uint64_t>(k));
  if (!pp) throw LabelingError(std::to_string(k) + " is not a prime power");
  const Field f = Field::of_order(static_cast<std::uint32_t>(k));

  std::vector<int> involution(k);
  for (int a = 0; a < k; ++a) {
    involution[a] = k % 2 == 1 ? static_cast<int>(f.neg_index(static_cast<std::uint32_t>(a)))
                               : static_cast<int>(f.add_index(static_cast<std::uint32_t>(a), 1));
  }
  const Permutation pi(involution);

  SignedTranslation out;
  const int t = k / 2;
  std::vector<char> used(k, 0);
  std::vector<std::pair<int, int>> pairs;  // (signed color, field index)
  if (k % 2 == 1) {
    pairs.push_back({0, 0});
    used[0] = 1;
  }
  for (int i = 1; i <= t; ++i) {
    int e = 0;
    while (used[e]) ++e;
    const int partner = involution[e];
    used[e] = used[partner] = 1;
    pairs.push_back({i, e});
    pairs.push_back({-i, partner});
  }
  std::sort(pairs.begin(), pairs.end());
  for (auto [c, e] : pairs) {
    out.signed_colors.push_back(c);
    out.psi.push_back(e);
  }

  out.labeling = SLabeling::identity(sg.graph, k);
  for (int e = 0; e < sg.graph.pair_count(); ++e) {
    if (sg.sign[e] < 0) out.labeling.perms[e][0] = pi;
  }
  return out;
}

namespace {

int parse_vertex(std::string_view tok, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
    throw LabelingError("labeling line " + std::to_string(line_no) + ": bad vertex '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

SLabeling parse_labeling(std::string_view text, const Multigraph& g, int k) {
  SLabeling l = SLabeling::identity(g, k);
  std::vector<char> seen(g.pair_count(), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw LabelingError("labeling line " + std::to_string(line_no) + ": expected 'u v : perms'");
    std::istringstream head(line.substr(0, colon));
    std::string us, vs, extra;
    if (!(head >> us >> vs) || (head >> extra)) {
      throw LabelingError("labeling line " + std::to_string(line_no) + ": expected two vertices before ':'");
    }
    const int u = parse_vertex(us, line_no);
    const int v = parse_vertex(vs, line_no);
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw LabelingError("labeling line " + std::to_string(line_no) + ": vertex out of range");
    const auto idx = g.edge_index(u, v);
    if (!idx) throw LabelingError("labeling line " + std::to_string(line_no) + ": " + us + "-" + vs + " is not an edge");
    if (seen[*idx]) throw LabelingError("labeling line " + std::to_string(line_no) + ": edge labeled twice");
    seen[*idx] = 1;

    std::vector<Permutation> tuple;
    std::string rest = line.substr(colon + 1);
    std::string item;
    std::istringstream items(rest);
    while (std::getline(items, item, ',')) {
      const auto b = item.find_first_not_of(" \t\r");
      const auto e = item.find_last_not_of(" \t\r");
      if (b == std::string::npos) throw LabelingError("labeling line " + std::to_string(line_no) + ": empty permutation");
      tuple.push_back(Permutation::parse(std::string_view(item).substr(b, e - b + 1)));
      if (tuple.back().size() != k) throw LabelingError("labeling line " + std::to_string(line_no) + ": permutation size differs from k");
    }
    if (static_cast<int>(tuple.size()) != g.edges()[*idx].multiplicity) {
      throw LabelingError("labeling line " + std::to_string(line_no) + ": tuple length differs from multiplicity");
    }
    l.orientation.arcs[*idx] = Arc{u, v};
    l.perms[*idx] = std::move(tuple);
  }
  return l;
}

std::string format_labeling(const SLabeling& l) {
  std::ostringstream os;
  for (std::size_t e = 0; e < l.perms.size(); ++e) {
    os << l.orientation.arcs[e].tail << " " << l.orientation.arcs[e].head << " : ";
    for (std::size_t c = 0; c < l.perms[e].size(); ++c) {
      if (c) os << ",";
      os << l.perms[e][c].to_string();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace dpcolor
