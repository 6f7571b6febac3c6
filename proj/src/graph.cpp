#include "dpcolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

namespace dpcolor {

Multigraph::Multigraph(int n) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
}

Multigraph::Multigraph(int n, const std::vector<std::pair<int, int>>& edges) : Multigraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Multigraph::add_edge(int u, int v, int count) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("loops are not allowed (vertex " + std::to_string(u) + ")");
  if (count < 1) throw GraphError("edge multiplicity must be positive");
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v}, [](const EdgeRecord& e, std::pair<int, int> key) {
    return std::pair{e.u, e.v} < key;
  });
  if (it != edges_.end() && it->u == u && it->v == v) {
    it->multiplicity += count;
  } else {
    edges_.insert(it, EdgeRecord{u, v, count});
  }
}

int Multigraph::edge_count() const {
  int m = 0;
  for (const auto& e : edges_) m += e.multiplicity;
  return m;
}

int Multigraph::max_multiplicity() const {
  int mu = 0;
  for (const auto& e : edges_) mu = std::max(mu, e.multiplicity);
  return mu;
}

bool Multigraph::is_simple() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const EdgeRecord& e) { return e.multiplicity == 1; });
}

bool Multigraph::is_connected() const { return n_ <= 1 || components().size() == 1; }

std::optional<int> Multigraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v}, [](const EdgeRecord& e, std::pair<int, int> key) {
    return std::pair{e.u, e.v} < key;
  });
  if (it != edges_.end() && it->u == u && it->v == v) return static_cast<int>(it - edges_.begin());
  return std::nullopt;
}

int Multigraph::multiplicity(int u, int v) const {
  auto idx = edge_index(u, v);
  return idx ? edges_[*idx].multiplicity : 0;
}

std::vector<std::vector<int>> Multigraph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<std::vector<int>> Multigraph::components() const {
  const auto adj = adjacency();
  std::vector<int> seen(n_, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int w : adj[comp[i]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Multigraph Multigraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  Multigraph h(static_cast<int>(vertices.size()));
  for (const auto& e : edges_) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) h.add_edge(pos[e.u], pos[e.v], e.multiplicity);
  }
  return h;
}

Multigraph Multigraph::underlying() const {
  Multigraph h(n_);
  for (const auto& e : edges_) h.add_edge(e.u, e.v);
  return h;
}

Orientation canonical_orientation(const Multigraph& g) {
  Orientation o;
  o.arcs.reserve(g.edges().size());
  for (const auto& e : g.edges()) o.arcs.push_back(Arc{e.u, e.v});
  return o;
}

bool SpanningTree::contains(int edge_index) const {
  return std::binary_search(edge_indices.begin(), edge_indices.end(), edge_index);
}

namespace {

// BFS restricted to the records flagged in `allowed` (all when empty).
SpanningTree bfs_forest(const Multigraph& g, const std::vector<char>& allowed, bool require_connected) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, record)
  for (int i = 0; i < g.pair_count(); ++i) {
    if (!allowed.empty() && !allowed[i]) continue;
    const auto& e = g.edges()[i];
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  SpanningTree t;
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    if (root != 0 && require_connected) throw GraphError("graph is not connected");
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      t.order.push_back(u);
      for (auto [w, rec] : adj[u]) {
        if (seen[w]) continue;
        seen[w] = 1;
        t.parent[w] = u;
        t.parent_edge[w] = rec;
        t.edge_indices.push_back(rec);
        queue.push_back(w);
      }
    }
  }
  std::sort(t.edge_indices.begin(), t.edge_indices.end());
  return t;
}

}  // namespace

SpanningTree spanning_tree(const Multigraph& g) {
  if (g.vertex_count() == 0) throw GraphError("empty graph has no spanning tree");
  return bfs_forest(g, {}, true);
}

SpanningTree spanning_forest(const Multigraph& g) { return bfs_forest(g, {}, false); }

SpanningTree spanning_tree_from_pairs(const Multigraph& g, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<char> allowed(g.pair_count(), 0);
  for (auto [u, v] : pairs) {
    auto idx = g.edge_index(u, v);
    if (!idx) throw GraphError("tree edge " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge of the graph");
    if (allowed[*idx]) throw GraphError("tree edge listed twice");
    allowed[*idx] = 1;
  }
  if (static_cast<int>(pairs.size()) != g.vertex_count() - 1) throw GraphError("a spanning tree needs exactly n-1 edges");
  return bfs_forest(g, allowed, true);
}

Multigraph add_parallel_edges(const Multigraph& g, const SpanningTree& t, int extra) {
  if (extra < 0) throw GraphError("negative number of parallel edges");
  if (static_cast<int>(t.edge_indices.size()) != g.vertex_count() - 1 || !g.is_connected()) {
    throw GraphError("not a spanning tree of the graph");
  }
  for (int idx : t.edge_indices) {
    if (idx < 0 || idx >= g.pair_count()) throw GraphError("not a spanning tree of the graph");
  }
  Multigraph out = g;
  if (extra == 0) return out;
  for (int i = 0; i < g.pair_count(); ++i) {
    if (t.contains(i)) continue;
    const auto& e = g.edges()[i];
    out.add_edge(e.u, e.v, extra);
  }
  return out;
}

// --- graph6 -----------------------------------------------------------------

namespace {

int sextet(char c) {
  const auto uc = static_cast<unsigned char>(c);
  if (uc < 63 || uc > 126) throw GraphError("graph6: byte out of range");
  return uc - 63;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Multigraph parse_graph6(std::string_view text) {
  text = strip(text);
  constexpr std::string_view header = ">>graph6<<";
  if (!text.empty() && text.front() == '>') {
    if (text.substr(0, header.size()) != header) throw GraphError("graph6: malformed header");
    text.remove_prefix(header.size());
  }
  if (text.empty()) throw GraphError("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    std::size_t digits = 3;
    pos = 1;
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
      digits = 6;
      pos = 2;
    }
    if (text.size() < pos + digits) throw GraphError("graph6: truncated vertex count");
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos + i]));
    pos += digits;
  } else {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    pos = 1;
  }
  if (n > 100000) throw GraphError("graph6: graph too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < bytes) throw GraphError("graph6: truncated adjacency data");
  if (text.size() - pos > bytes) throw GraphError("graph6: trailing garbage");

  Multigraph g(static_cast<int>(n));
  std::uint64_t bit = 0;
  int row = 0, col = 1;
  for (std::size_t b = 0; b < bytes; ++b) {
    const int value = sextet(text[pos + b]);
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (value >> shift) & 1;
      if (bit >= bits) {
        if (set) throw GraphError("graph6: nonzero padding bits");
        continue;
      }
      if (set) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string encode_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw GraphError("graph6 encodes simple graphs only");
  const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int acc = 0, filled = 0;
  for (int col = 1; col < static_cast<int>(n); ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.multiplicity(row, col) > 0 ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// --- edge lists -------------------------------------------------------------

namespace {

long long parse_int_token(std::string_view tok, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw GraphError("edge list line " + std::to_string(line_no) + ": non-integer token '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Multigraph parse_edge_list(std::string_view text) {
  struct Row {
    long long u, v, mult;
  };
  std::vector<Row> rows;
  long long declared_n = -1;
  long long max_index = -1;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (toks[0] == "n") {
      if (toks.size() != 2) throw GraphError("edge list line " + std::to_string(line_no) + ": expected 'n <count>'");
      declared_n = parse_int_token(toks[1], line_no);
      if (declared_n < 0) throw GraphError("negative vertex count");
      continue;
    }
    if (toks.size() < 2 || toks.size() > 3) {
      throw GraphError("edge list line " + std::to_string(line_no) + ": expected 'u v [mult]'");
    }
    Row row{parse_int_token(toks[0], line_no), parse_int_token(toks[1], line_no), 1};
    if (toks.size() == 3) row.mult = parse_int_token(toks[2], line_no);
    if (row.u < 0 || row.v < 0) throw GraphError("edge list line " + std::to_string(line_no) + ": negative vertex index");
    if (row.u == row.v) throw GraphError("edge list line " + std::to_string(line_no) + ": loop");
    if (row.mult < 1) throw GraphError("edge list line " + std::to_string(line_no) + ": multiplicity must be positive");
    if (row.u > 1000000 || row.v > 1000000) throw GraphError("edge list line " + std::to_string(line_no) + ": vertex index too large");
    max_index = std::max({max_index, row.u, row.v});
    rows.push_back(row);
    if (end == text.size()) break;
  }
  long long n = max_index + 1;
  if (declared_n >= 0) {
    if (declared_n < n) throw GraphError("edge list: vertex index exceeds declared count");
    n = declared_n;
  }
  Multigraph g(static_cast<int>(n));
  for (const auto& r : rows) g.add_edge(static_cast<int>(r.u), static_cast<int>(r.v), static_cast<int>(r.mult));
  return g;
}

std::string encode_edge_list(const Multigraph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) {
    os << e.u << " " << e.v;
    if (e.multiplicity != 1) os << " " << e.multiplicity;
    os << "\n";
  }
  return os.str();
}

std::vector<std::pair<int, int>> parse_pair_list(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  std::size_t start = 0;
  text = strip(text);
  if (text.empty()) return pairs;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = strip(text.substr(start, end - start));
    auto dash = item.find('-');
    if (dash == std::string_view::npos) throw GraphError("expected 'u-v' pair, got '" + std::string(item) + "'");
    const auto u = parse_int_token(strip(item.substr(0, dash)), 1);
    const auto v = parse_int_token(strip(item.substr(dash + 1)), 1);
    if (u < 0 || v < 0) throw GraphError("negative vertex index in pair list");
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    start = end + 1;
  }
  return pairs;
}

Multigraph parse_graph_auto(std::string_view text) {
  std::string_view body = strip(text);
  const auto first_line = body.substr(0, body.find('\n'));
  const auto toks = split_ws(first_line);
  if (toks.size() == 1 && toks[0] != "n" && body.find('\n') == std::string_view::npos) return parse_graph6(body);
  if (toks.size() == 1 && toks[0].starts_with(">>graph6<<")) return parse_graph6(first_line);
  return parse_edge_list(text);
}

}  // namespace dpcolor
