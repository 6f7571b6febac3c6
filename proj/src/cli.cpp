#include "dpcolor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "dpcolor/bounds.hpp"
#include "dpcolor/counting.hpp"
#include "dpcolor/covering.hpp"
#include "dpcolor/degree_search.hpp"
#include "dpcolor/finite_field.hpp"
#include "dpcolor/graph_gen.hpp"
#include "dpcolor/parallel.hpp"
#include "dpcolor/report_json.hpp"
#include "dpcolor/verify.hpp"

namespace dpcolor::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  // Graph source.
  std::string graph_file;
  std::string g6;
  std::string edges;
  int vertices = 0;

  int k = 0;
  int p = 0;
  int r = 1;
  std::string c = "0";
  std::string mode = "dp";
  std::string theorem;
  std::string family;
  bool anchored = false;
  bool product_l = false;
  std::string dedup = "on";
  int jobs = 1;
  std::uint64_t budget = 1'000'000'000;
  std::string tree_edges;
  std::string format = "json";
  std::uint64_t seed = 1;

  // bound / family
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::int64_t n_max = -1;
  std::int64_t n_step = 1;
  std::int64_t genus = 0;

  // count / cover
  std::string labeling;
  std::string labeling_file;
  std::string coloring;

  // search-degree
  std::string perm;
  std::string anchor;
  bool swap_family = false;

  // verify
  std::string what = "conjecture";
  int n_min = 1;
  int sweep_n_max = 5;
  int max_cycle_rank = -1;
  std::vector<int> ks;
  int max_prime = 13;
  int random_count = 0;
  int random_n = 6;
  std::string output;
};

struct Outcome {
  std::vector<Json> records;
  int code = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_graph(const Config& c) { return !c.graph_file.empty() || !c.g6.empty() || !c.edges.empty(); }

Multigraph load_graph(const Config& c) {
  const int sources = !c.graph_file.empty() + !c.g6.empty() + !c.edges.empty();
  if (sources != 1) throw UsageError("give exactly one of --graph, --g6, --edges");
  if (!c.g6.empty()) return parse_graph6(c.g6);
  if (!c.graph_file.empty()) return parse_graph_auto(read_file(c.graph_file));
  const auto pairs = parse_pair_list(c.edges);
  int n = c.vertices;
  for (auto [u, v] : pairs) n = std::max({n, u + 1, v + 1});
  Multigraph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

int field_order(const Config& c) {
  if (c.p > 0) {
    if (c.k > 0) throw UsageError("give either --k or --p/--r");
    if (!is_prime(c.p) || c.r < 1) throw UsageError("--p must be prime and --r positive");
    std::uint64_t k = 1;
    for (int i = 0; i < c.r; ++i) {
      k *= static_cast<std::uint64_t>(c.p);
      if (k > Field::kMaxOrder) throw UsageError("field order too large");
    }
    return static_cast<int>(k);
  }
  if (c.k <= 0) throw UsageError("--k is required");
  return c.k;
}

FieldPtr make_field(int k) {
  if (!prime_power_decomposition(k)) throw UsageError(std::to_string(k) + " is not a prime power");
  return std::make_shared<const Field>(Field::of_order(k));
}

CountOptions count_options(const Config& c) {
  CountOptions o;
  o.budget = c.budget;
  o.jobs = c.jobs;
  o.dedup = c.dedup == "on";
  return o;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError("not a rational number: " + text);
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + text);
    }
  }
  return out;
}

std::optional<SLabeling> load_labeling(const Config& c, const Multigraph& g, int k) {
  if (!c.labeling.empty() && !c.labeling_file.empty()) throw UsageError("give one of --labeling, --labeling-file");
  std::string text;
  if (!c.labeling_file.empty()) {
    text = read_file(c.labeling_file);
  } else if (!c.labeling.empty()) {
    text = c.labeling;
    std::replace(text.begin(), text.end(), ';', '\n');
  } else {
    return std::nullopt;
  }
  return parse_labeling(text, g, k);
}

Json graph_header(const std::string& command, const Multigraph& g, int k) {
  return Json{{"command", command}, {"graph", graph_label(g)}, {"n", g.vertex_count()}, {"m", g.edge_count()},
              {"k", k}};
}

// --- subcommands ---------------------------------------------------------------

Outcome cmd_count(const Config& c) {
  const Multigraph g = load_graph(c);
  const int k = field_order(c);
  Json record = graph_header("count", g, k);
  if (auto l = load_labeling(c, g, k)) {
    std::uint64_t steps = 0;
    record["labeling"] = labeling_to_json(*l);
    record["value"] = count_colorings(*l, {}, steps);
    record["steps"] = steps;
    return {{record}, kOk};
  }
  record["mode"] = c.mode;
  if (c.mode == "classical") {
    record["value"] = chromatic_value(g, k);
    if (g.vertex_count() <= 31) {
      Json coefficients = Json::array();
      for (auto a : chromatic_polynomial(g)) coefficients.push_back(a);
      record["chromatic_polynomial"] = coefficients;
    }
    return {{record}, kOk};
  }
  const CountOptions opts = count_options(c);
  CountReport r;
  if (c.mode == "dp") {
    r = dp_color_function(g, k, opts);
  } else if (c.mode == "linear") {
    make_field(k);
    r = linear_color_function(g, k, opts);
  } else {
    r = signed_color_function(g, k, opts);
  }
  record.update(count_to_json(r));
  return {{record}, r.partial ? kBudgetExceeded : kOk};
}

Outcome cmd_colorable(const Config& c) {
  const Multigraph g = load_graph(c);
  const int k = field_order(c);
  Json record = graph_header("colorable", g, k);
  record["mode"] = c.mode;
  const CountOptions opts = count_options(c);
  if (c.mode == "classical") {
    record["colorable"] = chromatic_value(g, k) > 0;
    return {{record}, kOk};
  }
  if (c.mode == "signed") {
    record["colorable"] = signed_colorable(g, k);
    return {{record}, kOk};
  }
  ColorabilityReport r;
  if (c.mode == "dp") {
    r = dp_chromatic_leq(g, k, opts);
  } else {
    r = s_colorable(g, PermutationSet::affine(*make_field(k)), opts);
  }
  record["colorable"] = r.colorable;
  record["partial"] = r.partial;
  record["labelings_examined"] = r.labelings_examined;
  record["steps"] = r.steps;
  if (r.witness) record["witness"] = labeling_to_json(*r.witness);
  return {{record}, r.partial ? kBudgetExceeded : kOk};
}

// Brute-force check of the coloring hypothesis of a bound on a concrete graph.
HypothesisStatus check_chromatic(const Config& c, const std::string& theorem, const Multigraph& g, int k,
                                 bool& partial) {
  const CountOptions opts = count_options(c);
  auto from = [&](const ColorabilityReport& r) {
    partial = partial || r.partial;
    if (r.partial) return HypothesisStatus::assumed;
    return r.colorable ? HypothesisStatus::verified : HypothesisStatus::violated;
  };
  if (theorem == "main-ii") return from(dp_chromatic_leq(g, k, opts));
  if (theorem == "main-i") {
    if (!g.is_connected()) return HypothesisStatus::assumed;
    const Multigraph derived = add_parallel_edges(g, spanning_tree(g), k / 2 - 1);
    return from(s_colorable(derived, PermutationSet::symmetric(k), opts));
  }
  if (theorem == "linear") return from(s_colorable(g, PermutationSet::affine(*make_field(k)), opts));
  if (theorem == "signed-all") {
    return signed_colorable(g, k) ? HypothesisStatus::verified : HypothesisStatus::violated;
  }
  if (theorem == "list") {
    return chromatic_value(g, k) > 0 ? HypothesisStatus::assumed : HypothesisStatus::violated;
  }
  return HypothesisStatus::assumed;
}

BoundValue compute_bound(const std::string& theorem, std::int64_t n, std::int64_t m, std::int64_t k,
                         std::int64_t c_colors, HypothesisStatus chromatic) {
  if (theorem == "main-ii") return bound_main_ii(n, m, k, chromatic);
  if (theorem == "main-i") return bound_main_i(n, m, k, chromatic);
  if (theorem == "linear") return bound_linear(n, m, k, chromatic);
  if (theorem == "list") return bound_list(n, m, k, chromatic);
  if (theorem == "signed") return bound_signed(n, m, k, false, chromatic);
  if (theorem == "signed-all") return bound_signed(n, m, k, true, chromatic);
  if (theorem == "general-c") return bound_general_c(n, m, c_colors, k, chromatic);
  throw UsageError("unknown theorem: " + theorem);
}

Outcome cmd_bound(const Config& c) {
  if (c.theorem.empty()) throw UsageError("--theorem is required");
  const int k = field_order(c);
  std::int64_t n = c.n, m = c.m;
  HypothesisStatus chromatic = HypothesisStatus::assumed;
  bool partial = false;
  std::optional<Multigraph> g;
  if (has_graph(c)) {
    g = load_graph(c);
    if ((c.n >= 0 && c.n != g->vertex_count()) || (c.m >= 0 && c.m != g->edge_count())) {
      throw UsageError("--n/--m disagree with the graph");
    }
    n = g->vertex_count();
    m = g->edge_count();
  }
  if (n < 0 || m < 0) throw UsageError("--n and --m (or a graph) are required");
  const Rational cr = parse_rational(c.c);
  if (c.theorem == "general-c" && cr.denominator() != 1) throw UsageError("--c must be an integer here");
  // Arithmetic hypotheses first; the brute-force check only runs when they hold.
  BoundValue b = compute_bound(c.theorem, n, m, k, cr.numerator(), chromatic);
  if (g && b.applicable) {
    chromatic = check_chromatic(c, c.theorem, *g, k, partial);
    b = compute_bound(c.theorem, n, m, k, cr.numerator(), chromatic);
  }
  Json record{{"command", "bound"}, {"n", n}, {"m", m}, {"k", k}};
  if (g) record["graph"] = graph_label(*g);
  record.update(bound_to_json(b));
  if (partial) return {{record}, kBudgetExceeded};
  return {{record}, b.applicable ? kOk : kAssertionFailed};
}

Outcome cmd_family(const Config& c) {
  Outcome out;
  if (c.family.empty()) {
    for (const auto& info : family_catalog()) {
      out.records.push_back(Json{{"family", info.id}, {"description", info.description}, {"default_k", info.default_k}});
    }
    return out;
  }
  if (c.n < 1) throw UsageError("--n is required");
  const std::int64_t last = c.n_max < 0 ? c.n : c.n_max;
  if (last < c.n || c.n_step < 1) throw UsageError("bad --n range");
  FamilyParams params;
  if (c.k > 0 || c.p > 0) {
    params.k = field_order(c);
  } else {
    for (const auto& info : family_catalog()) {
      if (info.id == c.family) params.k = info.default_k;
    }
  }
  params.genus = c.genus;
  params.c = parse_rational(c.c);
  if (c.m >= 0) params.m = c.m;
  for (std::int64_t n = c.n; n <= last; n += c.n_step) {
    params.n = n;
    const BoundValue b = family_bound(c.family, params);
    Json record{{"command", "family"}, {"family", c.family}, {"n", n}, {"k", b.base}, {"genus", params.genus}};
    record.update(bound_to_json(b));
    if (!b.applicable) out.code = kAssertionFailed;
    out.records.push_back(std::move(record));
  }
  return out;
}

Anchor parse_anchor(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 2 || v[0] < 0 || v[1] < 0) throw UsageError("--anchor takes a,b");
  return {static_cast<std::uint32_t>(v[0]), static_cast<std::uint32_t>(v[1])};
}

Outcome cmd_search_degree(const Config& c) {
  const int k = field_order(c);
  FieldPtr field = make_field(k);
  Outcome out;
  auto emit = [&](const DegreeSearchResult& r) {
    Json record{{"command", "search-degree"}, {"k", k}};
    record.update(degree_result_to_json(r));
    const bool valid = r.degree < 0 || witness_is_valid(*field, r);
    record["witness_valid"] = valid;
    if (!valid) out.code = kAssertionFailed;
    out.records.push_back(std::move(record));
  };
  std::optional<Permutation> pi;
  std::optional<Anchor> anchor;
  if (!c.anchor.empty()) anchor = parse_anchor(c.anchor);
  if (c.swap_family) {
    if (!c.perm.empty()) throw UsageError("--swap-family replaces --perm");
    pi = swap_first_two(k);
    if (!anchor) anchor = Anchor{0, 0};
  } else if (!c.perm.empty()) {
    pi = Permutation::parse(c.perm);
    if (pi->size() != k) throw UsageError("permutation size differs from k");
  }
  const bool anchored = c.anchored || c.swap_family || anchor.has_value();
  if (!pi) {
    if (c.product_l) throw UsageError("--product-l needs --perm");
    if (anchor) throw UsageError("--anchor needs --perm");
    if (k > 8) throw UsageError("worst-case searches support k <= 8");
    const auto wc = worst_case_degree(field, anchored, c.dedup == "on", c.jobs);
    for (const auto& w : wc.witnesses) emit(w);
    Json summary{{"command", "search-degree"}, {"k", k}, {"anchored", anchored}};
    summary.update(worst_case_to_json(wc));
    summary.erase("witnesses");
    out.records.push_back(std::move(summary));
    return out;
  }
  if (c.product_l) {
    if (anchor && static_cast<std::uint32_t>((*pi)(anchor->first)) == anchor->second) {
      throw UsageError("anchor lies on the graph of the permutation");
    }
    emit(min_cover_degree_product_of_l(field, *pi, anchored ? anchor : std::nullopt));
    return out;
  }
  if (!anchored) {
    emit(min_cover_degree(field, *pi));
    return out;
  }
  if (anchor) {
    if (static_cast<std::uint32_t>((*pi)(anchor->first)) == anchor->second) {
      throw UsageError("anchor lies on the graph of the permutation");
    }
    emit(min_cover_degree_anchored(field, *pi, anchor->first, anchor->second));
    return out;
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if ((*pi)(a) != b) emit(min_cover_degree_anchored(field, *pi, a, b));
    }
  }
  return out;
}

Outcome cmd_cover(const Config& c) {
  const Multigraph g = load_graph(c);
  if (!g.is_connected() || !g.is_simple()) throw UsageError("cover needs a connected simple graph");
  const int k = field_order(c);
  FieldPtr field = make_field(k);
  const SpanningTree t = c.tree_edges.empty() ? spanning_tree(g) : spanning_tree_from_pairs(g, parse_pair_list(c.tree_edges));
  SLabeling l = load_labeling(c, g, k).value_or(SLabeling::identity(g, k));
  const auto taus = tree_gauge(l, t);
  l = apply_gauge(l, taus);
  std::vector<int> kappa;
  if (c.anchored) {
    if (c.coloring.empty()) throw UsageError("--anchored needs --coloring");
    kappa = parse_int_list(c.coloring);
    if (static_cast<int>(kappa.size()) != g.vertex_count()) throw UsageError("--coloring needs one color per vertex");
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (kappa[v] < 0 || kappa[v] >= k) throw UsageError("color out of range");
      kappa[v] = taus[v](kappa[v]);
    }
  }
  const CoverMode mode = c.anchored ? CoverMode::anchored : CoverMode::halfk;
  const CoverPolynomial f = graph_cover_polynomial(field, l, t, mode, kappa);
  const std::int64_t n = g.vertex_count(), m = g.edge_count();
  const std::int64_t expected = c.anchored ? anchored_cover_degree(n, m, k) : halfk_cover_degree(n, m, k);
  Json record = graph_header("cover", g, k);
  record["mode"] = c.anchored ? "anchored" : "halfk";
  record["normalized_labeling"] = labeling_to_json(l);
  record["factors"] = f.factors.size();
  record["degree"] = f.degree();
  record["expected_degree"] = expected;
  if (c.anchored) {
    std::vector<std::uint32_t> point(kappa.begin(), kappa.end());
    record["nonzero_at_coloring"] = f.nonzero_at(point);
  }
  const std::uint64_t nonzeros = count_nonzeros(f, c.budget);
  record["nonzeros"] = nonzeros;
  record["proper_colorings"] = count_colorings(l);
  const BoundValue weak = alon_furedi_weak(n, n * k, k, f.degree());
  if (f.degree() < n * k) {
    record["alon_furedi_exact"] = big_to_json(alon_furedi_exact(std::vector<std::int64_t>(n, k), f.degree()));
  }
  record["alon_furedi_weak"] = bound_to_json(weak);
  int code = f.degree() == expected ? kOk : kAssertionFailed;
  if (nonzeros > 0 && weak.applicable && BigInt(nonzeros) < weak.floor) code = kAssertionFailed;
  return {{record}, code};
}

Outcome cmd_verify(const Config& c) {
  VerifyReport report;
  if (c.what == "degrees") {
    report = replicate_degree_searches(c.max_prime, c.jobs);
  } else {
    SweepSpec spec;
    spec.n_min = c.n_min;
    spec.n_max = c.sweep_n_max;
    if (c.max_cycle_rank >= 0) spec.max_cycle_rank = c.max_cycle_rank;
    if (!c.ks.empty()) spec.ks = c.ks;
    spec.count = count_options(c);
    if (has_graph(c)) spec.graphs.push_back(load_graph(c));
    if (c.random_count > 0) {
      std::mt19937_64 rng(c.seed);
      for (int i = 0; i < c.random_count; ++i) spec.graphs.push_back(random_connected_graph(c.random_n, rng));
    }
    if (c.what == "conjecture") {
      report = verify_linear_dp_conjecture(spec);
    } else {
      if (c.theorem.empty()) throw UsageError("--theorem is required for soundness sweeps");
      report = verify_theorem_soundness(spec, c.theorem);
    }
  }
  Outcome out;
  if (!c.output.empty()) {
    std::ofstream file(c.output);
    if (!file) throw UsageError("cannot write " + c.output);
    write_jsonl(file, report.records);
  } else {
    out.records = report.records;
  }
  out.records.push_back(Json{{"command", "verify"},
                             {"what", c.what},
                             {"records", report.records.size()},
                             {"failures", report.failures},
                             {"skipped", report.skipped},
                             {"ok", report.ok()}});
  if (!report.ok()) {
    out.code = kAssertionFailed;
  } else if (!report.skipped.empty()) {
    out.code = kBudgetExceeded;
  }
  return out;
}

// --- output --------------------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& value, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (value.is_object()) {
    for (auto& [key, item] : value.items()) flatten(item, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  out.push_back({prefix, scalar_text(value)});
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Columns are the union of flattened keys in order of first appearance.
std::pair<std::vector<std::string>, std::vector<std::vector<std::string>>> tabulate(const std::vector<Json>& records) {
  std::vector<std::string> columns;
  std::vector<std::vector<std::pair<std::string, std::string>>> flat;
  for (const auto& r : records) {
    flat.emplace_back();
    flatten(r, "", flat.back());
    for (const auto& [key, value] : flat.back()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : flat) {
    std::vector<std::string> row(columns.size());
    for (const auto& [key, value] : f) {
      row[std::find(columns.begin(), columns.end(), key) - columns.begin()] = value;
    }
    rows.push_back(std::move(row));
  }
  return {columns, rows};
}

void emit(const std::vector<Json>& records, const std::string& format, std::ostream& out) {
  if (format == "json") {
    write_jsonl(out, records);
    return;
  }
  const auto [columns, rows] = tabulate(records);
  if (format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_field(columns[i]);
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    width[i] = columns[i].size();
    for (const auto& row : rows) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << cells[i] << std::string(width[i] - cells[i].size(), ' ');
    }
    out << "\n";
  };
  line(columns);
  for (const auto& row : rows) line(row);
}

void add_graph_options(CLI::App* app, Config& c) {
  app->add_option("--graph", c.graph_file, "graph file (graph6 or edge list)");
  app->add_option("--g6", c.g6, "graph6 string");
  app->add_option("--edges", c.edges, "pair list, e.g. 0-1,1-2");
  app->add_option("--vertices", c.vertices, "vertex count for --edges (isolated vertices)");
}

void add_field_options(CLI::App* app, Config& c) {
  app->add_option("--k", c.k, "number of colors / field order");
  app->add_option("--p", c.p, "field characteristic");
  app->add_option("--r", c.r, "field degree");
}

void add_engine_options(CLI::App* app, Config& c) {
  app->add_option("--dedup", c.dedup, "conjugation dedup")->check(CLI::IsMember({"on", "off"}));
  app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 1024));
  app->add_option("--budget", c.budget, "search step budget")->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"DP-coloring counts, lower bounds and cover-degree searches"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));

  auto* count = app.add_subcommand("count", "minimum number of colorings over a class of labelings");
  auto* colorable = app.add_subcommand("colorable", "whether every labeling of a class is colorable");
  for (auto* sub : {count, colorable}) {
    add_graph_options(sub, c);
    add_field_options(sub, c);
    add_engine_options(sub, c);
    sub->add_option("--mode", c.mode, "labeling class")->check(CLI::IsMember({"dp", "linear", "signed", "classical"}));
  }
  count->add_option("--labeling", c.labeling, "labeling literal; ';' separates lines");
  count->add_option("--labeling-file", c.labeling_file, "labeling file");

  auto* bound = app.add_subcommand("bound", "evaluate a lower bound");
  add_graph_options(bound, c);
  add_field_options(bound, c);
  add_engine_options(bound, c);
  bound->add_option("--theorem", c.theorem, "main-ii|main-i|linear|list|signed|signed-all|general-c");
  bound->add_option("--n", c.n, "vertices");
  bound->add_option("--m", c.m, "edges");
  bound->add_option("--c", c.c, "colors for general-c");

  auto* family = app.add_subcommand("family", "bounds for sparse planar families; no --family lists them");
  add_field_options(family, c);
  family->add_option("--family", c.family, "family id");
  family->add_option("--n", c.n, "vertices");
  family->add_option("--n-max", c.n_max, "last n of a table");
  family->add_option("--n-step", c.n_step, "n increment of a table");
  family->add_option("--m", c.m, "edges, when known");
  family->add_option("--genus", c.genus, "Euler genus");
  family->add_option("--c", c.c, "rational parameter c");

  auto* search = app.add_subcommand("search-degree", "minimal degree of polynomials covering a permutation graph");
  add_field_options(search, c);
  search->add_option("--perm", c.perm, "permutation in one-line notation");
  search->add_option("--anchor", c.anchor, "a,b with pi(a) != b");
  search->add_flag("--anchored", c.anchored, "require a nonzero at the anchor");
  search->add_flag("--product-l", c.product_l, "products of L-polynomials only");
  search->add_flag("--swap-family", c.swap_family, "permutation 1 0 2 3 ... anchored at (0,0)");
  search->add_option("--dedup", c.dedup, "affine double-coset dedup")->check(CLI::IsMember({"on", "off"}));
  search->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 1024));

  auto* cover = app.add_subcommand("cover", "cover polynomial of a labeling and its nonzero count");
  add_graph_options(cover, c);
  add_field_options(cover, c);
  cover->add_option("--labeling", c.labeling, "labeling literal; ';' separates lines");
  cover->add_option("--labeling-file", c.labeling_file, "labeling file");
  cover->add_option("--tree-edges", c.tree_edges, "spanning tree as a pair list");
  cover->add_flag("--anchored", c.anchored, "anchored factors at --coloring");
  cover->add_option("--coloring", c.coloring, "proper coloring, comma separated");
  cover->add_option("--budget", c.budget, "evaluation budget")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "batch sweeps");
  add_graph_options(verify, c);
  add_engine_options(verify, c);
  verify->add_option("--what", c.what, "conjecture|soundness|degrees")
      ->check(CLI::IsMember({"conjecture", "soundness", "degrees"}));
  verify->add_option("--theorem", c.theorem, "main-ii|main-i|linear|signed|signed-all");
  verify->add_option("--k", c.ks, "k values")->delimiter(',');
  verify->add_option("--n-min", c.n_min, "smallest generated n");
  verify->add_option("--n-max", c.sweep_n_max, "largest generated n");
  verify->add_option("--max-cycle-rank", c.max_cycle_rank, "skip graphs above this cycle rank");
  verify->add_option("--max-prime", c.max_prime, "largest prime of the anchored family search");
  verify->add_option("--random", c.random_count, "sampled connected graphs added to the sweep");
  verify->add_option("--random-n", c.random_n, "vertices of sampled graphs");
  verify->add_option("--seed", c.seed, "sampling seed");
  verify->add_option("--output", c.output, "write records as JSON lines to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Outcome result;
    if (*count) result = cmd_count(c);
    else if (*colorable) result = cmd_colorable(c);
    else if (*bound) result = cmd_bound(c);
    else if (*family) result = cmd_family(c);
    else if (*search) result = cmd_search_degree(c);
    else if (*cover) result = cmd_cover(c);
    else result = cmd_verify(c);
    emit(result.records, c.format, out);
    return result.code;
  } catch (const CoverBudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dpcolor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dpcolor::cli
