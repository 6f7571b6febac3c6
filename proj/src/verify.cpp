#include "dpcolor/verify.hpp"

#include <mutex>

#include "dpcolor/bounds.hpp"
#include "dpcolor/covering.hpp"
#include "dpcolor/degree_search.hpp"
#include "dpcolor/finite_field.hpp"
#include "dpcolor/graph_gen.hpp"
#include "dpcolor/parallel.hpp"

namespace dpcolor {

void SweepSpec::validate() const {
  if (count.budget == 0) throw VerifyError("budget must be positive");
  if (ks.empty()) throw VerifyError("no k values given");
  for (int k : ks) {
    if (k < 2) throw VerifyError("k must be at least 2");
  }
  if (graphs.empty()) {
    if (n_min < 1 || n_max > 7 || n_min > n_max) throw VerifyError("generated sweeps need 1 <= n_min <= n_max <= 7");
  }
  if (max_cycle_rank && *max_cycle_rank < 0) throw VerifyError("cycle-rank cap must be non-negative");
}

namespace {

int cycle_rank(const Multigraph& g) {
  return g.edge_count() - g.vertex_count() + static_cast<int>(g.components().size());
}

Json graph_fields(const Multigraph& g, int k) {
  return Json{{"graph", graph_label(g)}, {"n", g.vertex_count()}, {"m", g.edge_count()}, {"k", k}};
}

// Runs fn over every (k, graph) pair on the worker pool and collects the
// results in input order.
struct Cell {
  Json record;
  std::optional<std::string> failure;
  std::optional<std::string> skipped;
};

template <class Fn>
VerifyReport sweep(const SweepSpec& spec, Fn&& fn) {
  spec.validate();
  const auto graphs = sweep_graphs(spec);
  const std::size_t total = graphs.size() * spec.ks.size();
  std::vector<Cell> cells(total);
  parallel_for(total, spec.count.jobs, [&](std::size_t i) {
    const int k = spec.ks[i / graphs.size()];
    cells[i] = fn(graphs[i % graphs.size()], k);
  });
  VerifyReport report;
  for (auto& c : cells) {
    report.records.push_back(std::move(c.record));
    if (c.failure) report.failures.push_back(*c.failure);
    if (c.skipped) report.skipped.push_back(*c.skipped);
  }
  return report;
}

CountOptions inner_options(const SweepSpec& spec) {
  CountOptions o = spec.count;
  o.jobs = 1;
  return o;
}

std::string describe(const Multigraph& g, int k) {
  return graph_label(g) + " k=" + std::to_string(k);
}

HypothesisStatus status_of(bool holds) { return holds ? HypothesisStatus::verified : HypothesisStatus::violated; }

// Bounds whose arithmetic hypotheses already fail need no count.
std::optional<Cell> arithmetic_precheck(Cell& cell, const BoundValue& assumed) {
  if (assumed.applicable) return std::nullopt;
  cell.record["bound"] = bound_to_json(assumed);
  cell.record["status"] = "not-applicable";
  return std::move(cell);
}

Cell finish_soundness(Cell cell, const Multigraph& g, int k, const BoundValue& b, std::uint64_t value) {
  cell.record["bound"] = bound_to_json(b);
  cell.record["value"] = value;
  if (!b.applicable) return cell;
  const BigInt margin = BigInt(value) - b.floor;
  cell.record["margin"] = big_to_json(margin);
  if (margin < 0) {
    cell.failure = b.theorem + " violated on " + describe(g, k) + ": value " + std::to_string(value) + " < floor " +
                   b.floor.str();
  }
  return cell;
}

}  // namespace

std::vector<Multigraph> sweep_graphs(const SweepSpec& spec) {
  std::vector<Multigraph> source = spec.graphs;
  if (source.empty()) {
    for (int n = spec.n_min; n <= spec.n_max; ++n) {
      auto part = connected_graphs(n);
      source.insert(source.end(), part.begin(), part.end());
    }
  }
  if (!spec.max_cycle_rank) return source;
  std::vector<Multigraph> out;
  for (auto& g : source) {
    if (cycle_rank(g) <= *spec.max_cycle_rank) out.push_back(std::move(g));
  }
  return out;
}

VerifyReport verify_linear_dp_conjecture(const SweepSpec& spec) {
  for (int k : spec.ks) {
    if (!prime_power_decomposition(k)) throw VerifyError("k must be a prime power: " + std::to_string(k));
  }
  const CountOptions opts = inner_options(spec);
  return sweep(spec, [&](const Multigraph& g, int k) {
    Cell cell;
    cell.record = graph_fields(g, k);
    const auto dp = dp_color_function(g, k, opts);
    const auto lin = linear_color_function(g, k, opts);
    cell.record["dp"] = count_to_json(dp);
    cell.record["linear"] = count_to_json(lin);
    if (dp.partial || lin.partial) {
      cell.record["status"] = "skipped";
      cell.skipped = describe(g, k);
      return cell;
    }
    const bool equal = dp.value == lin.value;
    cell.record["status"] = equal ? "equal" : "unequal";
    if (!equal) {
      cell.failure = "linear and DP color functions differ on " + describe(g, k) + ": " + std::to_string(lin.value) +
                     " vs " + std::to_string(dp.value);
    }
    return cell;
  });
}

VerifyReport verify_theorem_soundness(const SweepSpec& spec, const std::string& theorem) {
  const CountOptions opts = inner_options(spec);
  if (theorem == "main-ii" || theorem == "main-i") {
    for (int k : spec.ks) {
      if (k <= 2 || !prime_power_decomposition(k)) {
        throw VerifyError(theorem + " needs a prime power k >= 3");
      }
    }
    const bool first = theorem == "main-i";
    return sweep(spec, [&](const Multigraph& g, int k) {
      Cell cell;
      cell.record = graph_fields(g, k);
      cell.record["theorem"] = theorem;
      const int n = g.vertex_count(), m = g.edge_count();
      if (auto done = arithmetic_precheck(cell, first ? bound_main_i(n, m, k) : bound_main_ii(n, m, k))) return *done;
      const auto dp = dp_color_function(g, k, opts);
      if (dp.partial) {
        cell.skipped = describe(g, k);
        cell.record["status"] = "skipped";
        return cell;
      }
      // chi_DP(G) <= k exactly when the minimum count is positive.
      bool colorable = dp.value > 0;
      if (first && colorable && g.is_connected()) {
        const SpanningTree t = spanning_tree(g);
        const Multigraph derived = add_parallel_edges(g, t, k / 2 - 1);
        const auto col = s_colorable(derived, PermutationSet::symmetric(k), opts);
        if (col.partial) {
          cell.skipped = describe(g, k);
          cell.record["status"] = "skipped";
          return cell;
        }
        colorable = col.colorable;
      }
      const BoundValue b = first ? bound_main_i(n, m, k, status_of(colorable))
                                 : bound_main_ii(n, m, k, status_of(colorable));
      if (dp.witness) cell.record["witness"] = labeling_to_json(*dp.witness);
      return finish_soundness(std::move(cell), g, k, b, dp.value);
    });
  }
  if (theorem == "linear") {
    return sweep(spec, [&](const Multigraph& g, int k) {
      Cell cell;
      cell.record = graph_fields(g, k);
      cell.record["theorem"] = theorem;
      if (auto done = arithmetic_precheck(cell, bound_linear(g.vertex_count(), g.edge_count(), k))) return *done;
      const auto lin = linear_color_function(g, k, opts);
      if (lin.partial) {
        cell.skipped = describe(g, k);
        cell.record["status"] = "skipped";
        return cell;
      }
      const BoundValue b = bound_linear(g.vertex_count(), g.edge_count(), k, status_of(lin.value > 0));
      if (lin.witness) cell.record["witness"] = labeling_to_json(*lin.witness);
      return finish_soundness(std::move(cell), g, k, b, lin.value);
    });
  }
  if (theorem == "signed-all") {
    return sweep(spec, [&](const Multigraph& g, int k) {
      Cell cell;
      cell.record = graph_fields(g, k);
      cell.record["theorem"] = theorem;
      const auto sc = signed_color_function(g, k, opts);
      if (sc.partial) {
        cell.skipped = describe(g, k);
        cell.record["status"] = "skipped";
        return cell;
      }
      const BoundValue b = bound_signed(g.vertex_count(), g.edge_count(), k, true, status_of(sc.value > 0));
      if (sc.signed_witness) cell.record["witness"] = signed_graph_to_json(*sc.signed_witness);
      return finish_soundness(std::move(cell), g, k, b, sc.value);
    });
  }
  if (theorem == "signed") {
    // Every switching class is checked against its own hypothesis.
    return sweep(spec, [&](const Multigraph& g, int k) {
      Cell cell;
      cell.record = graph_fields(g, k);
      cell.record["theorem"] = theorem;
      const SpanningTree forest = spanning_forest(g);
      std::vector<int> extra;
      for (int e = 0; e < g.pair_count(); ++e) {
        if (!forest.contains(e)) extra.push_back(e);
      }
      if (extra.size() > 30) throw VerifyError("too many signatures");
      SignedGraph sg = SignedGraph::all_positive(g);
      Json classes = Json::array();
      for (std::uint64_t mask = 0; mask < (1ull << extra.size()); ++mask) {
        for (std::size_t i = 0; i < extra.size(); ++i) sg.sign[extra[i]] = (mask >> i) & 1 ? -1 : 1;
        const std::uint64_t value = signed_count(sg, k);
        const BoundValue b = bound_signed(g.vertex_count(), g.edge_count(), k, false, status_of(value > 0));
        Json item{{"signature", signed_graph_to_json(sg)}, {"value", value}, {"floor", big_to_json(b.floor)},
                  {"applicable", b.applicable}};
        if (b.applicable && BigInt(value) < b.floor && !cell.failure) {
          cell.failure = "signed violated on " + describe(g, k) + ": value " + std::to_string(value) + " < floor " +
                         b.floor.str();
          cell.record["witness"] = signed_graph_to_json(sg);
        }
        classes.push_back(std::move(item));
      }
      cell.record["classes"] = std::move(classes);
      return cell;
    });
  }
  throw VerifyError("unsupported theorem for soundness sweeps: " + theorem);
}

VerifyReport replicate_degree_searches(int max_prime, int jobs) {
  VerifyReport report;
  for (int k : {2, 3, 4, 5, 7}) {
    auto field = std::make_shared<const Field>(Field::of_order(k));
    const auto wc = worst_case_degree(field, false, true, jobs);
    Json record{{"search", "worst-case"}, {"k", k}, {"expected", k / 2}};
    record["result"] = worst_case_to_json(wc);
    if (wc.max_degree != k / 2) {
      report.failures.push_back("worst-case cover degree at k=" + std::to_string(k) + " is " +
                                std::to_string(wc.max_degree) + ", expected " + std::to_string(k / 2));
    }
    report.records.push_back(std::move(record));
  }
  std::vector<int> primes;
  for (int p = 3; p <= max_prime; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  std::vector<Json> records(primes.size());
  std::vector<std::string> errors(primes.size());
  parallel_for(primes.size(), jobs, [&](std::size_t i) {
    const int p = primes[i];
    auto field = std::make_shared<const Field>(Field::of_order(p));
    const auto r = min_cover_degree_anchored(field, swap_first_two(p), 0, 0);
    records[i] = Json{{"search", "anchored-family"}, {"k", p}, {"expected", p - 2}};
    records[i]["result"] = degree_result_to_json(r);
    if (r.degree != p - 2 || !witness_is_valid(*field, r)) {
      errors[i] = "anchored degree at p=" + std::to_string(p) + " is " + std::to_string(r.degree) + ", expected " +
                  std::to_string(p - 2);
    }
  });
  for (std::size_t i = 0; i < primes.size(); ++i) {
    report.records.push_back(std::move(records[i]));
    if (!errors[i].empty()) report.failures.push_back(errors[i]);
  }
  return report;
}

}  // namespace dpcolor
