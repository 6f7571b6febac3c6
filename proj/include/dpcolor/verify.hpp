#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/counting.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/report_json.hpp"

namespace dpcolor {

class VerifyError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SweepSpec {
  /// Generated source: all connected simple graphs with n_min <= n <= n_max.
  int n_min = 1;
  int n_max = 5;
  /// Graphs with cycle rank above the cap are left out of the sweep.
  std::optional<int> max_cycle_rank;
  /// Explicit graphs replace the generator when non-empty.
  std::vector<Multigraph> graphs;
  std::vector<int> ks{3};
  /// Budget and dedup apply per graph; jobs is the size of the worker pool.
  CountOptions count;

  void validate() const;
};

/// The graphs a sweep visits, in report order.
std::vector<Multigraph> sweep_graphs(const SweepSpec& spec);

struct VerifyReport {
  /// One record per (k, graph) or per search instance, in input order.
  std::vector<Json> records;
  /// Human-readable failure lines; each has a matching record carrying the witness.
  std::vector<std::string> failures;
  /// Graphs whose budget ran out.
  std::vector<std::string> skipped;

  bool ok() const { return failures.empty(); }
};

/// Compares the linear and DP color functions on every graph of the sweep.
VerifyReport verify_linear_dp_conjecture(const SweepSpec& spec);

/// Brute-force hypothesis check, bound floor, exact value and margin for each
/// graph. Supported ids: main-ii, main-i, linear, signed, signed-all.
VerifyReport verify_theorem_soundness(const SweepSpec& spec, const std::string& theorem);

/// worst_case_degree for k in {2,3,4,5,7} against floor(k/2), and the anchored
/// degree of 1 0 2 3 ... (p-1) at (0,0) against p-2 for primes p <= max_prime.
VerifyReport replicate_degree_searches(int max_prime = 13, int jobs = 1);

}  // namespace dpcolor
