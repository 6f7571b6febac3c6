#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dpcolor/graph.hpp"
#include "dpcolor/labeling.hpp"
#include "dpcolor/permutation.hpp"

namespace dpcolor {

class CountingError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct CountOptions {
  /// Elementary backtracking steps allowed across the whole computation.
  std::uint64_t budget = 1'000'000'000;
  int jobs = 1;
  bool dedup = true;
};

/// Backtracking coloring counter for a fixed graph and orientation. Vertices
/// are processed in BFS-forest order; each vertex collects the colors
/// forbidden by its already-colored neighbours through every tuple
/// component (forward along the arc, inverse against it).
class ColoringCounter {
public:
  ColoringCounter(const Multigraph& g, const Orientation& o, int k);

  int k() const { return k_; }
  /// Number of (edge record, component) positions; slot id of component c of
  /// record e is slot_offset(e) + c.
  int slot_count() const { return slot_count_; }
  int slot_offset(int edge) const { return slot_offset_[edge]; }

  /// Counts colorings with colors in `palette` (bit c set = color c allowed).
  /// fwd[s] and inv[s] are the permutation and its inverse on slot s.
  /// Stops early once the count reaches `limit`; the returned value is then
  /// >= limit. `steps` accumulates visited search nodes.
  std::uint64_t count(const std::uint8_t* const* fwd, const std::uint8_t* const* inv, std::uint64_t palette,
                      std::uint64_t limit, std::uint64_t& steps) const;

  static std::uint64_t full_palette(int k) { return k >= 64 ? ~0ull : ((1ull << k) - 1); }

private:
  struct Constraint {
    int earlier;  // position of the neighbour in the order
    int slot;
    bool inverse;
  };

  std::uint64_t descend(int pos, std::vector<int>& color, const std::uint8_t* const* fwd, const std::uint8_t* const* inv,
                        std::uint64_t palette, std::uint64_t limit, std::uint64_t& count, std::uint64_t& steps) const;

  int n_ = 0;
  int k_ = 0;
  int slot_count_ = 0;
  std::vector<int> slot_offset_;
  std::vector<int> begin_;  // constraints of position p are [begin_[p], begin_[p+1])
  std::vector<Constraint> constraints_;
};

/// Number of proper colorings of l using colors from `palette` (all k colors
/// when empty).
std::uint64_t count_colorings(const SLabeling& l, const std::vector<int>& palette = {});
/// Same, with the number of search steps reported.
std::uint64_t count_colorings(const SLabeling& l, const std::vector<int>& palette, std::uint64_t& steps);

/// Proper-coloring test for a single assignment.
bool is_proper_coloring(const SLabeling& l, const std::vector<int>& coloring);

struct CountReport {
  std::uint64_t value = 0;
  /// True when the budget ran out; value is then the best found so far.
  bool partial = false;
  std::optional<SLabeling> witness;
  std::optional<SignedGraph> signed_witness;
  std::uint64_t labelings_examined = 0;
  /// |S|^(free slots) summed over components, saturating at 2^64 - 1.
  std::uint64_t labelings_total = 0;
  /// Order of the conjugating group used for deduplication (1 when off).
  std::uint64_t dedup_group_order = 1;
  std::uint64_t steps = 0;
};

/// Minimum of count_colorings over all S-labelings of g (S closed under
/// inverses), computed per component over tree-normalized labelings.
CountReport s_color_function(const Multigraph& g, const PermutationSet& s, const CountOptions& opts = {});

std::uint64_t chromatic_value(const Multigraph& g, int k);
CountReport dp_color_function(const Multigraph& g, int k, const CountOptions& opts = {});
CountReport linear_color_function(const Multigraph& g, int k, const CountOptions& opts = {});

struct ColorabilityReport {
  bool colorable = true;
  bool partial = false;
  /// A labeling with no proper coloring, when one exists.
  std::optional<SLabeling> witness;
  std::uint64_t labelings_examined = 0;
  std::uint64_t steps = 0;
};

/// Whether every S-labeling of g admits a proper coloring.
ColorabilityReport s_colorable(const Multigraph& g, const PermutationSet& s, const CountOptions& opts = {});
ColorabilityReport dp_chromatic_leq(const Multigraph& g, int k, const CountOptions& opts = {});

/// Colors of the signed palette: {0, ±1, ..., ±t} for odd k, {±1, ..., ±t}
/// for even k.
std::vector<int> signed_palette(int k);
/// Proper colorings kappa of a signed simple graph: kappa(v) != sign * kappa(u).
std::uint64_t signed_count(const SignedGraph& sg, int k);
/// Minimum of signed_count over all signatures, one per switching class.
CountReport signed_color_function(const Multigraph& g, int k, const CountOptions& opts = {});
/// Whether every signature of g admits a proper signed coloring.
bool signed_colorable(const Multigraph& g, int k);

/// Chromatic polynomial of a simple graph by deletion-contraction;
/// coefficient i multiplies k^i.
std::vector<std::int64_t> chromatic_polynomial(const Multigraph& g);
std::int64_t evaluate_polynomial(const std::vector<std::int64_t>& coefficients, std::int64_t k);

}  // namespace dpcolor
