#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/covering.hpp"
#include "dpcolor/permutation.hpp"

namespace dpcolor {

class DegreeSearchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class SearchMode { general, anchored, product_of_l, product_of_l_anchored };
const char* to_string(SearchMode mode);

using Anchor = std::pair<std::uint32_t, std::uint32_t>;

struct DegreeSearchResult {
  Permutation pi;
  SearchMode mode = SearchMode::general;
  std::optional<Anchor> anchor;
  /// Minimal degree; -1 when no admissible product of L-factors exists.
  int degree = -1;
  /// Witness polynomial (general and anchored modes).
  std::optional<BivariatePoly> witness;
  /// Witness factors L^pi_{i,j} as (i, j) pairs (product-of-L modes).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
};

/// Monomials x^a y^b with a, b <= k-1 and a + b <= d, by total degree then
/// decreasing a.
std::vector<std::pair<int, int>> monomials(int k, int d);

/// Smallest degree of a nonzero polynomial vanishing at every (c, pi(c)).
DegreeSearchResult min_cover_degree(FieldPtr field, const Permutation& pi);
/// Smallest degree of a polynomial vanishing at every (c, pi(c)) and
/// nonzero at (a, b).
DegreeSearchResult min_cover_degree_anchored(FieldPtr field, const Permutation& pi, std::uint32_t a, std::uint32_t b);
/// Smallest number of L-factors whose zero lines cover the graph of pi,
/// none of them passing through the anchor when one is given.
DegreeSearchResult min_cover_degree_product_of_l(FieldPtr field, const Permutation& pi,
                                                 std::optional<Anchor> anchor = std::nullopt);

/// Re-checks a result by direct evaluation: the witness vanishes on the
/// graph, is nonzero at the anchor, and has the reported degree.
bool witness_is_valid(const Field& field, const DegreeSearchResult& r);

struct WorstCaseResult {
  int max_degree = 0;
  /// Argmax instances, capped at `kMaxWitnesses`.
  std::vector<DegreeSearchResult> witnesses;
  std::uint64_t argmax_count = 0;  // among the instances actually evaluated
  std::uint64_t instances = 0;     // permutations, or (permutation, anchor) triples
  std::uint64_t evaluated = 0;
  bool deduplicated = false;
  static constexpr std::size_t kMaxWitnesses = 16;
};

/// Maximum of min_cover_degree (or min_cover_degree_anchored over all
/// anchors off the graph) over every permutation of GF(k). With dedup, one
/// representative per orbit of pi -> lambda ∘ pi ∘ mu (lambda, mu affine)
/// is evaluated.
WorstCaseResult worst_case_degree(FieldPtr field, bool anchored, bool dedup = false, int jobs = 1);

/// The permutation 1 0 2 3 ... (k-1).
Permutation swap_first_two(int k);

}  // namespace dpcolor
