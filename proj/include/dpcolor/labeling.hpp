#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpcolor/graph.hpp"
#include "dpcolor/permutation.hpp"

namespace dpcolor {

class LabelingError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Orientation plus one permutation tuple per edge record. perms[e] has
/// length graph.edges()[e].multiplicity and is read along orientation.arcs[e]:
/// a coloring c is proper iff p(c[tail]) != c[head] for every p in perms[e].
struct SLabeling {
  Multigraph graph;
  Orientation orientation;
  int k = 0;
  std::vector<std::vector<Permutation>> perms;

  /// Identity on every edge, canonical orientation.
  static SLabeling identity(const Multigraph& g, int k);

  void validate() const;
  friend bool operator==(const SLabeling&, const SLabeling&) = default;
};

/// Edge signs indexed like graph.edges(); entries are +1 or -1.
struct SignedGraph {
  Multigraph graph;
  std::vector<int> sign;

  static SignedGraph all_positive(const Multigraph& g);
  void validate() const;
  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;
};

/// Replaces every p on an arc (u, v) by taus[v] ∘ p ∘ taus[u]^{-1}.
SLabeling apply_gauge(const SLabeling& l, const std::vector<Permutation>& taus);
/// Gauge with alpha at u and the identity elsewhere.
SLabeling gauge_at_vertex(const SLabeling& l, int u, const Permutation& alpha);
/// Replaces every p by alpha^{-1} ∘ p ∘ alpha.
SLabeling conjugate(const SLabeling& l, const Permutation& alpha);

/// Vertex gauges that make the first component of every tree edge the
/// identity. Works on forests; roots receive the identity.
std::vector<Permutation> tree_gauge(const SLabeling& l, const SpanningTree& t);
SLabeling normalize_tree(const SLabeling& l, const SpanningTree& t);

/// Lexicographically smallest simultaneous conjugate of the tuple over all
/// alpha in the symmetric group (or in `group` when given).
std::vector<Permutation> canonical_conjugate(const std::vector<Permutation>& tuple);
std::vector<Permutation> canonical_conjugate(const std::vector<Permutation>& tuple, const PermutationSet& group);

/// One free position of a tree-normalized labeling: component `component`
/// of edge record `edge`. The first component of every tree edge is fixed
/// to the identity and is not a slot.
struct Slot {
  int edge = 0;
  int component = 0;
};

std::vector<Slot> free_slots(const Multigraph& g, const SpanningTree& t);

/// Builds the canonical-orientation labeling with identity on tree slots and
/// s[choice[i]] on free slot i.
SLabeling materialize(const Multigraph& g, const std::vector<Slot>& slots, const PermutationSet& s,
                      const std::vector<int>& choice);

/// Table conj[a * |S| + p] = index of S[a]^{-1} ∘ S[p] ∘ S[a]. Requires S to
/// be a group; empty when |S| exceeds the table limit.
std::vector<std::uint32_t> conjugation_table(const PermutationSet& s);

struct EnumerationStats {
  std::uint64_t emitted = 0;
  bool deduplicated = false;
  bool stopped = false;
};

/// Streams every assignment of elements of S to the free slots of (g, t),
/// as index vectors into S. With dedup (and S a group small enough for a
/// conjugation table) only the lexicographically smallest tuple of each
/// simultaneous-conjugation orbit is emitted. The callback returns false to
/// stop the stream.
EnumerationStats enumerate_normalized_labelings(const Multigraph& g, const SpanningTree& t, const PermutationSet& s,
                                                bool dedup,
                                                const std::function<bool(const std::vector<int>&)>& emit);

/// Translation of a signed graph into an S-labeling over GF(k) indices.
/// Odd k: negative edges carry field negation. Even k: a -> a + 1.
struct SignedTranslation {
  SLabeling labeling;
  /// Signed color values in increasing order and their field images.
  std::vector<int> signed_colors;
  std::vector<int> psi;
};

SignedTranslation signed_to_labeling(const SignedGraph& sg, int k);

/// Lines "u v : p[,p...]"; the arc is u -> v. Pairs absent from the text
/// get identity permutations under the canonical orientation.
SLabeling parse_labeling(std::string_view text, const Multigraph& g, int k);
std::string format_labeling(const SLabeling& l);

}  // namespace dpcolor
