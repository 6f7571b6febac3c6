#include "dpcolor/degree_search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "dpcolor/linalg.hpp"
#include "dpcolor/parallel.hpp"

namespace dpcolor {

const char* to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::general: return "general";
    case SearchMode::anchored: return "anchored";
    case SearchMode::product_of_l: return "product-of-L";
    case SearchMode::product_of_l_anchored: return "product-of-L-anchored";
  }
  return "unknown";
}

std::vector<std::pair<int, int>> monomials(int k, int d) {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t <= d; ++t) {
    for (int a = std::min(t, k - 1); a >= 0; --a) {
      const int b = t - a;
      if (b <= k - 1) out.push_back({a, b});
    }
  }
  return out;
}

Permutation swap_first_two(int k) {
  if (k < 2) throw DegreeSearchError("need k >= 2");
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[0], img[1]);
  return Permutation(std::move(img));
}

namespace {

class Evaluator {
public:
  Evaluator(const Field& f) : f_(f), k_(static_cast<int>(f.order())), pw_(static_cast<std::size_t>(k_) * k_) {
    for (int x = 0; x < k_; ++x) {
      std::uint32_t v = 1;
      for (int e = 0; e < k_; ++e) {
        pw_[static_cast<std::size_t>(x) * k_ + e] = v;
        v = f.mul_index(v, static_cast<std::uint32_t>(x));
      }
    }
  }

  std::uint32_t monomial(std::uint32_t x, std::uint32_t y, std::pair<int, int> m) const {
    return f_.mul_index(pw_[static_cast<std::size_t>(x) * k_ + m.first], pw_[static_cast<std::size_t>(y) * k_ + m.second]);
  }

  Matrix graph_rows(const Permutation& pi, const std::vector<std::pair<int, int>>& mons,
                    std::optional<Anchor> anchor) const {
    Matrix m(k_ + (anchor ? 1 : 0), static_cast<int>(mons.size()));
    for (int c = 0; c < k_; ++c) {
      for (std::size_t j = 0; j < mons.size(); ++j) {
        m.at(c, static_cast<int>(j)) = monomial(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(pi(c)), mons[j]);
      }
    }
    if (anchor) {
      for (std::size_t j = 0; j < mons.size(); ++j) m.at(k_, static_cast<int>(j)) = monomial(anchor->first, anchor->second, mons[j]);
    }
    return m;
  }

private:
  const Field& f_;
  int k_;
  std::vector<std::uint32_t> pw_;
};

BivariatePoly to_poly(FieldPtr field, const std::vector<std::pair<int, int>>& mons, const std::vector<std::uint32_t>& v) {
  BivariatePoly p(std::move(field));
  for (std::size_t j = 0; j < mons.size(); ++j) p.set_coefficient(mons[j].first, mons[j].second, v[j]);
  return p;
}

void check_input(const Field& f, const Permutation& pi) {
  if (f.order() < 2) throw DegreeSearchError("need k >= 2");
  if (pi.size() != static_cast<int>(f.order())) throw DegreeSearchError("permutation size differs from the field order");
}

// Smallest d in [lo, hi] with pred(d), assuming pred is monotone and pred(hi).
template <class Pred>
int first_true(int lo, int hi, Pred pred) {
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

DegreeSearchResult min_cover_degree(FieldPtr field, const Permutation& pi) {
  const Field& f = *field;
  check_input(f, pi);
  const int k = static_cast<int>(f.order());
  const Evaluator ev(f);
  const int d = first_true(1, 2 * (k - 1), [&](int deg) {
    const auto mons = monomials(k, deg);
    return matrix_rank(f, ev.graph_rows(pi, mons, std::nullopt)) < static_cast<int>(mons.size());
  });
  const auto mons = monomials(k, d);
  const auto basis = kernel_basis(f, ev.graph_rows(pi, mons, std::nullopt));
  DegreeSearchResult r;
  r.pi = pi;
  r.mode = SearchMode::general;
  r.degree = d;
  r.witness = to_poly(field, mons, basis.front());
  return r;
}

DegreeSearchResult min_cover_degree_anchored(FieldPtr field, const Permutation& pi, std::uint32_t a, std::uint32_t b) {
  const Field& f = *field;
  check_input(f, pi);
  const int k = static_cast<int>(f.order());
  if (a >= f.order() || b >= f.order()) throw DegreeSearchError("anchor out of range");
  if (static_cast<std::uint32_t>(pi(static_cast<int>(a))) == b) throw DegreeSearchError("anchor lies on the graph of pi");
  const Evaluator ev(f);
  const Anchor anchor{a, b};
  const int d = first_true(1, 2 * (k - 1), [&](int deg) {
    const auto mons = monomials(k, deg);
    const Matrix with = ev.graph_rows(pi, mons, anchor);
    const Matrix without = ev.graph_rows(pi, mons, std::nullopt);
    return matrix_rank(f, with) > matrix_rank(f, without);
  });
  const auto mons = monomials(k, d);
  const auto basis = kernel_basis(f, ev.graph_rows(pi, mons, std::nullopt));
  DegreeSearchResult r;
  r.pi = pi;
  r.mode = SearchMode::anchored;
  r.anchor = anchor;
  r.degree = d;
  for (const auto& v : basis) {
    std::uint32_t at_anchor = 0;
    for (std::size_t j = 0; j < mons.size(); ++j) at_anchor = f.add_index(at_anchor, f.mul_index(v[j], ev.monomial(a, b, mons[j])));
    if (at_anchor != 0) {
      r.witness = to_poly(field, mons, v);
      break;
    }
  }
  if (!r.witness) throw DegreeSearchError("internal: anchored kernel has no vector nonzero at the anchor");
  return r;
}

DegreeSearchResult min_cover_degree_product_of_l(FieldPtr field, const Permutation& pi, std::optional<Anchor> anchor) {
  const Field& f = *field;
  check_input(f, pi);
  const int k = static_cast<int>(f.order());
  if (k > 16) throw DegreeSearchError("product-of-L search supports k <= 16");
  if (anchor && static_cast<std::uint32_t>(pi(static_cast<int>(anchor->first))) == anchor->second) {
    throw DegreeSearchError("anchor lies on the graph of pi");
  }

  struct Line {
    std::uint32_t mask;
    std::uint32_t i, j;
  };
  std::vector<Line> lines;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const LFactor lf = l_polynomial(field, pi, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      if (anchor && lf.poly.evaluate(anchor->first, anchor->second) == 0) continue;
      std::uint32_t mask = 0;
      for (int c = 0; c < k; ++c) {
        if (lf.poly.evaluate(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(pi(c))) == 0) mask |= 1u << c;
      }
      if (std::none_of(lines.begin(), lines.end(), [&](const Line& l) { return l.mask == mask; })) {
        lines.push_back(Line{mask, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      }
    }
  }

  const std::uint32_t all = (1u << k) - 1;
  std::vector<int> chosen;
  auto search = [&](auto&& self, std::uint32_t covered, int budget) -> bool {
    if (covered == all) return true;
    if (budget == 0) return false;
    const int first = std::countr_one(covered);
    for (std::size_t li = 0; li < lines.size(); ++li) {
      if (!(lines[li].mask >> first & 1u)) continue;
      chosen.push_back(static_cast<int>(li));
      if (self(self, covered | lines[li].mask, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  DegreeSearchResult r;
  r.pi = pi;
  r.mode = anchor ? SearchMode::product_of_l_anchored : SearchMode::product_of_l;
  r.anchor = anchor;
  for (int depth = 1; depth <= k; ++depth) {
    chosen.clear();
    if (search(search, 0, depth)) {
      r.degree = depth;
      for (int li : chosen) r.factors.push_back({lines[li].i, lines[li].j});
      return r;
    }
  }
  r.degree = -1;
  return r;
}

bool witness_is_valid(const Field& field, const DegreeSearchResult& r) {
  const int k = static_cast<int>(field.order());
  if (r.degree < 0) return r.witness == std::nullopt && r.factors.empty();
  auto value_at = [&](std::uint32_t x, std::uint32_t y) -> std::uint32_t {
    if (r.witness) return r.witness->evaluate(x, y);
    std::uint32_t v = 1;
    auto fp = std::make_shared<const Field>(field);
    for (auto [i, j] : r.factors) v = field.mul_index(v, l_polynomial(fp, r.pi, i, j).poly.evaluate(x, y));
    return v;
  };
  for (int c = 0; c < k; ++c) {
    if (value_at(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(r.pi(c))) != 0) return false;
  }
  if (r.anchor && value_at(r.anchor->first, r.anchor->second) == 0) return false;
  if (r.witness) return !r.witness->is_zero() && r.witness->degree() == r.degree;
  return static_cast<int>(r.factors.size()) == r.degree;
}

// --- worst case over all permutations ----------------------------------------

namespace {

struct Instance {
  std::uint64_t rank;
  std::uint32_t a, b;
};

}  // namespace

WorstCaseResult worst_case_degree(FieldPtr field, bool anchored, bool dedup, int jobs) {
  const Field& f = *field;
  const int k = static_cast<int>(f.order());
  if (k < 2) throw DegreeSearchError("need k >= 2");
  if (k > 8) throw DegreeSearchError("exhaustive search over permutations supports k <= 8");
  if (anchored && k < 3) throw DegreeSearchError("anchored search needs k >= 3");

  std::uint64_t factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= static_cast<std::uint64_t>(i);
  const std::uint64_t anchors = anchored ? static_cast<std::uint64_t>(k) * k : 1;
  auto code = [&](std::uint64_t rank, std::uint32_t a, std::uint32_t b) {
    return anchored ? (rank * static_cast<std::uint64_t>(k) + a) * static_cast<std::uint64_t>(k) + b : rank;
  };

  WorstCaseResult out;
  out.deduplicated = dedup;
  std::vector<Instance> reps;
  std::vector<char> seen(dedup ? factorial * anchors : 0, 0);
  const PermutationSet affine = PermutationSet::affine(f);
  std::vector<Permutation> affine_inv;
  for (const auto& mu : affine.elements()) affine_inv.push_back(mu.inverse());

  for (std::uint64_t rank = 0; rank < factorial; ++rank) {
    const Permutation pi = Permutation::from_lehmer_rank(k, rank);
    for (std::uint32_t a = 0; a < (anchored ? static_cast<std::uint32_t>(k) : 1u); ++a) {
      for (std::uint32_t b = 0; b < (anchored ? static_cast<std::uint32_t>(k) : 1u); ++b) {
        if (anchored && static_cast<std::uint32_t>(pi(static_cast<int>(a))) == b) continue;
        ++out.instances;
        if (!dedup) {
          reps.push_back(Instance{rank, a, b});
          continue;
        }
        if (seen[code(rank, a, b)]) continue;
        reps.push_back(Instance{rank, a, b});
        for (const auto& lambda : affine.elements()) {
          const Permutation lp = compose(lambda, pi);
          for (std::size_t mi = 0; mi < affine.size(); ++mi) {
            const Permutation image = compose(lp, affine[mi]);
            const auto ia = anchored ? static_cast<std::uint32_t>(affine_inv[mi](static_cast<int>(a))) : 0u;
            const auto ib = anchored ? static_cast<std::uint32_t>(lambda(static_cast<int>(b))) : 0u;
            seen[code(image.lehmer_rank(), ia, ib)] = 1;
          }
        }
      }
    }
  }

  std::vector<int> degrees(reps.size(), 0);
  parallel_for(reps.size(), jobs, [&](std::size_t i) {
    const Permutation pi = Permutation::from_lehmer_rank(k, reps[i].rank);
    degrees[i] = anchored ? min_cover_degree_anchored(field, pi, reps[i].a, reps[i].b).degree
                          : min_cover_degree(field, pi).degree;
  });
  out.evaluated = reps.size();
  for (std::size_t i = 0; i < reps.size(); ++i) out.max_degree = std::max(out.max_degree, degrees[i]);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (degrees[i] != out.max_degree) continue;
    ++out.argmax_count;
    if (out.witnesses.size() < WorstCaseResult::kMaxWitnesses) {
      const Permutation pi = Permutation::from_lehmer_rank(k, reps[i].rank);
      out.witnesses.push_back(anchored ? min_cover_degree_anchored(field, pi, reps[i].a, reps[i].b)
                                       : min_cover_degree(field, pi));
    }
  }
  return out;
}

}  // namespace dpcolor
