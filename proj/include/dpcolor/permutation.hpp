#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dpcolor {

class Field;

class PermutationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Bijection of {0, ..., k-1} stored in one-line notation: "2013" maps
/// 0->2, 1->0, 2->1, 3->3.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int k);
  /// One-line notation. Sizes up to 10 may be written as bare digits
  /// ("2013"); otherwise images are separated by '.' ("10.0.1.2...").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::string to_string() const;

  /// Rank in lexicographic order among all permutations of the same size.
  std::uint64_t lehmer_rank() const;
  static Permutation from_lehmer_rank(int k, std::uint64_t rank);

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> image_;
};

/// (a ∘ b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
/// alpha^{-1} ∘ p ∘ alpha.
Permutation conjugate_by(const Permutation& p, const Permutation& alpha);

/// The affine map x -> a*x + b on field element indices; a must be nonzero.
Permutation affine_permutation(const Field& f, std::uint32_t a, std::uint32_t b);
/// True iff p(x) = a*x + b for some a != 0.
bool is_affine(const Field& f, const Permutation& p);

/// A finite set S of permutations of {0, ..., k-1}, kept in lexicographic order.
class PermutationSet {
public:
  enum class Kind { symmetric, affine, trivial, explicit_list };

  static PermutationSet symmetric(int k);
  static PermutationSet affine(const Field& f);
  static PermutationSet trivial(int k);
  static PermutationSet from_list(std::vector<Permutation> perms);

  Kind kind() const { return kind_; }
  int degree() const { return k_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  /// Index of p in elements(), or -1.
  int index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }

  /// Closed under composition (and therefore inverses, being finite).
  bool is_group() const { return is_group_; }
  bool closed_under_inverse() const;

  std::string name() const;

private:
  void finish();

  Kind kind_ = Kind::explicit_list;
  int k_ = 0;
  bool is_group_ = false;
  std::vector<Permutation> elements_;
};

}  // namespace dpcolor
