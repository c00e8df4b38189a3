#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polya {

using Index = std::uint32_t;

/// Bijection on {0, ..., n-1} stored as its image array. Indices are 0-based
/// internally; every text format is 1-based.
class Permutation {
 public:
  /// Throws InputError unless `image` is a non-empty bijection.
  explicit Permutation(std::vector<Index> image);

  static Permutation identity(std::size_t size);

  std::size_t size() const noexcept { return image_.size(); }
  Index operator[](std::size_t j) const { return image_[j]; }
  std::span<const Index> image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.image_ < b.image_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Index> image, Unchecked) : image_(std::move(image)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Index> image_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Apply `q` first, then `p`: result[j] = p[q[j]].
Permutation compose(const Permutation& p, const Permutation& q);

/// Parses 1-based cycle notation ("(1,3)(2)(4)", "()" for identity) or a
/// whitespace separated 1-based image list ("3 2 1 4"). Notation is chosen by
/// the presence of '('. Indices missing from cycle notation are fixed points.
Permutation parse_permutation(std::string_view text, std::size_t set_size);

/// 1-based cycle notation omitting fixed points; the identity is "()".
std::string format_cycles(const Permutation& p);

/// One group of equal-length cycles: `count` disjoint cycles of `length`.
struct CycleClass {
  std::size_t length = 1;
  std::size_t count = 1;

  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

/// Disjoint-cycle type of a permutation, grouped by cycle length.
class CycleStructure {
 public:
  /// Throws InputError on zero lengths/counts or a repeated length.
  explicit CycleStructure(std::vector<CycleClass> classes);

  std::span<const CycleClass> classes() const noexcept { return classes_; }
  /// Sum of length * count.
  std::size_t set_size() const noexcept;
  /// Total number of disjoint cycles, fixed points included.
  std::size_t cycle_count() const noexcept;

  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;

 private:
  std::vector<CycleClass> classes_;
};

/// Cycle type with classes ordered by ascending length.
CycleStructure cycle_decomposition(const Permutation& p);

}  // namespace polya
