#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polya/permutation.hpp"

namespace polya {

/// Finite permutation group given by its full element list. Elements share a
/// common set size; group axioms are only checked by validate_group().
class Group {
 public:
  Group(std::size_t set_size, std::vector<Permutation> elements);

  std::size_t set_size() const noexcept { return set_size_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const Permutation> elements() const noexcept { return elements_; }

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

 private:
  std::size_t set_size_;
  std::vector<Permutation> elements_;
};

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

/// Breadth-first closure of the generators under composition. Elements are
/// ordered by discovery, identity first. Throws InputError on mismatched sizes
/// or an empty generator list, GuardRailError when the closure outgrows `cap`.
Group close_group(std::span<const Permutation> generators,
                  std::size_t cap = kDefaultClosureCap);

/// Rotations j -> j+k followed by reflections j -> k-j (mod n). Always 2n
/// elements, so n = 1, 2 carry repeated permutations.
Group dihedral_group(std::size_t n);
Group cyclic_group(std::size_t n);
/// Requires n <= 10.
Group symmetric_group(std::size_t n);
Group trivial_group(std::size_t n);

/// S_n acting on the k-element subsets of {1..n} (lexicographic labelling).
Group subset_action_group(std::size_t n, std::size_t k);
/// S_n acting on ordered k-tuples of distinct elements of {1..n}.
Group tuple_action_group(std::size_t n, std::size_t k);

/// G x H acting on the product set; point (a, b) is labelled a * |H-set| + b.
/// Transitive whenever both factors are.
Group direct_product(const Group& g, const Group& h, std::size_t cap = kDefaultClosureCap);

struct GroupReport {
  bool distinct = true;
  bool has_identity = true;
  bool closed = true;
  std::vector<std::string> failures;

  bool valid() const noexcept { return distinct && has_identity && closed; }
};

/// Checks distinctness, identity membership and closure with O(|G|^2)
/// hashed products. Never throws on a bad group; the report carries it.
GroupReport validate_group(const Group& g);

/// Reads the text group format: '#' comment lines and blank lines are
/// skipped, the first remaining line is the set size, each later line one
/// permutation. Parse errors mention the 1-based line number.
Group read_group(std::istream& in);
Group read_group_file(const std::string& path);

/// Writes `g` in the format read_group() accepts.
void write_group(std::ostream& out, const Group& g);

}  // namespace polya
