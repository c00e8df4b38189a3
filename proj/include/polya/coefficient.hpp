#pragma once

// Coefficient extraction for products of multinomials
//
//   P(x_1..x_n) = prod_a (x_1^{r_a} + ... + x_n^{r_a})^{d_a}
//
// at a target monomial T = x_1^{c_1} ... x_n^{c_n} known in advance. Instead
// of expanding P, the search fixes the exponent every factor contributes to
// x_1, grows a pruned tree of per-variable exponents for each factor, and
// combines the surviving per-factor sequences whose column sums hit T. Each
// surviving combination contributes prod_a multinomial(d_a; k_a / r_a).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polya/big_count.hpp"
#include "polya/concentration.hpp"
#include "polya/cycle_index.hpp"
#include "polya/group.hpp"

namespace polya {

/// Exact C(n, k); zero when k > n. Evaluated by the interleaved
/// multiply-then-divide recurrence C(n-k+i, i) = C(n-k+i-1, i-1) (n-k+i) / i,
/// so every intermediate value is itself a binomial coefficient.
BigCount binomial(std::uint64_t n, std::uint64_t k);

/// d! / (k_1! ... k_n!) as the telescoping product
/// prod_i C(k_1 + ... + k_i, k_i). Returns 0 unless sum(ks) == d.
BigCount multinomial(std::uint64_t d, std::span<const std::size_t> ks);

/// Raw exponents (k_1 r, ..., k_n r) that one factor contributes to each
/// variable; every entry is a multiple of the factor's cycle length.
using ExponentSequence = std::vector<std::size_t>;

/// Node of the per-factor search tree. `root` is the exponent proposed for
/// one variable, `used` the exponent mass spent on it and every variable
/// before it.
struct SequenceNode {
  std::size_t root = 0;
  std::size_t used = 0;
  std::vector<std::size_t> children;  // indices into SequenceTree::nodes()
};

/// Pruned tree of exponent sequences for one factor with a fixed exponent on
/// the first variable. A candidate exponent v for variable i survives iff
/// v is in the factor's exponent domain, v <= T_i, the factor still has v of
/// its mass left, and what remains afterwards fits under T_{i+1} + ... + T_n.
class SequenceTree {
 public:
  SequenceTree(const Factor& factor, std::size_t first_exponent,
               std::span<const std::size_t> target);

  /// Empty when the first exponent itself is infeasible.
  std::span<const SequenceNode> nodes() const noexcept { return nodes_; }

  /// Root-to-leaf paths of full depth, in increasing lexicographic order.
  std::vector<ExponentSequence> expand() const;

 private:
  void grow(std::size_t node, std::size_t variable);

  Factor factor_;
  std::vector<std::size_t> target_;
  std::vector<std::size_t> suffix_;  // suffix_[i] = T_i + ... + T_n
  std::vector<SequenceNode> nodes_;
};

/// For each factor, every exponent sequence that starts with
/// `first_exponents[a]` and can still be part of the target term.
/// Throws InputError if the number of first exponents differs from the
/// number of factors.
std::vector<std::vector<ExponentSequence>> build_sequences(
    std::span<const std::size_t> first_exponents, const PolyaProduct& product,
    const Concentration& conc);

/// Streams the cartesian product of the per-factor lists and sums
/// prod_a multinomial(d_a; S_a / r_a) over the combinations whose column
/// sums equal the concentration.
BigCount sum_sequences(std::span<const std::vector<ExponentSequence>> sequences,
                       const PolyaProduct& product, const Concentration& conc);

/// Coefficient of the concentration monomial in the expanded product.
/// Throws InputError unless conc.total() == product.degree().
BigCount coefficient_for_product(const PolyaProduct& product, const Concentration& conc);

struct CountOptions {
  /// Worker threads for per-product coefficients; results do not depend on it.
  unsigned threads = 1;
};

/// Intermediate totals of a Polya count.
struct PolyaTally {
  BigCount coefficient_sum;  // sum over operations of their coefficient
  std::uint64_t group_order = 0;
  BigCount count;  // coefficient_sum / group_order
};

/// Throws InputError on a concentration/set-size mismatch or an empty
/// group, ConsistencyError if the sum is not divisible by the group order.
PolyaTally polya_tally(const WeightedProducts& products, std::uint64_t group_order,
                       const Concentration& conc, const CountOptions& options = {});
PolyaTally polya_tally(const Group& g, const Concentration& conc,
                       const CountOptions& options = {});

/// Number of orbits of colorings with the given concentration.
BigCount polya_count(const Group& g, const Concentration& conc, const CountOptions& options = {});

}  // namespace polya
