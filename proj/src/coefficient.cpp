#include "polya/coefficient.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <optional>
#include <thread>

#include "polya/errors.hpp"

namespace polya {

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigCount multinomial(std::uint64_t d, std::span<const std::size_t> ks) {
  std::uint64_t prefix = 0;
  BigCount result = 1;
  for (std::size_t k : ks) {
    prefix += k;
    if (prefix > d) return 0;
    if (k != 0 && k != prefix) result *= binomial(prefix, k);
  }
  return prefix == d ? result : BigCount(0);
}

SequenceTree::SequenceTree(const Factor& factor, std::size_t first_exponent,
                           std::span<const std::size_t> target)
    : factor_(factor), target_(target.begin(), target.end()), suffix_(target.size() + 1, 0) {
  if (target_.empty()) return;
  for (std::size_t i = target_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + target_[i];

  const std::size_t mass = factor_.degree();
  if (first_exponent % factor_.cycle_length != 0 || first_exponent > mass ||
      first_exponent > target_[0] || mass - first_exponent > suffix_[1]) {
    return;
  }
  nodes_.push_back({first_exponent, first_exponent, {}});
  grow(0, 0);
}

void SequenceTree::grow(std::size_t node, std::size_t variable) {
  const std::size_t next = variable + 1;
  if (next == target_.size()) return;

  const std::size_t mass = factor_.degree();
  const std::size_t used = nodes_[node].used;
  const std::size_t limit = std::min(target_[next], mass - used);
  for (std::size_t v = 0; v <= limit; v += factor_.cycle_length) {
    if (mass - used - v > suffix_[next + 1]) continue;
    const std::size_t child = nodes_.size();
    nodes_.push_back({v, used + v, {}});
    nodes_[node].children.push_back(child);
    grow(child, next);
  }
}

std::vector<ExponentSequence> SequenceTree::expand() const {
  std::vector<ExponentSequence> out;
  if (nodes_.empty()) return out;

  ExponentSequence path;
  const std::function<void(std::size_t)> walk = [&](std::size_t node) {
    path.push_back(nodes_[node].root);
    if (path.size() == target_.size()) {
      out.push_back(path);
    } else {
      for (std::size_t child : nodes_[node].children) walk(child);
    }
    path.pop_back();
  };
  walk(0);
  return out;
}

std::vector<std::vector<ExponentSequence>> build_sequences(
    std::span<const std::size_t> first_exponents, const PolyaProduct& product,
    const Concentration& conc) {
  if (first_exponents.size() != product.size()) {
    throw InputError("need one first-variable exponent per factor");
  }
  std::vector<std::vector<ExponentSequence>> lists;
  lists.reserve(product.size());
  for (std::size_t a = 0; a < product.size(); ++a) {
    lists.push_back(SequenceTree(product[a], first_exponents[a], conc.counts()).expand());
  }
  return lists;
}

namespace {

// Sequences of one factor, sorted lexicographically, with their multinomial
// weights.
struct WeightedSequences {
  std::vector<ExponentSequence> sequences;
  std::vector<BigCount> weights;

  WeightedSequences(std::vector<ExponentSequence> seqs, const Factor& factor)
      : sequences(std::move(seqs)) {
    std::sort(sequences.begin(), sequences.end());
    weights.reserve(sequences.size());
    std::vector<std::size_t> ks;
    for (const auto& s : sequences) {
      ks.clear();
      for (std::size_t v : s) ks.push_back(v / factor.cycle_length);
      weights.push_back(multinomial(factor.multiplicity, ks));
    }
  }

  const BigCount* find(const ExponentSequence& s) const {
    auto it = std::lower_bound(sequences.begin(), sequences.end(), s);
    if (it == sequences.end() || *it != s) return nullptr;
    return &weights[static_cast<std::size_t>(it - sequences.begin())];
  }
};

// Walks the cartesian product of the per-factor lists, abandoning a partial
// combination as soon as a column sum overshoots the target. The last
// factor's sequence is determined by the residual and looked up directly.
class Combiner {
 public:
  Combiner(std::span<const WeightedSequences* const> lists, std::span<const std::size_t> target)
      : lists_(lists), target_(target), partial_(target.size(), 0) {}

  BigCount run() {
    total_ = 0;
    if (lists_.empty()) return std::all_of(target_.begin(), target_.end(),
                                           [](std::size_t t) { return t == 0; })
                                   ? BigCount(1)
                                   : BigCount(0);
    descend(0, BigCount(1));
    return total_;
  }

 private:
  void descend(std::size_t a, const BigCount& weight) {
    const WeightedSequences& list = *lists_[a];
    if (a + 1 == lists_.size()) {
      residual_.resize(target_.size());
      for (std::size_t i = 0; i < target_.size(); ++i) residual_[i] = target_[i] - partial_[i];
      if (const BigCount* w = list.find(residual_)) total_ += weight * *w;
      return;
    }
    for (std::size_t s = 0; s < list.sequences.size(); ++s) {
      const auto& seq = list.sequences[s];
      bool fits = true;
      std::size_t i = 0;
      for (; i < target_.size(); ++i) {
        partial_[i] += seq[i];
        if (partial_[i] > target_[i]) {
          fits = false;
          ++i;
          break;
        }
      }
      if (fits) descend(a + 1, weight * list.weights[s]);
      while (i-- > 0) partial_[i] -= seq[i];
    }
  }

  std::span<const WeightedSequences* const> lists_;
  std::span<const std::size_t> target_;
  std::vector<std::size_t> partial_;
  ExponentSequence residual_;
  BigCount total_;
};

// Search over the first-variable splits of a product with at least two
// factors. Per-factor sequence lists depend only on the factor and its first
// exponent, so they are built once and shared across splits.
class CoefficientSearch {
 public:
  CoefficientSearch(const PolyaProduct& product, std::vector<std::size_t> target)
      : product_(product), target_(std::move(target)), cache_(product.size()) {
    for (std::size_t a = 0; a < product_.size(); ++a) {
      cache_[a].resize(product_[a].multiplicity + 1);
    }
    split_.resize(product_.size(), nullptr);
  }

  BigCount run() {
    total_ = 0;
    choose(0, 0);
    return total_;
  }

 private:
  const WeightedSequences& lists_for(std::size_t a, std::size_t first) {
    auto& slot = cache_[a][first / product_[a].cycle_length];
    if (!slot) {
      slot.emplace(SequenceTree(product_[a], first, target_).expand(), product_[a]);
    }
    return *slot;
  }

  // Picks factor a's exponent on x_1 given `used` already spent across
  // factors 0..a-1; splits are visited in lexicographic order.
  void choose(std::size_t a, std::size_t used) {
    const Factor& f = product_[a];
    const std::size_t budget = target_[0] - used;
    if (a + 1 == product_.size()) {
      if (budget % f.cycle_length != 0 || budget > f.degree()) return;
      const auto& lists = lists_for(a, budget);
      if (lists.sequences.empty()) return;
      split_[a] = &lists;
      total_ += Combiner(split_, target_).run();
      return;
    }
    const std::size_t limit = std::min(budget, f.degree());
    for (std::size_t v = 0; v <= limit; v += f.cycle_length) {
      const auto& lists = lists_for(a, v);
      if (lists.sequences.empty()) continue;
      split_[a] = &lists;
      choose(a + 1, used + v);
    }
  }

  const PolyaProduct& product_;
  std::vector<std::size_t> target_;
  std::vector<std::vector<std::optional<WeightedSequences>>> cache_;
  std::vector<const WeightedSequences*> split_;
  BigCount total_;
};

}  // namespace

BigCount sum_sequences(std::span<const std::vector<ExponentSequence>> sequences,
                       const PolyaProduct& product, const Concentration& conc) {
  if (sequences.size() != product.size()) {
    throw InputError("need one sequence list per factor");
  }
  std::vector<WeightedSequences> weighted;
  weighted.reserve(sequences.size());
  for (std::size_t a = 0; a < sequences.size(); ++a) {
    for (const auto& s : sequences[a]) {
      if (s.size() != conc.colors()) throw InputError("sequence length differs from color count");
    }
    weighted.emplace_back(sequences[a], product[a]);
  }
  std::vector<const WeightedSequences*> lists;
  for (const auto& w : weighted) lists.push_back(&w);
  return Combiner(lists, conc.counts()).run();
}

BigCount coefficient_for_product(const PolyaProduct& product, const Concentration& conc) {
  if (conc.total() != product.degree()) {
    throw InputError("concentration sums to " + std::to_string(conc.total()) +
                     " but the product has degree " + std::to_string(product.degree()));
  }
  // Each factor is symmetric in the variables, so zero counts can be dropped
  // and the rest sorted descending; a large T_1 leaves few first-variable splits.
  std::vector<std::size_t> target;
  for (std::size_t c : conc.counts()) {
    if (c != 0) target.push_back(c);
  }
  std::sort(target.begin(), target.end(), std::greater<>());

  if (target.size() <= 1) return 1;
  if (product.size() == 1) {
    const Factor& f = product[0];
    std::vector<std::size_t> ks;
    ks.reserve(target.size());
    for (std::size_t t : target) {
      if (t % f.cycle_length != 0) return 0;
      ks.push_back(t / f.cycle_length);
    }
    return multinomial(f.multiplicity, ks);
  }
  return CoefficientSearch(product, std::move(target)).run();
}

PolyaTally polya_tally(const WeightedProducts& products, std::uint64_t group_order,
                       const Concentration& conc, const CountOptions& options) {
  if (group_order == 0) throw InputError("group has no elements");
  if (products.total() != group_order) {
    throw ConsistencyError("product multiplicities do not add up to the group order");
  }

  std::vector<std::pair<const PolyaProduct*, std::uint64_t>> work;
  work.reserve(products.entries.size());
  for (const auto& [product, count] : products.entries) {
    if (product.degree() != conc.total()) {
      throw InputError("concentration sums to " + std::to_string(conc.total()) +
                       " but the group acts on " + std::to_string(product.degree()) +
                       " elements");
    }
    work.emplace_back(&product, count);
  }

  std::vector<BigCount> coefficients(work.size());
  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(work.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < work.size(); ++i) {
      coefficients[i] = coefficient_for_product(*work[i].first, conc);
    }
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < work.size(); i += workers) {
              coefficients[i] = coefficient_for_product(*work[i].first, conc);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  PolyaTally tally;
  tally.group_order = group_order;
  for (std::size_t i = 0; i < work.size(); ++i) {
    tally.coefficient_sum += coefficients[i] * work[i].second;
  }
  BigCount remainder;
  boost::multiprecision::divide_qr(tally.coefficient_sum, BigCount(group_order), tally.count,
                                   remainder);
  if (remainder != 0) {
    throw ConsistencyError("coefficient sum " + to_decimal(tally.coefficient_sum) +
                           " is not divisible by the group order " +
                           std::to_string(group_order) + "; input is not a group");
  }
  return tally;
}

PolyaTally polya_tally(const Group& g, const Concentration& conc, const CountOptions& options) {
  if (conc.total() != g.set_size()) {
    throw InputError("concentration sums to " + std::to_string(conc.total()) +
                     " but the group acts on " + std::to_string(g.set_size()) + " elements");
  }
  return polya_tally(dedupe_products(g), g.order(), conc, options);
}

BigCount polya_count(const Group& g, const Concentration& conc, const CountOptions& options) {
  return polya_tally(g, conc, options).count;
}

}  // namespace polya
