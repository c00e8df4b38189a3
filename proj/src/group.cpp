#include "polya/group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "polya/errors.hpp"

namespace polya {

namespace {

using PermutationSet = std::unordered_set<Permutation, PermutationHash>;

std::vector<Index> iota_indices(std::size_t n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw InputError(std::string(what) + " group needs n >= 1");
}

// Calls fn(sigma) for every permutation of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_symmetric(std::size_t n, Fn&& fn) {
  auto sigma = iota_indices(n);
  do {
    fn(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

// Permutations of the labelled point set induced by S_n acting on `points`.
Group induced_action(std::size_t n, const std::vector<std::vector<Index>>& points,
                     bool sort_images) {
  std::map<std::vector<Index>, Index> label;
  for (std::size_t i = 0; i < points.size(); ++i) label.emplace(points[i], static_cast<Index>(i));

  std::vector<Permutation> elements;
  std::vector<Index> mapped;
  for_each_symmetric(n, [&](const std::vector<Index>& sigma) {
    std::vector<Index> image(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      mapped.clear();
      for (Index x : points[i]) mapped.push_back(sigma[x]);
      if (sort_images) std::sort(mapped.begin(), mapped.end());
      image[i] = label.at(mapped);
    }
    elements.emplace_back(std::move(image));
  });
  return Group(points.size(), std::move(elements));
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Group::Group(std::size_t set_size, std::vector<Permutation> elements)
    : set_size_(set_size), elements_(std::move(elements)) {
  if (set_size_ == 0) throw InputError("group must act on at least one element");
  for (const auto& p : elements_) {
    if (p.size() != set_size_) {
      throw InputError("group element acts on " + std::to_string(p.size()) +
                       " elements, expected " + std::to_string(set_size_));
    }
  }
}

Group close_group(std::span<const Permutation> generators, std::size_t cap) {
  if (generators.empty()) throw InputError("close_group needs at least one generator");
  const std::size_t n = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != n) throw InputError("generators act on sets of different sizes");
  }

  std::vector<Permutation> elements;
  PermutationSet seen;
  const auto add = [&](Permutation p) {
    if (seen.contains(p)) return;
    if (elements.size() >= cap) {
      throw GuardRailError("group closure exceeds " + std::to_string(cap) + " elements");
    }
    seen.insert(p);
    elements.push_back(std::move(p));
  };

  add(Permutation::identity(n));
  for (const auto& g : generators) add(g);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) add(compose(g, elements[i]));
  }
  return Group(n, std::move(elements));
}

Group dihedral_group(std::size_t n) {
  require_positive(n, "dihedral");
  std::vector<Permutation> elements;
  elements.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Index> image(n);
    for (std::size_t j = 0; j < n; ++j) image[j] = static_cast<Index>((j + k) % n);
    elements.emplace_back(std::move(image));
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Index> image(n);
    for (std::size_t j = 0; j < n; ++j) image[j] = static_cast<Index>((k + n - j) % n);
    elements.emplace_back(std::move(image));
  }
  return Group(n, std::move(elements));
}

Group cyclic_group(std::size_t n) {
  require_positive(n, "cyclic");
  std::vector<Permutation> elements;
  elements.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Index> image(n);
    for (std::size_t j = 0; j < n; ++j) image[j] = static_cast<Index>((j + k) % n);
    elements.emplace_back(std::move(image));
  }
  return Group(n, std::move(elements));
}

Group symmetric_group(std::size_t n) {
  require_positive(n, "symmetric");
  if (n > 10) throw InputError("symmetric group limited to n <= 10");
  std::vector<Permutation> elements;
  for_each_symmetric(n, [&](const std::vector<Index>& sigma) { elements.emplace_back(sigma); });
  return Group(n, std::move(elements));
}

Group trivial_group(std::size_t n) {
  require_positive(n, "trivial");
  return Group(n, {Permutation::identity(n)});
}

Group subset_action_group(std::size_t n, std::size_t k) {
  if (n < 2 || n > 10 || k < 1 || k >= n) {
    throw InputError("subset action needs 2 <= n <= 10 and 1 <= k < n");
  }
  std::vector<std::vector<Index>> subsets;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<Index> s;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask[j]) s.push_back(static_cast<Index>(j));
    }
    subsets.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return induced_action(n, subsets, true);
}

Group tuple_action_group(std::size_t n, std::size_t k) {
  if (n < 1 || n > 10 || k < 1 || k > n) {
    throw InputError("tuple action needs 1 <= n <= 10 and 1 <= k <= n");
  }
  std::vector<std::vector<Index>> tuples;
  std::vector<Index> current;
  std::vector<bool> used(n, false);
  const auto extend = [&](auto&& self) -> void {
    if (current.size() == k) {
      tuples.push_back(current);
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      current.push_back(static_cast<Index>(x));
      self(self);
      current.pop_back();
      used[x] = false;
    }
  };
  extend(extend);
  return induced_action(n, tuples, false);
}

Group direct_product(const Group& g, const Group& h, std::size_t cap) {
  if (g.order() != 0 && h.order() > cap / g.order()) {
    throw GuardRailError("direct product exceeds " + std::to_string(cap) + " elements");
  }
  const std::size_t m = g.set_size();
  const std::size_t n = h.set_size();
  std::vector<Permutation> elements;
  elements.reserve(g.order() * h.order());
  for (const auto& a : g) {
    for (const auto& b : h) {
      std::vector<Index> image(m * n);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          image[i * n + j] = static_cast<Index>(a[i] * n + b[j]);
        }
      }
      elements.emplace_back(std::move(image));
    }
  }
  return Group(m * n, std::move(elements));
}

GroupReport validate_group(const Group& g) {
  constexpr std::size_t kMaxListed = 5;
  GroupReport report;
  PermutationSet members;
  std::vector<const Permutation*> unique;
  for (const auto& p : g) {
    if (members.insert(p).second) {
      unique.push_back(&p);
    } else {
      if (report.distinct) report.failures.push_back("duplicate element " + format_cycles(p));
      report.distinct = false;
    }
  }
  if (!members.contains(Permutation::identity(g.set_size()))) {
    report.has_identity = false;
    report.failures.emplace_back("identity missing");
  }
  std::size_t listed = 0;
  for (const auto* a : unique) {
    for (const auto* b : unique) {
      auto ab = compose(*a, *b);
      if (members.contains(ab)) continue;
      report.closed = false;
      if (listed++ < kMaxListed) {
        report.failures.push_back("not closed: " + format_cycles(*a) + " * " + format_cycles(*b) +
                                  " = " + format_cycles(ab) + " missing");
      }
    }
  }
  return report;
}

Group read_group(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t set_size = 0;
  std::vector<Permutation> elements;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (set_size == 0) {
      auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), set_size);
      if (ec != std::errc{} || ptr != line.data() + line.size() || set_size == 0) {
        throw InputError("line " + std::to_string(line_no) + ": expected positive set size, got '" +
                         line + "'");
      }
      continue;
    }
    try {
      elements.push_back(parse_permutation(line, set_size));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (set_size == 0) throw InputError("group file has no set size line");
  if (elements.empty()) throw InputError("group file lists no permutations");
  return Group(set_size, std::move(elements));
}

Group read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  try {
    return read_group(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_group(std::ostream& out, const Group& g) {
  out << g.set_size() << '\n';
  for (const auto& p : g) out << format_cycles(p) << '\n';
}

}  // namespace polya
