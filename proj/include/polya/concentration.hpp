#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polya {

/// Fixed number of set elements per color, (c_1, ..., c_n). Identifies the
/// target monomial x_1^c_1 ... x_n^c_n.
class Concentration {
 public:
  /// Throws InputError on an empty vector.
  explicit Concentration(std::vector<std::size_t> counts);

  /// Parses "c1,c2,...". Throws InputError on empty or non-numeric parts.
  static Concentration parse(std::string_view text);

  std::span<const std::size_t> counts() const noexcept { return counts_; }
  std::size_t colors() const noexcept { return counts_.size(); }
  std::size_t total() const noexcept;

  /// Counts joined by `sep`, e.g. "8+6+6".
  std::string join(char sep) const;

  friend bool operator==(const Concentration&, const Concentration&) = default;

 private:
  std::vector<std::size_t> counts_;
};

/// Every concentration of `total` elements over `colors` colors, zeros
/// included, in lexicographic order.
std::vector<Concentration> all_concentrations(std::size_t total, std::size_t colors);

}  // namespace polya
