#include "polya/concentration.hpp"

#include <charconv>
#include <numeric>

#include "polya/errors.hpp"

namespace polya {

Concentration::Concentration(std::vector<std::size_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw InputError("concentration needs at least one color");
}

Concentration Concentration::parse(std::string_view text) {
  std::vector<std::size_t> counts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw InputError("invalid concentration '" + std::string(text) +
                       "': expected comma separated nonnegative integers");
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Concentration(std::move(counts));
}

std::size_t Concentration::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::string Concentration::join(char sep) const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(counts_[i]);
  }
  return out;
}

std::vector<Concentration> all_concentrations(std::size_t total, std::size_t colors) {
  if (colors == 0) throw InputError("need at least one color");
  std::vector<Concentration> out;
  std::vector<std::size_t> current(colors, 0);
  const auto fill = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == colors) {
      current[i] = left;
      out.emplace_back(current);
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      current[i] = c;
      self(self, i + 1, left - c);
    }
  };
  fill(fill, 0, total);
  return out;
}

}  // namespace polya
