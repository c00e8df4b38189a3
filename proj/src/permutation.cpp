#include "polya/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "polya/errors.hpp"

namespace polya {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string describe(std::string_view text) { return "'" + std::string(text) + "'"; }

// Parses a 1-based index in [1, set_size] and returns it 0-based.
Index parse_index(std::string_view token, std::size_t set_size, std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("invalid index '" + std::string(token) + "' in permutation " +
                     describe(text));
  }
  if (value < 1 || value > set_size) {
    throw InputError("index " + std::string(token) + " out of range 1.." +
                     std::to_string(set_size) + " in permutation " + describe(text));
  }
  return static_cast<Index>(value - 1);
}

Permutation parse_cycle_notation(std::string_view text, std::size_t set_size) {
  std::vector<Index> image(set_size);
  for (std::size_t j = 0; j < set_size; ++j) image[j] = static_cast<Index>(j);
  std::vector<bool> seen(set_size, false);

  std::size_t pos = 0;
  const auto malformed = [&](const std::string& what) {
    return InputError("malformed cycle notation " + describe(text) + ": " + what +
                      " at column " + std::to_string(pos + 1));
  };

  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw malformed("expected '('");
    ++pos;

    std::vector<Index> cycle;
    bool expect_separator = false;
    bool closed = false;
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == ')') {
        if (!cycle.empty() && !expect_separator) throw malformed("dangling ','");
        closed = true;
        ++pos;
        break;
      }
      if (is_space(c)) {
        ++pos;
        continue;
      }
      if (c == ',') {
        if (!expect_separator) throw malformed("unexpected ','");
        expect_separator = false;
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
        throw malformed(std::string("unexpected character '") + c + "'");
      }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])) != 0) {
        ++end;
      }
      const Index idx = parse_index(text.substr(pos, end - pos), set_size, text);
      if (seen[idx]) {
        throw InputError("index " + std::to_string(idx + 1) + " repeated in permutation " +
                         describe(text));
      }
      seen[idx] = true;
      cycle.push_back(idx);
      expect_separator = true;
      pos = end;
    }
    if (!closed) throw malformed("unclosed '('");

    for (std::size_t i = 0; i < cycle.size(); ++i) {
      image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

Permutation parse_image_list(std::string_view text, std::size_t set_size) {
  std::vector<Index> image;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    image.push_back(parse_index(text.substr(pos, end - pos), set_size, text));
    pos = end;
  }
  if (image.size() != set_size) {
    throw InputError("image list " + describe(text) + " has " + std::to_string(image.size()) +
                     " entries, expected " + std::to_string(set_size));
  }
  return Permutation(std::move(image));
}

}  // namespace

Permutation::Permutation(std::vector<Index> image) : image_(std::move(image)) {
  if (image_.empty()) throw InputError("permutation must act on at least one element");
  std::vector<bool> hit(image_.size(), false);
  for (Index v : image_) {
    if (v >= image_.size() || hit[v]) throw InputError("permutation image is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  if (size == 0) throw InputError("permutation must act on at least one element");
  std::vector<Index> image(size);
  for (std::size_t j = 0; j < size; ++j) image[j] = static_cast<Index>(j);
  return Permutation(std::move(image), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t j = 0; j < image_.size(); ++j) {
    if (image_[j] != j) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Index> inv(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) inv[image_[j]] = static_cast<Index>(j);
  return Permutation(std::move(inv), Unchecked{});
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Index v : p.image()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw InputError("cannot compose permutations of sizes " + std::to_string(p.size()) +
                     " and " + std::to_string(q.size()));
  }
  std::vector<Index> out(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) out[j] = p.image_[q.image_[j]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation parse_permutation(std::string_view text, std::size_t set_size) {
  if (set_size == 0) throw InputError("set size must be at least 1");
  if (text.find('(') != std::string_view::npos || text.find(')') != std::string_view::npos) {
    return parse_cycle_notation(text, set_size);
  }
  return parse_image_list(text, set_size);
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> visited(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (visited[start] || p[start] == start) continue;
    out += '(';
    std::size_t j = start;
    bool first = true;
    while (!visited[j]) {
      visited[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

CycleStructure::CycleStructure(std::vector<CycleClass> classes) : classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].length == 0 || classes_[i].count == 0) {
      throw InputError("cycle lengths and multiplicities must be positive");
    }
    for (std::size_t k = 0; k < i; ++k) {
      if (classes_[k].length == classes_[i].length) {
        throw InputError("cycle structure lists length " + std::to_string(classes_[i].length) +
                         " twice");
      }
    }
  }
}

std::size_t CycleStructure::set_size() const noexcept {
  std::size_t total = 0;
  for (const auto& c : classes_) total += c.length * c.count;
  return total;
}

std::size_t CycleStructure::cycle_count() const noexcept {
  std::size_t total = 0;
  for (const auto& c : classes_) total += c.count;
  return total;
}

CycleStructure cycle_decomposition(const Permutation& p) {
  std::map<std::size_t, std::size_t> by_length;
  std::vector<bool> visited(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t j = start; !visited[j]; j = p[j]) {
      visited[j] = true;
      ++length;
    }
    ++by_length[length];
  }
  std::vector<CycleClass> classes;
  classes.reserve(by_length.size());
  for (auto [length, count] : by_length) classes.push_back({length, count});
  return CycleStructure(std::move(classes));
}

}  // namespace polya
