#include "polya/group_source.hpp"

#include <charconv>
#include <filesystem>
#include <vector>

#include "polya/errors.hpp"

namespace polya {

namespace {

std::vector<std::size_t> parse_arguments(std::string_view source, std::string_view args) {
  std::vector<std::size_t> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = args.find(',', pos);
    const std::string_view part =
        args.substr(pos, comma == std::string_view::npos ? args.npos : comma - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw InputError("bad parameter '" + std::string(part) + "' in group source '" +
                       std::string(source) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

Group parse_constructor(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("group source '" + std::string(text) +
                     "' is neither a file nor scheme:parameters");
  }
  const std::string_view scheme = text.substr(0, colon);
  const auto args = parse_arguments(text, text.substr(colon + 1));
  const auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw InputError("group source '" + std::string(text) + "' expects " +
                       std::to_string(count) + " parameter(s)");
    }
  };

  if (scheme == "dihedral" || scheme == "cyclic" || scheme == "symmetric" ||
      scheme == "trivial") {
    expect(1);
    if (scheme == "dihedral") return dihedral_group(args[0]);
    if (scheme == "cyclic") return cyclic_group(args[0]);
    if (scheme == "symmetric") return symmetric_group(args[0]);
    return trivial_group(args[0]);
  }
  if (scheme == "subsets" || scheme == "tuples") {
    expect(2);
    if (scheme == "subsets") return subset_action_group(args[0], args[1]);
    return tuple_action_group(args[0], args[1]);
  }
  throw InputError("unknown group scheme '" + std::string(scheme) + "'");
}

}  // namespace

Group parse_group_source(std::string_view text) {
  std::error_code ec;
  if (!text.empty() && std::filesystem::is_regular_file(std::filesystem::path(text), ec)) {
    return read_group_file(std::string(text));
  }

  const std::size_t star = text.find('*');
  if (star == std::string_view::npos) return parse_constructor(text);

  Group product = parse_constructor(text.substr(0, star));
  std::string_view rest = text.substr(star + 1);
  while (true) {
    const std::size_t next = rest.find('*');
    product = direct_product(product, parse_constructor(rest.substr(0, next)));
    if (next == std::string_view::npos) break;
    rest = rest.substr(next + 1);
  }
  return product;
}

}  // namespace polya
