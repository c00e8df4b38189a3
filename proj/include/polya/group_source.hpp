#pragma once

#include <string>
#include <string_view>

#include "polya/group.hpp"

namespace polya {

/// Resolves a group source string. Accepted forms:
///
///   dihedral:n  cyclic:n  symmetric:n  trivial:n
///   subsets:n,k   S_n acting on k-subsets
///   tuples:n,k    S_n acting on ordered k-tuples of distinct points
///   A*B           direct product of two sources acting on the product set
///   <path>        group file (see read_group)
///
/// An existing file path always wins over constructor syntax. Throws
/// InputError on unknown schemes, bad parameters, or unreadable files.
Group parse_group_source(std::string_view text);

}  // namespace polya
