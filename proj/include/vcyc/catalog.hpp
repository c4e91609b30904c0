#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vcyc/finite_group.hpp"

namespace vcyc::catalog {

FiniteGroup trivial();
/// Z/n, element i labelled "i".
FiniteGroup cyclic(std::size_t n);
/// Dihedral group of order 2n; element index i + n·j is r^i s^j.
FiniteGroup dihedral(std::size_t n);
/// S_n for n ≤ 5 as permutations, sorted lexicographically (identity first).
FiniteGroup symmetric(std::size_t n);
FiniteGroup quaternion();
FiniteGroup klein_four();

/// Canonical catalog names: trivial, Z2..Z12, D3..D6, S3, S4, Q8, Z2xZ2.
std::vector<std::string> names();

/// Looks up a catalog group. Accepts the canonical names plus spelling
/// variants such as "Z/3", "D_4", "Z/2xZ/2", "Z1" and the degenerate "D1",
/// "D2". Raises InvalidArgument for unknown names.
FiniteGroup by_name(std::string_view name);

/// Canonical spelling of `name`, or empty if unknown.
std::string canonical_name(std::string_view name);

}  // namespace vcyc::catalog
