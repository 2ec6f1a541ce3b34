#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zdg/semigroup.hpp"

namespace zdg {

/// Disjoint union of the parts with all zeros identified and every cross-part
/// product equal to 0. Index 0 is the zero, then the nonzero elements of each
/// part in order. Throws EmptyPartList for fewer than two parts.
Semigroup orthogonal_union(const std::vector<Semigroup>& parts);

/// (P(X), intersection) for an n-set X, 1 <= n <= 5. Element index is the
/// subset's bitmask, so the empty set is the zero. Throws OrderTooLarge.
Semigroup powerset_semigroup(std::size_t n);

/// Order-n semigroup with every product 0.
Semigroup null_semigroup(std::size_t n);

/// Cyclic group of order k with a zero adjoined (order k + 1).
Semigroup cyclic_group_with_zero(std::size_t k);

/// Nilpotent monogenic semigroup {0, c, c^2, ..., c^(k-1)} with c^k = 0
/// (order k). Element i is c^i.
Semigroup nilpotent_cyclic(std::size_t k);

/// Worked examples: {0,a,b,c,d} path, {0,x,y,z}, {0,a,b,c} star, and the
/// order-7 semigroup whose graph is a wheel on six vertices.
Semigroup example_path5();
Semigroup example_star_idempotent();
Semigroup example_star_nilpotent();
Semigroup example_wheel7();

/// Resolves a builtin identifier:
///   ex3.4 ex3.5 ex3.8 ex4.5 powerset:N null:N group0:K nilcyclic:K
///   ortho:ID+ID[+ID...]
/// Throws UnknownExample.
Semigroup builtin_example(std::string_view id);

/// Identifiers accepted by builtin_example, with a short description each.
std::vector<std::pair<std::string, std::string>> builtin_catalog();

}  // namespace zdg
