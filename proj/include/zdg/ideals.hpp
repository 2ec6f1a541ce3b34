#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zdg/element_set.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

/// Z(S): zero together with every x != 0 having xy = 0 for some y != 0
/// (y = x allowed).
ElementSet zero_divisors(const Semigroup& s);

/// Z(S) without the zero; the vertex set of the zero-divisor graph.
ElementSet nonzero_zero_divisors(const Semigroup& s);

/// Elements with some power equal to zero (0 included).
ElementSet nilpotents(const Semigroup& s);

/// True iff the only nilpotent element is 0.
bool is_reduced(const Semigroup& s);

/// True iff x*x != 0 for every x != 0. Equivalent to is_reduced for finite S,
/// but kept as a separate predicate so both hypotheses can be tested.
bool has_no_nonzero_square_zero(const Semigroup& s);

/// { y in S : xy = 0 }, zero and possibly x itself included.
ElementSet annihilator(const Semigroup& s, Element x);

/// Every x*r with x in t and r in S lies in t. Throws EmptySet.
bool is_ideal(const Semigroup& s, const ElementSet& t);

/// First witness (x, r) with x in t and x*r outside t, if any.
std::optional<std::pair<Element, Element>> ideal_violation(const Semigroup& s,
                                                           const ElementSet& t);

/// Ideal p such that xSy within p forces x in p or y in p. The set xSy is
/// { x*s*y : s in S }; no identity is adjoined. Throws EmptySet.
bool is_prime_ideal(const Semigroup& s, const ElementSet& p);

/// Why a set fails primality, when it does.
struct PrimeViolation {
  enum class Reason { kNotIdeal, kSplitsProduct };
  Reason reason;
  Element x = 0;  // kNotIdeal: x in p, x*y outside p.
  Element y = 0;  // kSplitsProduct: x, y outside p with xSy inside p.
};
std::optional<PrimeViolation> prime_violation(const Semigroup& s, const ElementSet& p);

/// A prime ideal together with an element witnessing it as an annihilator.
struct WitnessedSet {
  Element witness;
  ElementSet set;
};

/// Ass(S): every Ann(x), x != 0, that is a prime ideal. One entry per
/// distinct set, keeping the smallest witness; ordered by witness.
std::vector<WitnessedSet> associated_primes(const Semigroup& s);

/// All x != 0 with Ann(x) equal to the given set.
std::vector<Element> annihilator_witnesses(const Semigroup& s, const ElementSet& set);

/// Inclusion-maximal members of { Ann(x) : x != 0 }, one per distinct set,
/// smallest witness kept, ordered by witness.
std::vector<WitnessedSet> maximal_annihilators(const Semigroup& s);

/// Length of the longest strictly increasing chain Ann(x1) < Ann(x2) < ...
/// with every xi != 0. Zero when S = {0}.
std::size_t longest_annihilator_chain(const Semigroup& s);

enum class DecompositionMode { kFast, kExhaustive };

/// Zero written as an intersection of prime ideals.
struct PrimeDecomposition {
  std::vector<ElementSet> primes;  // lexicographically sorted
  bool minimal = false;
};

/// Largest order accepted by the exhaustive decomposition search.
inline constexpr std::size_t kExhaustiveOrderCap = 16;

/// Writes {0} as an intersection of prime ideals.
///
/// Fast mode intersects the maximal annihilators (all prime) and succeeds iff
/// that intersection is {0}; the family is then made irredundant by dropping
/// primes greedily in lexicographic order. Exhaustive mode enumerates every
/// prime ideal and returns a family of minimum cardinality. Returns nullopt
/// when no decomposition exists. Exhaustive mode throws OrderTooLarge above
/// kExhaustiveOrderCap.
std::optional<PrimeDecomposition> zero_prime_decomposition(const Semigroup& s,
                                                           DecompositionMode mode);

/// Every prime ideal of S. Throws OrderTooLarge above kExhaustiveOrderCap.
std::vector<ElementSet> all_prime_ideals(const Semigroup& s);

/// {x} together with Sx.
ElementSet principal_ideal(const Semigroup& s, Element x);

/// Nonzero ideals containing no strictly smaller nonzero ideal, sorted
/// lexicographically.
std::vector<ElementSet> minimal_ideals(const Semigroup& s);

/// Intersection of the sets, or the full set of S when the list is empty.
ElementSet intersect_all(const Semigroup& s, const std::vector<ElementSet>& sets);

}  // namespace zdg
