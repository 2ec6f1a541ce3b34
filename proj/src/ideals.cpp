#include "zdg/ideals.hpp"

#include <algorithm>
#include <functional>

namespace zdg {

ElementSet zero_divisors(const Semigroup& s) {
  ElementSet out = s.zero_set().with_role(SetRole::kZeroDivisors);
  const auto n = static_cast<Element>(s.order());
  for (Element x = 1; x < n; ++x) {
    for (Element y = 1; y < n; ++y) {
      if (s.product(x, y) == 0) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

ElementSet nonzero_zero_divisors(const Semigroup& s) {
  ElementSet out = zero_divisors(s);
  out.erase(0);
  return out;
}

ElementSet nilpotents(const Semigroup& s) {
  ElementSet out = s.zero_set().with_role(SetRole::kNilpotents);
  const auto n = static_cast<Element>(s.order());
  for (Element x = 1; x < n; ++x) {
    // The power sequence of x repeats within n steps, so n multiplications
    // decide whether it ever reaches zero.
    Element power = x;
    for (std::size_t step = 0; step < s.order() && power != 0; ++step) {
      power = s.product(power, x);
    }
    if (power == 0) out.insert(x);
  }
  return out;
}

bool is_reduced(const Semigroup& s) { return nilpotents(s).size() == 1; }

bool has_no_nonzero_square_zero(const Semigroup& s) {
  for (Element x = 1; x < s.order(); ++x) {
    if (s.product(x, x) == 0) return false;
  }
  return true;
}

ElementSet annihilator(const Semigroup& s, Element x) {
  ElementSet out = s.empty_set().with_role(SetRole::kAnnihilator);
  for (Element y = 0; y < s.order(); ++y) {
    if (s.product(x, y) == 0) out.insert(y);
  }
  return out;
}

std::optional<std::pair<Element, Element>> ideal_violation(const Semigroup& s,
                                                           const ElementSet& t) {
  if (t.empty()) throw EmptySet();
  for (Element x : t.members()) {
    for (Element r = 0; r < s.order(); ++r) {
      if (!t.contains(s.product(x, r))) return std::pair{x, r};
    }
  }
  return std::nullopt;
}

bool is_ideal(const Semigroup& s, const ElementSet& t) { return !ideal_violation(s, t); }

std::optional<PrimeViolation> prime_violation(const Semigroup& s, const ElementSet& p) {
  if (auto bad = ideal_violation(s, p)) {
    return PrimeViolation{PrimeViolation::Reason::kNotIdeal, bad->first, bad->second};
  }
  const auto n = static_cast<Element>(s.order());
  for (Element x = 0; x < n; ++x) {
    if (p.contains(x)) continue;
    for (Element y = x; y < n; ++y) {
      if (p.contains(y)) continue;
      bool inside = true;
      for (Element r = 0; r < n && inside; ++r) {
        inside = p.contains(s.product(s.product(x, r), y));
      }
      if (inside) return PrimeViolation{PrimeViolation::Reason::kSplitsProduct, x, y};
    }
  }
  return std::nullopt;
}

bool is_prime_ideal(const Semigroup& s, const ElementSet& p) { return !prime_violation(s, p); }

std::vector<WitnessedSet> associated_primes(const Semigroup& s) {
  std::vector<WitnessedSet> out;
  for (Element x = 1; x < s.order(); ++x) {
    ElementSet ann = annihilator(s, x);
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const WitnessedSet& w) { return w.set == ann; });
    if (!seen && is_prime_ideal(s, ann)) {
      out.push_back({x, ann.with_role(SetRole::kPrimeIdeal)});
    }
  }
  return out;
}

std::vector<Element> annihilator_witnesses(const Semigroup& s, const ElementSet& set) {
  std::vector<Element> out;
  for (Element x = 1; x < s.order(); ++x) {
    if (annihilator(s, x) == set) out.push_back(x);
  }
  return out;
}

std::vector<WitnessedSet> maximal_annihilators(const Semigroup& s) {
  std::vector<WitnessedSet> distinct;
  for (Element x = 1; x < s.order(); ++x) {
    ElementSet ann = annihilator(s, x);
    if (std::none_of(distinct.begin(), distinct.end(),
                     [&](const WitnessedSet& w) { return w.set == ann; })) {
      distinct.push_back({x, ann});
    }
  }
  std::vector<WitnessedSet> out;
  for (const auto& candidate : distinct) {
    bool dominated = std::any_of(distinct.begin(), distinct.end(), [&](const WitnessedSet& w) {
      return candidate.set.is_proper_subset_of(w.set);
    });
    if (!dominated) out.push_back(candidate);
  }
  return out;
}

std::size_t longest_annihilator_chain(const Semigroup& s) {
  std::vector<ElementSet> sets;
  for (Element x = 1; x < s.order(); ++x) {
    ElementSet ann = annihilator(s, x);
    if (std::find(sets.begin(), sets.end(), ann) == sets.end()) sets.push_back(ann);
  }
  std::sort(sets.begin(), sets.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  // chain[i]: longest chain ending at sets[i]; proper supersets come later.
  std::vector<std::size_t> chain(sets.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sets[j].is_proper_subset_of(sets[i])) chain[i] = std::max(chain[i], chain[j] + 1);
    }
    best = std::max(best, chain[i]);
  }
  return best;
}

ElementSet intersect_all(const Semigroup& s, const std::vector<ElementSet>& sets) {
  ElementSet out = s.all();
  for (const auto& t : sets) out = out & t;
  return out;
}

std::vector<ElementSet> all_prime_ideals(const Semigroup& s) {
  const std::size_t n = s.order();
  if (n > kExhaustiveOrderCap) {
    throw OrderTooLarge("exhaustive prime search supports order <= " +
                        std::to_string(kExhaustiveOrderCap));
  }
  std::vector<std::uint64_t> multiples(n);
  for (Element x = 0; x < n; ++x) multiples[x] = s.times_all(x).bits();

  std::vector<ElementSet> primes;
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  for (std::uint64_t rest = 0; rest < subsets; ++rest) {
    const std::uint64_t bits = (rest << 1) | 1U;  // every ideal contains 0
    bool closed = true;
    for (std::uint64_t m = bits; m != 0 && closed; m &= m - 1) {
      closed = (multiples[std::countr_zero(m)] & ~bits) == 0;
    }
    if (!closed) continue;
    ElementSet candidate(n, bits, SetRole::kPrimeIdeal);
    if (is_prime_ideal(s, candidate)) primes.push_back(candidate);
  }
  std::sort(primes.begin(), primes.end(), lex_less);
  return primes;
}

namespace {

std::optional<PrimeDecomposition> fast_decomposition(const Semigroup& s) {
  std::vector<ElementSet> primes;
  for (const auto& w : maximal_annihilators(s)) {
    primes.push_back(w.set.with_role(SetRole::kPrimeIdeal));
  }
  if (intersect_all(s, primes) != s.zero_set()) return std::nullopt;
  std::sort(primes.begin(), primes.end(), lex_less);

  // Dropping a prime only enlarges later intersections, so a prime kept here
  // stays necessary and one pass yields an irredundant family.
  std::vector<bool> kept(primes.size(), true);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    kept[i] = false;
    ElementSet meet = s.all();
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (kept[j]) meet = meet & primes[j];
    }
    if (meet != s.zero_set()) kept[i] = true;
  }
  PrimeDecomposition out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (kept[i]) out.primes.push_back(primes[i]);
  }
  out.minimal = true;
  return out;
}

std::optional<PrimeDecomposition> exhaustive_decomposition(const Semigroup& s) {
  const std::vector<ElementSet> primes = all_prime_ideals(s);
  if (intersect_all(s, primes) != s.zero_set()) return std::nullopt;

  // Set cover: every nonzero element must lie outside some chosen prime.
  const std::uint64_t nonzero = s.all().bits() & ~std::uint64_t{1};
  std::vector<std::size_t> chosen;
  std::function<bool(std::uint64_t, std::size_t)> cover = [&](std::uint64_t uncovered,
                                                              std::size_t budget) {
    if (uncovered == 0) return true;
    if (budget == 0) return false;
    const auto x = static_cast<Element>(std::countr_zero(uncovered));
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (primes[i].contains(x)) continue;
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      chosen.push_back(i);
      if (cover(uncovered & primes[i].bits(), budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t budget = 0; budget <= primes.size(); ++budget) {
    chosen.clear();
    if (cover(nonzero, budget)) break;
  }
  std::sort(chosen.begin(), chosen.end());
  PrimeDecomposition out;
  for (std::size_t i : chosen) out.primes.push_back(primes[i]);
  out.minimal = true;
  return out;
}

}  // namespace

std::optional<PrimeDecomposition> zero_prime_decomposition(const Semigroup& s,
                                                           DecompositionMode mode) {
  return mode == DecompositionMode::kFast ? fast_decomposition(s) : exhaustive_decomposition(s);
}

ElementSet principal_ideal(const Semigroup& s, Element x) {
  ElementSet out = s.times_all(x).with_role(SetRole::kIdeal);
  out.insert(x);
  return out;
}

std::vector<ElementSet> minimal_ideals(const Semigroup& s) {
  std::vector<ElementSet> principal;
  for (Element x = 1; x < s.order(); ++x) {
    ElementSet ideal = principal_ideal(s, x);
    if (std::find(principal.begin(), principal.end(), ideal) == principal.end()) {
      principal.push_back(ideal);
    }
  }
  std::vector<ElementSet> out;
  for (const auto& candidate : principal) {
    bool has_smaller = std::any_of(principal.begin(), principal.end(), [&](const ElementSet& o) {
      return o.is_proper_subset_of(candidate);
    });
    if (!has_smaller) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace zdg
