#ifndef ZAREMBA_CENSUS_HPP
#define ZAREMBA_CENSUS_HPP

#include <zaremba/continuant.hpp>
#include <zaremba/int_types.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace zaremba {

// Whether a census counts raw sequences or only canonical continued-fraction
// representatives (last element >= 2; the single sequence (1) is canonical).
enum class CountMode { sequences, fractions };

struct CensusQuery {
  Int target;                // continuant value to hit, >= 1
  std::int64_t bound = 2;    // elements are strictly below this bound, >= 2
  CountMode mode = CountMode::sequences;
  std::uint64_t node_budget = 1'000'000'000;
  int workers = 1;
};

struct CountResult {
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;   // DFS nodes visited (prefixes with continuant <= target)
  std::int64_t millis = 0;   // wall clock; excluded from deterministic payloads
  bool exhaustive = true;
};

// All nonempty sequences u with elements in [1, bound) and <u> == target,
// in lexicographic order. Deterministic: independent of worker count.
// Throws budget_exceeded_error when the node budget runs out.
std::vector<PartialQuotients> enumerate(const CensusQuery& q);

// Counting-only variant of enumerate (same tree walk, no storage).
CountResult count_census(const CensusQuery& q);

// f(a^m, N): number of sequences with elements in [1, N) whose continuant is
// a^m, in the requested mode. Requires a >= 2, m >= 1, N >= 2.
CountResult count_f(std::int64_t a, int m, std::int64_t bound,
                        CountMode mode = CountMode::sequences,
                        std::uint64_t node_budget = 1'000'000'000,
                        int workers = 1);

struct ZarembaWitness {
  Int numerator;            // smallest c with the property below
  PartialQuotients expansion;
};

// Smallest c in [1, d) coprime to d whose expansion c/d = [a_1, ..., a_n]
// has every partial quotient < bound; absent if no such c exists.
// Requires d >= 2, bound >= 2.
std::optional<ZarembaWitness> zaremba_witness(const Int& d,
                                              std::int64_t bound);

// First sequence in descending element order with continuant == target,
// elements in [1, bound), and both endpoints outside {1, bound-1}.
// The deterministic seed-search policy of the witness constructions.
std::optional<PartialQuotients> find_endpoint_constrained(
    const Int& target, std::int64_t bound,
    std::uint64_t node_budget = 1'000'000'000);

}  // namespace zaremba

#endif  // ZAREMBA_CENSUS_HPP
