#pragma once

#include <zaremba/census.hpp>
#include <zaremba/gtable.hpp>
#include <zaremba/int_types.hpp>
#include <zaremba/spectral.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zaremba {

// Number of halving steps available to the growth-table recurrence before the
// index chain falls back into the all-ones window.
struct IterationDepth {
  int n = 0;                // ceil(log2(floor((m - s + 1) / (4s + 4))))
  std::vector<int> chain;   // audit trail: i_0 > i_1 > ... down to the window
};

// Throws not_applicable_error when floor((m - s + 1) / (4s + 4)) < 1.
IterationDepth iteration_depth(int m, int s);

// One verified claim: a lower (or upper) bound for a sequence count, the
// oracle value when an exhaustive count is feasible, and the verdict.
struct BoundReport {
  std::string theorem_id;
  std::map<std::string, std::string> parameters;
  Int claimed = 0;
  std::optional<Int> oracle;
  std::string verdict;  // "holds" | "fails" | "oracle-unavailable"
  std::map<std::string, std::string> details;
};

// Power-law lower bound for f(a^m, a^s) assembled from the recurrence chain:
// doubling chains for s = 2, integer matrix powers for even s >= 4, and
// (s+1)^n for odd s.  Oracle runs only when the exhaustive count fits the
// node budget; otherwise verdict is "oracle-unavailable".
BoundReport theorem1_bound(std::int64_t a, int s, int m,
                           std::uint64_t node_budget = 100'000'000,
                           int workers = 1);

// Same bound re-parameterized by an arbitrary target ceiling N: reduces to
// theorem1_bound at s = floor(log_a N).  Reports the stated cubic's root
// next to the residue-appropriate one and flags the mismatch.
BoundReport theorem2_bound(std::int64_t a, const Int& N, int m,
                           std::uint64_t node_budget = 100'000'000,
                           int workers = 1);

// Accelerated s = 6 bound: row * (2^5 B)^t * (2A)^5 * ones with
// t = floor((n - 5) / 5).  Requires iteration_depth(m, 6) >= 10.
BoundReport theorem3_bound(int m);

// Entrywise dominance that justifies taking j = 5 in the acceleration step:
// (0,1,-1)-rows * A^(5-j) * C >= (0,1,-1)-rows * C for j in {2..5} and
// C in {B, A^5}.
bool acceleration_dominance_check();

// f(3^m, 4) >= ceil((m+1)/4) for m >= 8.
BoundReport theorem4_bound(int m, std::uint64_t node_budget = 100'000'000,
                           int workers = 1);

// f(2^(2^k - 1), 3) >= 2^k for k >= 2.
BoundReport theorem5_bound(int k, std::uint64_t node_budget = 100'000'000,
                           int workers = 1);

// One row of an upper-bound comparison: index is m (odd s) or k (s = 2, 4).
struct UpperBoundRow {
  int index = 0;
  Int g = 0;
  Int bound = 0;  // exact for s in {2,3,4,7}; display floor for s = 5
  bool holds = false;
};

// Method-ceiling checks: the growth table cannot beat the stated shape.
//   odd s : g_m <= m^(log2(s+1)) for m in [2, limit] (verdict exact even
//           when the bound itself is irrational);
//   s = 4 : g_(2^k - 1) vs 2^(k-3) (1,1) A^(k-4) col for k in [4, limit],
//           with both the (1,4) column the derivation yields (rows) and the
//           (1,2) column as printed (printed_rows);
//   s = 2 : g_(2^k - 1) == 2^(k-3) for k in [4, limit].
struct Theorem6Report {
  int s = 0;
  std::string flavor;  // "odd-power-law" | "matrix-column" | "exact-doubling"
  bool all_hold = false;
  std::vector<UpperBoundRow> rows;
  // s == 4 only: the column vector as printed, which the table refutes.
  bool printed_all_hold = false;
  std::vector<UpperBoundRow> printed_rows;
};

Theorem6Report theorem6_upper(int s, int limit);

// Exact verdict of "g <= m^(log2(s+1))" by integer power sandwiching.
bool power_law_holds(const Int& g, int m, int s);

}  // namespace zaremba
