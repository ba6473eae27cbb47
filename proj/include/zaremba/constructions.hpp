#ifndef ZAREMBA_CONSTRUCTIONS_HPP
#define ZAREMBA_CONSTRUCTIONS_HPP

#include <zaremba/continuant.hpp>
#include <zaremba/int_types.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace zaremba {

// Doubling identities: from u = (u_1..u_n) with u_n >= 2 and b >= 2, build
//   w       = (u_1..u_{n-1}, u_n - 1, 1, b - 1, u_n..u_1),   <w>  = b * <u>^2
//   w_prime = (u_1..u_{n-1}, u_n - 1, u_n + 1, u_{n-1}..u_1), <w'> = <u>^2
// (for n == 1 the surrounding runs are empty). Both identities are rechecked
// after construction; a breach throws construction_invariant_error.
std::pair<PartialQuotients, PartialQuotients> hensley_double(
    const PartialQuotients& u, const Int& b);

// Parameters of one doubling step inside the witness tree for numerator a^m
// with elements bounded by a^s: the step inserts a^r (r == 0 means the
// squared form) and consumes a parent with continuant a^((m-r)/2).
struct ConstructionParams {
  std::int64_t a = 2;  // numerator base, >= 2
  int s = 2;           // element bound exponent, >= 2
  int m = 2;           // child exponent, >= 2
  int r = 0;           // inserted power, 0 <= r <= s, r == m (mod 2)
};

// The two children of u under the doubling step p: for r != 0 the pair
// (u_1..u_n, b-1, 1, u_n - 1, u_{n-1}..u_1) and its reversal with b = a^r;
// for r == 0 the pair (u_1..u_{n-1}, u_n + 1, u_n - 1, u_{n-1}..u_1) and its
// reversal. Preconditions (each violation throws with the clause named):
// r == m (mod 2), 0 <= r <= s, <u> == a^((m-r)/2), all elements of u are
// < a^s, and the endpoints of u avoid {1, a^s - 1}. Children are verified
// to have continuant a^m, elements < a^s and endpoints outside {1, a^s - 1}.
std::vector<PartialQuotients> lemma2_children(const PartialQuotients& u,
                                              const ConstructionParams& p);

// The four endpoint variants of w (endpoints >= 2), all with the same
// continuant: w itself, (1, w_1 - 1, w_2..), (.., w_n - 1, 1) and both ends
// rewritten. For a single element the both-ends form is (1, w_1 - 2, 1) and
// requires w_1 >= 3. Variants are distinguishable by their (first == 1,
// last == 1) pattern, so distinct inputs never produce overlapping outputs.
std::vector<PartialQuotients> endpoint_variants(const PartialQuotients& w);

// Inclusive window of exponents m whose witnesses are found by direct search
// rather than by doubling, for numerator base a and element bound a^s.
std::pair<int, int> seed_window(std::int64_t a, int s);

// Persistent store of seed search results, one line per (a, s, m) triple.
// Text format:  "# seed-cache v1" header, then "a s m : e1 e2 ..." lines.
class SeedCache {
 public:
  // Missing file loads as an empty cache; malformed content throws.
  static SeedCache load(const std::string& path);
  void save(const std::string& path) const;

  std::optional<PartialQuotients> lookup(std::int64_t a, int s, int m) const;
  void store(std::int64_t a, int s, int m, const PartialQuotients& seq);
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::tuple<std::int64_t, int, int>, std::vector<std::int64_t>>
      entries_;
};

// Seeds for every m in seed_window(a, s): the first sequence found by the
// deterministic largest-element-first search with continuant a^m, elements
// < a^s and endpoints in [2, a^s - 2]. Cached entries are revalidated and
// recomputed if stale. Throws seed_not_found_error when the search proves
// no such sequence exists.
std::map<int, PartialQuotients> seed_sequences(std::int64_t a, int s,
                                               SeedCache* cache = nullptr);

struct WitnessMember {
  PartialQuotients seq;
  // Construction trace: "seed", then "|lemma2(r=R)a" or "...b" per doubling
  // step (a = plain form, b = its reversal), then "|v1".."|v3" for a
  // non-trivial endpoint variant.
  std::string provenance;
};

struct WitnessSet {
  std::int64_t a = 0;
  int s = 0;
  int m = 0;
  Int target;         // a^m
  Int element_bound;  // a^s, exclusive
  std::vector<WitnessMember> members;  // sorted by sequence, duplicates merged
};

// All witnesses for numerator a^m with elements < a^s reachable from the
// seeds by doubling steps, expanded by the four endpoint variants. Every
// member is revalidated (continuant, element range) before return.
WitnessSet generate_family(std::int64_t a, int s, int m,
                           SeedCache* cache = nullptr);

}  // namespace zaremba

#endif  // ZAREMBA_CONSTRUCTIONS_HPP
