#ifndef ZAREMBA_CONTINUANT_HPP
#define ZAREMBA_CONTINUANT_HPP

#include <zaremba/errors.hpp>
#include <zaremba/int_types.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace zaremba {

// A finite sequence of partial quotients (a_1, ..., a_n), every element >= 1.
// The empty sequence is allowed and has continuant 1.
class PartialQuotients {
 public:
  PartialQuotients() = default;
  PartialQuotients(std::initializer_list<std::int64_t> init);
  explicit PartialQuotients(std::vector<std::int64_t> elems);

  const std::vector<std::int64_t>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  std::int64_t front() const { return elems_.front(); }
  std::int64_t back() const { return elems_.back(); }
  std::int64_t operator[](std::size_t i) const { return elems_[i]; }

  friend bool operator==(const PartialQuotients&,
                         const PartialQuotients&) = default;
  // Lexicographic by element list; shorter prefix sorts first.
  friend std::strong_ordering operator<=>(const PartialQuotients& x,
                                          const PartialQuotients& y);

 private:
  std::vector<std::int64_t> elems_;
};

std::ostream& operator<<(std::ostream& os, const PartialQuotients& u);

// A reduced nonnegative fraction num/den with den >= 1. Reduction happens on
// construction; equality is exact.
struct Fraction {
  Int num;
  Int den;

  Fraction() : num(0), den(1) {}
  Fraction(Int n, Int d);

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

// Continuant <a_1, ..., a_n> by the three-term recurrence
//   K_j = a_j * K_{j-1} + K_{j-2},  K_{-1} = 0, K_0 = 1.
// <> = 1, <a_1> = a_1.
Int continuant(const PartialQuotients& u);

// The same quantity as the determinant of the n x n tridiagonal matrix with
// diagonal (a_1, ..., a_n), superdiagonal 1 and subdiagonal -1, evaluated by
// fraction-free (Bareiss) elimination. Deliberately a second, independent
// evaluation route; requires n >= 1.
Int continuant_det(const PartialQuotients& u);

// Value of the continued fraction [a_1, ..., a_n] = 1/(a_1 + 1/(a_2 + ...)),
// i.e. <a_2, ..., a_n> / <a_1, ..., a_n>. Requires a nonempty sequence.
Fraction cf_value(const PartialQuotients& u);

// Continued fraction expansion of num/den with 0 < num < den, by the
// Euclidean algorithm. The result is canonical: its last element is >= 2.
// Quotients that do not fit in int64 raise invalid_argument_error.
PartialQuotients cf_expand(const Fraction& f);

// Rewrites a sequence starting with 1: (1, x, rest...) -> (x+1, rest...).
// The continuant is unchanged. Requires length >= 2 and first element 1.
PartialQuotients normalize_leading_one(const PartialQuotients& u);

// (a_1, ..., a_n) -> (a_n, ..., a_1). Continuant is unchanged.
PartialQuotients reverse(const PartialQuotients& u);

}  // namespace zaremba

#endif  // ZAREMBA_CONTINUANT_HPP
