#ifndef ZAREMBA_GTABLE_HPP
#define ZAREMBA_GTABLE_HPP

#include <zaremba/int_types.hpp>

#include <cstdint>

#include <vector>

namespace zaremba {

// Table of guaranteed witness-core counts g_m for one element-bound class.
// Outside [m_lo, m_max] no value is defined; at(m) is bounds-checked.
struct GTable {
  // Which recurrence built the table.
  enum class Variant { generic, base_two, base_gt_two };

  int s = 0;            // element bound exponent (elements < a^s)
  std::int64_t a = 0;   // base; meaningful for the s == 2 variants only
  Variant variant = Variant::generic;
  int m_lo = 0;         // first defined index (window start)
  int m_max = 0;
  std::vector<Int> values;  // values[m] for m in [0, m_max]; zero below m_lo
  bool forms_agree = true;  // generic: both printed recurrence forms matched

  const Int& at(int m) const;
};

// Generic table for s >= 2: window g_2 = ... = g_{s+2} = 1, then for
// m >= s+3 both printed forms of the doubling recurrence
//   g_m = 2 * sum over r == m (mod 2), 0 <= r <= s of g_{(m-r)/2}
//   g_m = 2 * sum over k in [floor((m-s+1)/2), floor(m/2)] of g_k
// evaluated independently; forms_agree records that they matched everywhere.
GTable growth_table_generic(int s, int m_max);

// The s == 2 tables: for a == 2 the window is g_6 = ... = g_11 = 1 and
// g_m = 2 * g_{floor(m/2)} from m >= 12; for a > 2 the window is
// g_2 = g_3 = g_4 = 1 and the same halving recurrence from m >= 5.
GTable growth_table_s2(std::int64_t a, int m_max);

// Canonical dispatch: s == 2 -> growth_table_s2(2, m_max) (the table the
// closed-form bounds quote), s >= 3 -> growth_table_generic(s, m_max).
GTable g_table(int s, int m_max);

// True iff the two printed recurrence forms produce identical tables.
bool recurrence_forms_agree(int s, int m_max);

}  // namespace zaremba

#endif  // ZAREMBA_GTABLE_HPP
