#include <zaremba/gtable.hpp>

#include <zaremba/errors.hpp>

#include <string>

namespace zaremba {

const Int& GTable::at(int m) const {
  if (m < m_lo || m > m_max) {
    throw invalid_argument_error("g_table index " + std::to_string(m) +
                                 " outside [" + std::to_string(m_lo) + ", " +
                                 std::to_string(m_max) + "]");
  }
  return values[static_cast<std::size_t>(m)];
}

GTable growth_table_generic(int s, int m_max) {
  if (s < 2) throw invalid_argument_error("growth table needs s >= 2");
  if (m_max < 2) throw invalid_argument_error("growth table needs m_max >= 2");

  GTable t;
  t.s = s;
  t.variant = GTable::Variant::generic;
  t.m_lo = 2;
  t.m_max = m_max;
  t.values.assign(static_cast<std::size_t>(m_max) + 1, Int(0));

  for (int m = 2; m <= m_max && m <= s + 2; ++m) t.values[m] = 1;

  for (int m = s + 3; m <= m_max; ++m) {
    // First printed form: sum over inserted powers r of matching parity.
    Int by_r = 0;
    for (int r = m % 2; r <= s; r += 2) by_r += t.values[(m - r) / 2];
    by_r *= 2;

    // Second printed form: contiguous block of halved indices.
    Int by_k = 0;
    for (int k = (m - s + 1) / 2; k <= m / 2; ++k) by_k += t.values[k];
    by_k *= 2;

    if (by_r != by_k) t.forms_agree = false;
    t.values[m] = by_r;
  }
  return t;
}

GTable growth_table_s2(std::int64_t a, int m_max) {
  if (a < 2) throw invalid_argument_error("growth table needs base a >= 2");
  const int lo = (a == 2) ? 6 : 2;
  const int hi = (a == 2) ? 11 : 4;
  if (m_max < lo) {
    throw invalid_argument_error("growth table m_max is below the window");
  }

  GTable t;
  t.s = 2;
  t.a = a;
  t.variant = (a == 2) ? GTable::Variant::base_two : GTable::Variant::base_gt_two;
  t.m_lo = lo;
  t.m_max = m_max;
  t.values.assign(static_cast<std::size_t>(m_max) + 1, Int(0));

  for (int m = lo; m <= m_max && m <= hi; ++m) t.values[m] = 1;
  for (int m = hi + 1; m <= m_max; ++m) t.values[m] = 2 * t.values[m / 2];
  return t;
}

GTable g_table(int s, int m_max) {
  if (s == 2) return growth_table_s2(2, m_max);
  return growth_table_generic(s, m_max);
}

bool recurrence_forms_agree(int s, int m_max) {
  return growth_table_generic(s, m_max).forms_agree;
}

}  // namespace zaremba
