#include <zaremba/spectral.hpp>

#include <zaremba/errors.hpp>

#include <cstddef>
#include <string>
#include <utility>

namespace zaremba {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.empty()) throw invalid_argument_error(std::string(who) + ": empty matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) {
      throw invalid_argument_error(std::string(who) + ": matrix is not square");
    }
  }
}

}  // namespace

Matrix mat_identity(std::size_t n) {
  Matrix r(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
  require_square(x, "mat_mul");
  require_square(y, "mat_mul");
  const std::size_t n = x.size();
  if (y.size() != n) throw invalid_argument_error("mat_mul: size mismatch");
  Matrix r(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
    }
  }
  return r;
}

Matrix mat_add(const Matrix& x, const Matrix& y) {
  require_square(x, "mat_add");
  if (y.size() != x.size()) throw invalid_argument_error("mat_add: size mismatch");
  Matrix r = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i].size() != x.size()) {
      throw invalid_argument_error("mat_add: size mismatch");
    }
    for (std::size_t j = 0; j < x.size(); ++j) r[i][j] += y[i][j];
  }
  return r;
}

Matrix mat_scale(const Matrix& x, const Int& c) {
  Matrix r = x;
  for (auto& row : r) {
    for (auto& v : row) v *= c;
  }
  return r;
}

Matrix mat_pow(Matrix base, unsigned e) {
  require_square(base, "mat_pow");
  Matrix r = mat_identity(base.size());
  while (e) {
    if (e & 1u) r = mat_mul(r, base);
    base = mat_mul(base, base);
    e >>= 1u;
  }
  return r;
}

std::vector<Int> mat_apply(const Matrix& m, const std::vector<Int>& v) {
  require_square(m, "mat_apply");
  if (v.size() != m.size()) throw invalid_argument_error("mat_apply: size mismatch");
  std::vector<Int> r(m.size(), Int(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) r[i] += m[i][j] * v[j];
  }
  return r;
}

Int dot(const std::vector<Int>& x, const std::vector<Int>& y) {
  if (x.size() != y.size()) throw invalid_argument_error("dot: size mismatch");
  Int r = 0;
  for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * y[i];
  return r;
}

Int sandwich(const std::vector<Int>& row, const Matrix& m,
             const std::vector<Int>& col) {
  return dot(row, mat_apply(m, col));
}

Int entry_sum(const Matrix& m) {
  Int r = 0;
  for (const auto& row : m) {
    for (const auto& v : row) r += v;
  }
  return r;
}

std::vector<Int> char_poly(const Matrix& m) {
  require_square(m, "char_poly");
  const std::size_t n = m.size();
  if (n == 1) return {-m[0][0], Int(1)};
  if (n == 2) {
    const Int tr = m[0][0] + m[1][1];
    const Int det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return {det, -tr, Int(1)};
  }
  if (n == 3) {
    const Int tr = m[0][0] + m[1][1] + m[2][2];
    const Int minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
                       (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                       (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    const Int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return {-det, minors, -tr, Int(1)};
  }
  throw invalid_argument_error("char_poly: only sizes 1..3 are supported");
}

CasePolynomial polynomial_Ps(int s) {
  if (s < 2) throw invalid_argument_error("polynomial_Ps needs s >= 2");
  if (s == 2) return {6, s, {Int(-2), Int(1)}};
  if (s % 2 == 1) return {7, s, {Int(-(s + 1)), Int(1)}};
  if (s == 4) return {5, s, {Int(-4), Int(-4), Int(1)}};
  switch (s % 8) {
    case 0:
      return {1, s, {Int(-s), Int(-s), Int(-s), Int(1)}};
    case 2:
      return {2, s, {Int(-(s - 2)), Int(s + 2), Int(-(s + 2)), Int(1)}};
    case 4:
      return {3, s, {Int(s + 4), Int(s), Int(-(s + 2)), Int(1)}};
    default:  // s % 8 == 6
      return {4, s, {Int(s + 2), Int(-(s + 2)), Int(-s), Int(1)}};
  }
}

CasePolynomial case_polynomial_for(int case_id, int s) {
  switch (case_id) {
    case 1:
      if (s < 3) throw invalid_argument_error("case 1 needs s >= 3");
      return {1, s, {Int(-s), Int(-s), Int(-s), Int(1)}};
    case 2:
      if (s < 3) throw invalid_argument_error("case 2 needs s >= 3");
      return {2, s, {Int(-(s - 2)), Int(s + 2), Int(-(s + 2)), Int(1)}};
    case 3:
      if (s < 3) throw invalid_argument_error("case 3 needs s >= 3");
      return {3, s, {Int(s + 4), Int(s), Int(-(s + 2)), Int(1)}};
    case 4:
      if (s < 3) throw invalid_argument_error("case 4 needs s >= 3");
      return {4, s, {Int(s + 2), Int(-(s + 2)), Int(-s), Int(1)}};
    case 5:
      return {5, s, {Int(-4), Int(-4), Int(1)}};
    case 6:
      return {6, s, {Int(-2), Int(1)}};
    case 7:
      if (s < 3) throw invalid_argument_error("case 7 needs s >= 3");
      return {7, s, {Int(-(s + 1)), Int(1)}};
    default:
      throw invalid_argument_error("case id must lie in [1, 7]");
  }
}

CaseMatrix case_matrix(int s) {
  if (s < 4 || s % 2 == 1) {
    throw not_applicable_error("no matrix case exists for s = " +
                               std::to_string(s));
  }
  auto fl = [](int x) { return Int(x / 2); };
  auto ce = [](int x) { return Int((x + 1) / 2); };
  if (s == 4) {
    return {s, "(22)", {{Int(1), Int(2)}, {Int(1), Int(1)}}};
  }
  if (s % 4 == 2) {
    const int q = (s - 2) / 4;
    Matrix a = {{Int(q + 1), fl(q + 1), ce(q + 1)},
                {Int(q + 1), fl(q), ce(q)},
                {Int(q), fl(q + 1), ce(q + 1)}};
    return {s, s == 6 ? "(26)" : "(13)", std::move(a)};
  }
  const int q = s / 4;
  Matrix a = {{fl(q + 1), ce(q + 1), Int(q)},
              {fl(q), ce(q), Int(q + 1)},
              {fl(q), ce(q), Int(q)}};
  return {s, "(20)", std::move(a)};
}

bool char_poly_check(int s) {
  const CaseMatrix cm = case_matrix(s);
  return char_poly(mat_scale(cm.entries, Int(2))) == polynomial_Ps(s).coeffs;
}

namespace {

Rational eval_poly(const std::vector<Int>& coeffs, const Rational& x) {
  Rational r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    r = r * x + Rational(coeffs[i]);
  }
  return r;
}

int sign_of(const Rational& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

SpectralResult finish(const std::vector<Int>& coeffs, Rational lo,
                      Rational hi) {
  SpectralResult r;
  r.lo = std::move(lo);
  r.hi = std::move(hi);
  const Rational mid = (r.lo + r.hi) / 2;
  r.lambda = mid.convert_to<double>();
  Rational resid = eval_poly(coeffs, mid);
  if (resid < 0) resid = -resid;
  r.residual = resid.convert_to<double>();
  return r;
}

// Bisection on a verified bracket p(lo) < 0 < p(hi).
SpectralResult bisect(const std::vector<Int>& coeffs, Rational lo, Rational hi,
                      const Rational& width) {
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    const int sm = sign_of(eval_poly(coeffs, mid));
    if (sm == 0) return finish(coeffs, mid, mid);
    if (sm < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return finish(coeffs, std::move(lo), std::move(hi));
}

}  // namespace

SpectralResult largest_root(const CasePolynomial& p, const Rational& width) {
  if (p.coeffs.empty() || p.coeffs.back() == 0) {
    throw invalid_argument_error("largest_root: zero leading coefficient");
  }
  const std::size_t deg = p.coeffs.size() - 1;
  if (deg == 0) throw invalid_argument_error("largest_root: constant input");
  if (deg == 1) {
    // Monic linear: exact root.
    const Rational root(-p.coeffs[0], p.coeffs[1]);
    return finish(p.coeffs, root, root);
  }

  // Integer sign scan over [0, s+2], taking the rightmost event.
  const int top = p.s + 2;
  int prev_sign = sign_of(eval_poly(p.coeffs, Rational(0)));
  int exact_at = -1;
  int change_at = -1;
  if (prev_sign == 0) exact_at = 0;
  for (int x = 1; x <= top; ++x) {
    const int sx = sign_of(eval_poly(p.coeffs, Rational(x)));
    if (sx == 0) {
      exact_at = x;
    } else {
      if (prev_sign != 0 && sx != prev_sign) change_at = x - 1;
      prev_sign = sx;
    }
  }
  if (exact_at >= change_at && exact_at >= 0) {
    return finish(p.coeffs, Rational(exact_at), Rational(exact_at));
  }
  if (change_at < 0) {
    throw bracketing_error("largest_root: no sign change on [0, s+2]");
  }
  Rational lo(change_at), hi(change_at + 1);
  // Orient the bracket as p(lo) < 0 < p(hi) (flip sign if descending).
  std::vector<Int> coeffs = p.coeffs;
  if (sign_of(eval_poly(coeffs, lo)) > 0) {
    for (auto& c : coeffs) c = -c;
  }
  return bisect(coeffs, std::move(lo), std::move(hi), width);
}

SpectralResult largest_eigenvalue(const Matrix& m, const Rational& width) {
  require_square(m, "largest_eigenvalue");
  for (const auto& row : m) {
    for (const auto& v : row) {
      if (v < 0) {
        throw invalid_argument_error(
            "largest_eigenvalue: matrix must be nonnegative");
      }
    }
  }
  const std::vector<Int> coeffs = char_poly(m);
  Int min_sum, max_sum;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int s = 0;
    for (const auto& v : m[i]) s += v;
    if (i == 0 || s < min_sum) min_sum = s;
    if (i == 0 || s > max_sum) max_sum = s;
  }
  const Rational lo(min_sum), hi(max_sum + 1);
  const int slo = sign_of(eval_poly(coeffs, lo));
  if (slo == 0) return finish(coeffs, lo, lo);
  if (slo > 0) {
    throw bracketing_error(
        "largest_eigenvalue: row-sum bracket has the wrong lower sign");
  }
  if (sign_of(eval_poly(coeffs, hi)) <= 0) {
    throw bracketing_error(
        "largest_eigenvalue: row-sum bracket has the wrong upper sign");
  }
  return bisect(coeffs, lo, hi, width);
}

Matrix matrix_B() {
  const Matrix a = case_matrix(6).entries;
  Matrix b = mat_pow(a, 5);
  for (auto& row : b) {
    row[1] += 1;
    row[2] -= 1;
  }
  return b;
}

SpectralResult mu(const Rational& width) {
  return largest_eigenvalue(matrix_B(), width);
}

GapCertificate gap_check() {
  const Rational w = pow10_inv(10);

  GapCertificate g;
  const SpectralResult lam = largest_root(polynomial_Ps(6), w);
  g.lambda_lo = lam.lo;
  g.lambda_hi = lam.hi;

  const SpectralResult m = mu(pow10_inv(15));
  g.mu_lo = m.lo;
  g.mu_hi = m.hi;

  // Fifth root of mu by bisection against the certified mu bracket.
  Rational tlo = 0, thi = 1;
  while (thi * thi * thi * thi * thi <= g.mu_hi) thi *= 2;
  while (thi - tlo > w) {
    const Rational mid = (tlo + thi) / 2;
    const Rational mid5 = mid * mid * mid * mid * mid;
    if (mid5 <= g.mu_lo) {
      tlo = mid;
    } else if (mid5 >= g.mu_hi) {
      thi = mid;
    } else {
      throw bracketing_error(
          "gap_check: fifth-root bisection met the mu bracket; tighten mu");
    }
  }
  g.root5_lo = tlo;
  g.root5_hi = thi;

  g.gap_lo = 2 * g.root5_lo - g.lambda_hi;
  g.gap_hi = 2 * g.root5_hi - g.lambda_lo;

  const Rational threshold(Int(756), ipow(Int(10), 7));
  g.holds = g.gap_lo > threshold && (g.gap_hi - g.gap_lo) <= pow10_inv(9) &&
            g.gap_hi < Rational(1, 100);
  return g;
}

ExpansionReport remark1_expansion(int s) {
  if (s < 6 || s % 2 == 1) {
    throw not_applicable_error(
        "root expansions are defined for even s >= 6; got s = " +
        std::to_string(s));
  }
  const CasePolynomial p = polynomial_Ps(s);
  const Int s2 = Int(s) * s;
  const Int s4 = s2 * s2;
  // Width chosen so the scaled residual is certified to ~1e-6.
  const Rational w(Int(1), Int(1000000) * s4);
  const SpectralResult root = largest_root(p, w);

  ExpansionReport rep;
  rep.case_id = p.case_id;
  rep.s = s;
  rep.lambda = root.lambda;

  int ival_lo = 0, ival_hi = 0;
  if (p.case_id == 1 || p.case_id == 4) {
    rep.theta_lo = (root.lo - (s + 1)) * s2;
    rep.theta_hi = (root.hi - (s + 1)) * s2;
    ival_lo = -1;
    ival_hi = 0;
  } else {
    // theta = (lambda - (s+1)) * s^4 + 3 s^2 - 3 s.
    const Int shift = 3 * s2 - 3 * s;
    rep.theta_lo = (root.lo - (s + 1)) * s4 + shift;
    rep.theta_hi = (root.hi - (s + 1)) * s4 + shift;
    if (p.case_id == 2) {
      ival_lo = 0;
      ival_hi = 3;
    } else {
      ival_lo = -9;
      ival_hi = -6;
    }
  }
  rep.interval_lo = ival_lo;
  rep.interval_hi = ival_hi;
  rep.theta = ((rep.theta_lo + rep.theta_hi) / 2).convert_to<double>();
  rep.within =
      rep.theta_lo > Rational(ival_lo) && rep.theta_hi < Rational(ival_hi);
  return rep;
}

ResidualReport remark6_residual(int s) {
  if (s < 12 || s % 8 != 4) {
    throw not_applicable_error(
        "the refined expansion applies to s == 4 (mod 8), s >= 12; got s = " +
        std::to_string(s));
  }
  const CasePolynomial p = polynomial_Ps(s);
  const Int si(s);
  const Int s2 = si * si;
  const Int s3 = s2 * si;
  const Int s4 = s3 * si;
  const Int s5 = s4 * si;
  const Int s7 = s5 * s2;
  const Rational w(Int(1), Int(1000) * s7);
  const SpectralResult root = largest_root(p, w);

  // (lambda - (s+1) + 3/s^2 - 3/s^3 + 6/s^4 + 9/s^5 + 15/s^6) * s^7
  //   = (lambda - (s+1)) * s^7 + 3 s^5 - 3 s^4 + 6 s^3 + 9 s^2 + 15 s.
  const Int shift = 3 * s5 - 3 * s4 + 6 * s3 + 9 * s2 + 15 * si;
  ResidualReport rep;
  rep.s = s;
  rep.lo = (root.lo - (s + 1)) * s7 + shift;
  rep.hi = (root.hi - (s + 1)) * s7 + shift;
  rep.scaled_residual = ((rep.lo + rep.hi) / 2).convert_to<double>();
  return rep;
}

S0Report find_s0(int s_max) {
  if (s_max < 12) {
    throw invalid_argument_error("find_s0 needs s_max >= 12");
  }
  S0Report rep;
  rep.s_max = s_max;
  std::vector<bool> holds;
  for (int s = 12; s <= s_max; s += 8) {
    const Rational w(Int(1), Int(10) * ipow(Int(s), 5));
    const SpectralResult r1 = largest_root(case_polynomial_for(1, s), w);
    const SpectralResult r2 = largest_root(case_polynomial_for(2, s), w);
    const SpectralResult r3 = largest_root(case_polynomial_for(3, s), w);
    const SpectralResult r4 = largest_root(case_polynomial_for(4, s), w);
    S0Row row;
    row.s = s;
    row.lambda1 = rational_decimal((r1.lo + r1.hi) / 2, 12);
    row.lambda2 = rational_decimal((r2.lo + r2.hi) / 2, 12);
    row.lambda3 = rational_decimal((r3.lo + r3.hi) / 2, 12);
    row.lambda4 = rational_decimal((r4.lo + r4.hi) / 2, 12);
    row.l3_smallest = r3.hi < r1.lo && r3.hi < r2.lo && r3.hi < r4.lo &&
                      r3.hi < Rational(s + 1);
    holds.push_back(row.l3_smallest);
    rep.rows.push_back(std::move(row));
  }
  // Smallest admissible s from which the property holds through s_max.
  int idx = static_cast<int>(holds.size());
  while (idx > 0 && holds[static_cast<std::size_t>(idx) - 1]) --idx;
  if (idx < static_cast<int>(holds.size())) {
    rep.s0 = rep.rows[static_cast<std::size_t>(idx)].s;
    rep.all_hold_from_s0 = true;
  }
  return rep;
}

}  // namespace zaremba
