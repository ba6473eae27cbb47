#ifndef ZAREMBA_SPECTRAL_HPP
#define ZAREMBA_SPECTRAL_HPP

#include <zaremba/int_types.hpp>

#include <string>
#include <vector>

namespace zaremba {

// Small dense exact-integer matrix (n x n, n <= 3 in practice).
using Matrix = std::vector<std::vector<Int>>;

Matrix mat_identity(std::size_t n);
Matrix mat_mul(const Matrix& x, const Matrix& y);
Matrix mat_add(const Matrix& x, const Matrix& y);
Matrix mat_scale(const Matrix& x, const Int& c);
Matrix mat_pow(Matrix base, unsigned e);
std::vector<Int> mat_apply(const Matrix& m, const std::vector<Int>& v);
Int dot(const std::vector<Int>& x, const std::vector<Int>& y);
// row * M * col for a row vector, matrix and column vector.
Int sandwich(const std::vector<Int>& row, const Matrix& m,
             const std::vector<Int>& col);
// Sum of all entries of M (= ones * M * ones).
Int entry_sum(const Matrix& m);

// Coefficients of det(x*I - M), ascending degree, exact (n <= 3).
std::vector<Int> char_poly(const Matrix& m);

// 1/10^k as an exact rational, the default bisection widths.
inline Rational pow10_inv(unsigned k) {
  return Rational(Int(1), ipow(Int(10), k));
}

// One of the seven catalogued characteristic polynomials P_s, stored with
// ascending integer coefficients (monic).
//   case 1 (s == 0 mod 8, s >= 8):  x^3 - s x^2 - s x - s
//   case 2 (s == 2 mod 8, s >= 10): x^3 - (s+2) x^2 + (s+2) x - (s-2)
//   case 3 (s == 4 mod 8, s >= 12): x^3 - (s+2) x^2 + s x + (s+4)
//   case 4 (s == 6 mod 8, s >= 6):  x^3 - s x^2 - (s+2) x + (s+2)
//   case 5 (s == 4):                x^2 - 4 x - 4
//   case 6 (s == 2):                x - 2
//   case 7 (odd s >= 3):            x - (s+1)
struct CasePolynomial {
  int case_id = 0;
  int s = 0;
  std::vector<Int> coeffs;
};

// Dispatch by s (even s >= 6 by residue mod 8; s == 4 and s == 2 special;
// odd s >= 3 linear). Throws invalid_argument_error for s < 2.
CasePolynomial polynomial_Ps(int s);

// A specific case's formula evaluated at s, even when s is outside that
// case's residue class (used to compare a stated polynomial against the
// applicable one). case_id in [1, 7].
CasePolynomial case_polynomial_for(int case_id, int s);

// The transfer matrix of the doubling estimate for even s >= 4; `source`
// names the catalog entry it instantiates (s == 4 -> "(22)", s == 6 ->
// "(26)", s == 2 mod 4 -> "(13)", s == 0 mod 4 -> "(20)"). The growth chain
// uses the doubled matrix 2*entries. Odd s and s == 2 have no matrix case
// and throw not_applicable_error.
struct CaseMatrix {
  int s = 0;
  std::string source;
  Matrix entries;
};

CaseMatrix case_matrix(int s);

// True iff char_poly(2 * case_matrix(s)) equals polynomial_Ps(s) exactly.
bool char_poly_check(int s);

// A certified real-root enclosure: the exact rational bracket [lo, hi]
// contains the root, lambda is the midpoint, residual = |p(lambda)|.
struct SpectralResult {
  Rational lo;
  Rational hi;
  double lambda = 0.0;
  double residual = 0.0;
};

// Largest real root of p: integer sign scan on [0, s+2] (rightmost sign
// change or exact integer hit), then bisection to the requested width.
// Degree-1 polynomials are solved exactly (lo == hi).
SpectralResult largest_root(const CasePolynomial& p,
                            const Rational& width = pow10_inv(12));

// Perron root of a nonnegative integer matrix, via its own characteristic
// polynomial with the row-sum bracket [min row sum, max row sum + 1]. The
// bracket signs are verified at runtime (bracketing_error on failure).
SpectralResult largest_eigenvalue(const Matrix& m,
                                  const Rational& width = pow10_inv(12));

// The accelerated five-step block for s == 6: fifth power of the case
// matrix plus the correction with rows (0, 1, -1).
Matrix matrix_B();

// Perron root of matrix_B().
SpectralResult mu(const Rational& width = pow10_inv(12));

// Certified comparison 2 * mu^(1/5) - lambda > 756/10^7, where lambda is
// the largest root of the s == 6 case polynomial. All brackets are exact
// rationals; `holds` also requires the gap enclosure width <= 1e-9 and the
// sanity ceiling gap < 0.01.
struct GapCertificate {
  Rational lambda_lo, lambda_hi;
  Rational mu_lo, mu_hi;
  Rational root5_lo, root5_hi;  // fifth root of mu
  Rational gap_lo, gap_hi;      // 2 * root5 - lambda
  bool holds = false;
};

GapCertificate gap_check();

// Scaled residual of the second-order root expansion at even s >= 6:
//   cases 1 and 4: theta = (lambda - (s+1)) * s^2,          expected (-1, 0)
//   cases 2 and 3: theta = (lambda - (s+1) + 3/s^2 - 3/s^3) * s^4,
//                  expected (0, 3) for case 2 and (-9, -6) for case 3
// (case 3 is reported as this raw signed residual). `within` compares the
// certified theta enclosure against the expected open interval.
struct ExpansionReport {
  int case_id = 0;
  int s = 0;
  double lambda = 0.0;
  double theta = 0.0;
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  bool within = false;
  Rational theta_lo, theta_hi;
};

ExpansionReport remark1_expansion(int s);

// Residual of the refined case-3 expansion
//   lambda = s+1 - 3/s^2 + 3/s^3 - 6/s^4 - 9/s^5 - 15/s^6 + O(1/s^7)
// scaled by s^7; reported, never asserted. Requires s == 4 (mod 8), s >= 12.
struct ResidualReport {
  int s = 0;
  double scaled_residual = 0.0;
  Rational lo, hi;
};

ResidualReport remark6_residual(int s);

// For every s == 4 (mod 8) in [12, s_max]: is the case-3 root strictly the
// smallest among the four cubic-case roots evaluated at the same s (and
// below s+1)? s0 is the smallest admissible s from which the property holds
// through s_max (-1 if it fails at the last admissible s).
struct S0Row {
  int s = 0;
  std::string lambda1, lambda2, lambda3, lambda4;
  bool l3_smallest = false;
};

struct S0Report {
  int s0 = -1;
  int s_max = 0;
  bool all_hold_from_s0 = false;
  std::vector<S0Row> rows;
};

S0Report find_s0(int s_max);

}  // namespace zaremba

#endif  // ZAREMBA_SPECTRAL_HPP
