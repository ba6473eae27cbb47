#include <zaremba/continuant.hpp>

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <limits>
#include <ostream>
#include <utility>

namespace zaremba {

namespace {

void validate_elements(const std::vector<std::int64_t>& elems) {
  for (std::int64_t e : elems) {
    if (e < 1) {
      throw invalid_argument_error(
          "partial quotient " + std::to_string(e) + " is < 1");
    }
  }
}

}  // namespace

PartialQuotients::PartialQuotients(std::initializer_list<std::int64_t> init)
    : elems_(init) {
  validate_elements(elems_);
}

PartialQuotients::PartialQuotients(std::vector<std::int64_t> elems)
    : elems_(std::move(elems)) {
  validate_elements(elems_);
}

std::strong_ordering operator<=>(const PartialQuotients& x,
                                 const PartialQuotients& y) {
  return std::lexicographical_compare_three_way(
      x.elems_.begin(), x.elems_.end(), y.elems_.begin(), y.elems_.end());
}

std::ostream& operator<<(std::ostream& os, const PartialQuotients& u) {
  os << '<';
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) os << ", ";
    os << u[i];
  }
  return os << '>';
}

Fraction::Fraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den <= 0 || num < 0) {
    throw invalid_argument_error("fraction requires num >= 0 and den >= 1");
  }
  if (num == 0) {
    den = 1;
    return;
  }
  Int g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.num << '/' << f.den;
}

Int continuant(const PartialQuotients& u) {
  Int prev = 0;  // K_{-1}
  Int cur = 1;   // K_0
  for (std::int64_t a : u.elements()) {
    prev += a * cur;  // K_j = a_j * K_{j-1} + K_{j-2}
    std::swap(prev, cur);
  }
  return cur;
}

Int continuant_det(const PartialQuotients& u) {
  const std::size_t n = u.size();
  if (n == 0) {
    throw invalid_argument_error("continuant_det requires length >= 1");
  }
  // Dense copy of the tridiagonal matrix, then Bareiss fraction-free
  // elimination. Exact over Int; divisions are known to be exact.
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = u[i];
    if (i + 1 < n) {
      m[i][i + 1] = 1;
      m[i + 1][i] = -1;
    }
  }
  Int denom = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      // A zero pivot cannot occur here: leading principal minors of this
      // matrix are continuants of prefixes, all >= 1.
      throw construction_invariant_error("zero pivot in Bareiss elimination");
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / denom;
      }
      m[i][k] = 0;
    }
    denom = m[k][k];
  }
  return m[n - 1][n - 1];
}

Fraction cf_value(const PartialQuotients& u) {
  if (u.empty()) {
    throw invalid_argument_error("cf_value requires a nonempty sequence");
  }
  // Numerator <a_2..a_n> and denominator <a_1..a_n> share the recurrence;
  // run it once keeping both rows.
  Int p_prev = 0, p_cur = 0;  // numerator continuants of (a_2..a_j)
  Int q_prev = 0, q_cur = 1;  // denominator continuants of (a_1..a_j)
  bool first = true;
  for (std::int64_t a : u.elements()) {
    q_prev += a * q_cur;
    std::swap(q_prev, q_cur);
    if (first) {
      p_cur = 1;  // <empty> for the tail sequence
      first = false;
    } else {
      p_prev += a * p_cur;
      std::swap(p_prev, p_cur);
    }
  }
  return Fraction(p_cur, q_cur);
}

PartialQuotients cf_expand(const Fraction& f) {
  if (f.num <= 0 || f.num >= f.den) {
    throw invalid_argument_error(
        "cf_expand requires 0 < num < den (got " + f.num.str() + "/" +
        f.den.str() + ")");
  }
  std::vector<std::int64_t> out;
  Int a = f.den, b = f.num;  // expand b/a
  while (b != 0) {
    Int q = a / b;
    if (q > std::numeric_limits<std::int64_t>::max()) {
      throw invalid_argument_error(
          "partial quotient " + q.str() + " does not fit in int64");
    }
    out.push_back(static_cast<std::int64_t>(q));
    a -= q * b;
    std::swap(a, b);
  }
  // Euclid on 0 < num < den always terminates with final quotient >= 2,
  // so the expansion is canonical as produced.
  return PartialQuotients(std::move(out));
}

PartialQuotients normalize_leading_one(const PartialQuotients& u) {
  if (u.size() < 2) {
    throw invalid_argument_error(
        "normalize_leading_one requires length >= 2");
  }
  if (u.front() != 1) {
    throw invalid_argument_error(
        "normalize_leading_one requires the first element to be 1");
  }
  std::vector<std::int64_t> out(u.elements().begin() + 1, u.elements().end());
  out.front() += 1;
  return PartialQuotients(std::move(out));
}

PartialQuotients reverse(const PartialQuotients& u) {
  std::vector<std::int64_t> out(u.elements().rbegin(), u.elements().rend());
  return PartialQuotients(std::move(out));
}

}  // namespace zaremba
