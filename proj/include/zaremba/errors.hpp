#ifndef ZAREMBA_ERRORS_HPP
#define ZAREMBA_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zaremba {

// Bad input to a library operation: malformed sequence, violated
// precondition, out-of-range argument. Maps to CLI exit code 1.
struct invalid_argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Query is well-formed but the operation does not apply (parameter below a
// threshold, no matrix case for this s, ...).
struct not_applicable_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exhaustive search gave up because the node budget ran out. Carries the
// partial statistics. Maps to CLI exit code 2.
struct budget_exceeded_error : std::runtime_error {
  std::uint64_t nodes;
  std::uint64_t budget;
  budget_exceeded_error(std::uint64_t nodes_, std::uint64_t budget_)
      : std::runtime_error("node budget exceeded: visited " +
                           std::to_string(nodes_) + " of " +
                           std::to_string(budget_)),
        nodes(nodes_),
        budget(budget_) {}
};

// Exhaustive seed search proved that no admissible sequence exists for the
// requested (a, s, m). Existence is expected; absence is a reportable finding.
struct seed_not_found_error : std::runtime_error {
  std::int64_t a;
  int s;
  int m;
  seed_not_found_error(std::int64_t a_, int s_, int m_)
      : std::runtime_error("no admissible seed sequence exists for a=" +
                           std::to_string(a_) + " s=" + std::to_string(s_) +
                           " m=" + std::to_string(m_)),
        a(a_),
        s(s_),
        m(m_) {}
};

// A postcondition the constructions guarantee by design failed to hold.
// Must never fire; if it does, the construction itself is wrong.
struct construction_invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Root bracketing failed: no certified sign change found.
struct bracketing_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zaremba

#endif  // ZAREMBA_ERRORS_HPP
