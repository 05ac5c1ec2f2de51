#ifndef LUCASBT_IDENTITIES_HPP
#define LUCASBT_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lucasbt/recurrence.hpp"
#include "lucasbt/transform.hpp"

namespace lucasbt {

// Every identity the verifier knows how to check.  Each one equates the
// recurrence-generated transform terms with an independent expression.
enum class IdentityId {
    OracleLucas,      // recurrence == brute-force iterated transform (Lucas seeds)
    OracleFibonacci,  // recurrence == brute-force iterated transform (Fibonacci seeds)
    Lemma,            // step from the (r-1)-fold to the r-fold transform
    Binet,            // closed form from the characteristic roots
    Gf,               // generating-function expansion
    Sum,              // closed form for partial sums
    Relation,         // Lucas-family terms from Fibonacci-family terms
    B2ClosedForm,     // b_2 == k^2 + 2rk + 2r^2 + 2
    SpecializeR1,     // the r = 1 shapes of the above
};

const char* identity_name(IdentityId id);

// Parses the hyphenated names accepted on the command line
// ("oracle-lucas", "binet", ...).  Unknown names throw std::invalid_argument.
IdentityId identity_from_string(const std::string& name);

std::vector<IdentityId> all_identities();

// Closed integer interval.
struct IntRange {
    std::int64_t lo;
    std::int64_t hi;

    friend bool operator==(const IntRange&, const IntRange&) = default;
};

// First grid point at which an identity failed, with both sides shown.
struct Counterexample {
    IdentityId id;
    std::int64_t k;
    std::uint64_t r;
    std::uint64_t n;
    Integer expected;
    Integer actual;
};

// Outcome of sweeping one identity over a (k, r, n) grid.
struct VerificationReport {
    IdentityId id;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;
    std::optional<Counterexample> counterexample;

    bool ok() const { return failed == 0; }
};

// Knobs for verify_grid.  fault_b2 is added to the closed-form value of
// b_2 before comparing, so a nonzero value makes B2ClosedForm fail on
// every grid point; it exists to exercise failure reporting end to end.
struct VerifyOptions {
    Integer fault_b2 = 0;
};

// sum_{i=0..n-1} b_i by direct accumulation over iterated_lucas_spec.
// n = 0 is the empty sum.
Integer sum_direct(const TransformParams& params, std::uint64_t n);

// The same sum in closed form, for n >= 1:
//
//   (det * b_{n-1} - b_n - k - 2r + 2) / (det - trace + 1)
//
// Throws DegenerateDenominatorError when det - trace + 1 == 0, which
// makes 1 a characteristic root and the formula meaningless (no integer
// k != 0 with r >= 0 reaches it, but the guard keeps the contract
// honest), and InternalInconsistencyError if the division were to leave
// a remainder.  n = 0 throws std::invalid_argument.
Integer sum_closed_form(const TransformParams& params, std::uint64_t n);

// b_n of the Lucas family from the Fibonacci family:
// c_{n+1} - det * c_{n-1}.  n = 0 throws std::invalid_argument.
Integer lucas_from_fibonacci(const TransformParams& params, std::uint64_t n);

// Checks one identity at every point of the (k, r, n) grid, k != 0.
// Points where an identity does not apply (Lemma at r = 0, Sum and
// Relation at n = 0, B2ClosedForm away from n = 2, SpecializeR1 away
// from r = 1) are counted as skipped.  Stops recording at the first
// failure but keeps counting.
VerificationReport verify_grid(IdentityId id,
                               const IntRange& k_range,
                               const IntRange& r_range,
                               std::uint64_t n_max,
                               const VerifyOptions& options = {});

} // namespace lucasbt

#endif
