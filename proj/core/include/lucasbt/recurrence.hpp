#ifndef LUCASBT_RECURRENCE_HPP
#define LUCASBT_RECURRENCE_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace lucasbt {

using Integer = mpz_class;

// A second-order linear recurrence x_{n+1} = p*x_n + q*x_{n-1} together
// with its seeds x_0, x_1.  Every sequence in this library is an instance.
struct SequenceSpec {
    Integer p;
    Integer q;
    Integer x0;
    Integer x1;

    friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

// Modulus for residue arithmetic.  Construction rejects m < 2; every
// reduction result lies in [0, m-1].
class Modulus {
public:
    explicit Modulus(Integer m);

    const Integer& value() const { return m_; }

private:
    Integer m_;
};

// x_{n+1} = k*x_n + x_{n-1} with seeds 2, k.  Rejects k = 0: the
// discriminant k^2 + 4 would be a perfect square and the sequence
// degenerates (see quadfield).
SequenceSpec k_lucas_spec(std::int64_t k);

// x_{n+1} = k*x_n + x_{n-1} with seeds 0, 1.  Rejects k = 0.
SequenceSpec k_fibonacci_spec(std::int64_t k);

// Named single-parameter families: k = 1 and k = 2 specialisations.
SequenceSpec lucas_spec();
SequenceSpec pell_lucas_spec();
SequenceSpec pell_spec();

// First `count` terms x_0 .. x_{count-1} by linear iteration.
std::vector<Integer> terms(const SequenceSpec& spec, std::size_t count);

// x_n via companion-matrix binary powering; O(M(n) log n) where M is the
// cost of multiplying integers of the sizes involved.
Integer term_at(const SequenceSpec& spec, std::uint64_t n);

// x_n by linear iteration; the independent reference for term_at.
Integer term_at_iterative(const SequenceSpec& spec, std::uint64_t n);

// x_n mod m via companion-matrix powering with every intermediate reduced.
// The result is the least nonnegative residue.
Integer term_at_mod(const SequenceSpec& spec, std::uint64_t n, const Modulus& mod);

// x_n mod m by linear iteration; the independent reference for term_at_mod.
Integer term_at_mod_iterative(const SequenceSpec& spec, std::uint64_t n, const Modulus& mod);

} // namespace lucasbt

#endif
