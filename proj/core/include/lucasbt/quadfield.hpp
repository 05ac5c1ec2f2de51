#ifndef LUCASBT_QUADFIELD_HPP
#define LUCASBT_QUADFIELD_HPP

#include <cstdint>
#include <utility>

#include <gmpxx.h>

#include "lucasbt/recurrence.hpp"
#include "lucasbt/transform.hpp"

namespace lucasbt {

using Rational = mpq_class;

// num/den reduced to lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

// An element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)).
// D must be positive and not a perfect square, so sqrt(D) is irrational
// and the representation (a, b) is unique.  Elements with different D
// never mix; arithmetic on mismatched D throws std::invalid_argument.
class QuadElement {
public:
    QuadElement(Rational a, Rational b, Integer D);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& D() const { return D_; }

    friend bool operator==(const QuadElement&, const QuadElement&) = default;

private:
    Rational a_;
    Rational b_;
    Integer D_;
};

QuadElement quad_add(const QuadElement& x, const QuadElement& y);
QuadElement quad_sub(const QuadElement& x, const QuadElement& y);
QuadElement quad_neg(const QuadElement& x);
QuadElement quad_mul(const QuadElement& x, const QuadElement& y);

// x^n by binary powering; n = 0 gives 1 + 0*sqrt(D).
QuadElement quad_pow(const QuadElement& x, std::uint64_t n);

inline QuadElement operator+(const QuadElement& x, const QuadElement& y) { return quad_add(x, y); }
inline QuadElement operator-(const QuadElement& x, const QuadElement& y) { return quad_sub(x, y); }
inline QuadElement operator-(const QuadElement& x) { return quad_neg(x); }
inline QuadElement operator*(const QuadElement& x, const QuadElement& y) { return quad_mul(x, y); }

// a - b*sqrt(D).
QuadElement conj(const QuadElement& x);

// x * conj(x) = a^2 - b^2*D, always rational.
Rational norm(const QuadElement& x);

// The two roots of t^2 - trace*t + det over Q(sqrt(k^2+4)):
//
//   lambda_{1,2} = ((2r + k) +- sqrt(k^2 + 4)) / 2
//
// first = root with the plus sign.  Their sum is trace and product det;
// both are checked before returning.
std::pair<QuadElement, QuadElement> char_roots(const TransformParams& params);

// n-th term of the r-fold transform of the weight-k Lucas sequence as
// lambda_1^n + lambda_2^n.  The irrational parts cancel and the rational
// part is an integer; both facts are checked.
Integer binet_term(const TransformParams& params, std::uint64_t n);

// Fibonacci counterpart (lambda_1^n - lambda_2^n) / (lambda_1 - lambda_2).
Integer binet_fibonacci_term(const TransformParams& params, std::uint64_t n);

} // namespace lucasbt

#endif
