#ifndef LUCASBT_TRANSFORM_HPP
#define LUCASBT_TRANSFORM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lucasbt/recurrence.hpp"

namespace lucasbt {

// Coefficients of the order-two recurrence satisfied by the r-fold
// binomial transform of a weight-k generalized Lucas or Fibonacci
// sequence:
//
//   b_{n+1} = trace * b_n - det * b_{n-1}
//
// with trace = 2r + k and det = r^2 + kr - 1.  The discriminant
// trace^2 - 4*det collapses to k^2 + 4, independent of r: iterating the
// transform shifts both characteristic roots by 1 and leaves their
// difference alone.
class TransformParams {
public:
    TransformParams(std::int64_t k, std::uint64_t r);

    std::int64_t k() const { return k_; }
    std::uint64_t r() const { return r_; }

    Integer trace() const;
    Integer det() const;
    Integer disc() const;

private:
    std::int64_t k_;
    std::uint64_t r_;
};

// b_n = sum_{i=0..n} C(n,i) x_i for each n < xs.size().
std::vector<Integer> binomial_transform(std::span<const Integer> xs);

// binomial_transform applied r times (r = 0 copies the input).
std::vector<Integer> iterate_transform(std::vector<Integer> xs, std::uint64_t r);

// Recurrence spec of the r-fold transform of the weight-k Lucas sequence:
// p = trace, q = -det, seeds 2 and 2r + k.
SequenceSpec iterated_lucas_spec(const TransformParams& params);

// Same for the weight-k Fibonacci sequence: seeds 0 and 1.
SequenceSpec iterated_fibonacci_spec(const TransformParams& params);

// Next term of an r-fold transform from the (r-1)-fold one:
//
//   b^{(r)}_{n+1} = b^{(r)}_n + sum_{j=0..n} C(n,j) b^{(r-1)}_{j+1}
//
// `curr` holds b^{(r)}_0.. with size > n, `prev` holds b^{(r-1)}_0.. with
// size > n+1.  Requires r >= 1 for meaning; the arguments carry no r, so
// the caller owns that precondition.
Integer lemma_step(std::span<const Integer> curr, std::span<const Integer> prev, std::size_t n);

} // namespace lucasbt

#endif
