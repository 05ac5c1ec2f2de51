#include "lucasbt/transform.hpp"

#include <stdexcept>
#include <utility>

namespace lucasbt {

TransformParams::TransformParams(std::int64_t k, std::uint64_t r) : k_(k), r_(r) {
    if (k == 0)
        throw std::invalid_argument("k must be nonzero");
}

Integer TransformParams::trace() const {
    return 2 * Integer(r_) + k_;
}

Integer TransformParams::det() const {
    Integer r(r_);
    return r * r + Integer(k_) * r - 1;
}

Integer TransformParams::disc() const {
    return Integer(k_) * k_ + 4;
}

std::vector<Integer> binomial_transform(std::span<const Integer> xs) {
    std::vector<Integer> out;
    out.reserve(xs.size());
    for (std::size_t n = 0; n < xs.size(); ++n) {
        // C(n,j+1) = C(n,j) * (n-j) / (j+1); the division is exact.
        Integer binom = 1;
        Integer acc = xs[0];
        for (std::size_t j = 0; j < n; ++j) {
            binom = binom * static_cast<unsigned long>(n - j);
            binom /= static_cast<unsigned long>(j + 1);
            acc += binom * xs[j + 1];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Integer> iterate_transform(std::vector<Integer> xs, std::uint64_t r) {
    for (std::uint64_t i = 0; i < r; ++i)
        xs = binomial_transform(xs);
    return xs;
}

SequenceSpec iterated_lucas_spec(const TransformParams& params) {
    return {params.trace(), -params.det(), Integer(2), params.trace()};
}

SequenceSpec iterated_fibonacci_spec(const TransformParams& params) {
    return {params.trace(), -params.det(), Integer(0), Integer(1)};
}

Integer lemma_step(std::span<const Integer> curr, std::span<const Integer> prev, std::size_t n) {
    if (curr.size() < n + 1)
        throw std::invalid_argument("level-r prefix must cover index n");
    if (prev.size() < n + 2)
        throw std::invalid_argument("level-(r-1) prefix must cover index n+1");
    Integer binom = 1;
    Integer acc = curr[n] + prev[1];
    for (std::size_t j = 0; j < n; ++j) {
        binom = binom * static_cast<unsigned long>(n - j);
        binom /= static_cast<unsigned long>(j + 1);
        acc += binom * prev[j + 2];
    }
    return acc;
}

} // namespace lucasbt
