#include "lucasbt/recurrence.hpp"

#include <stdexcept>
#include <utility>

namespace lucasbt {

namespace {

// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
    Integer a, b, c, d;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat_mul_mod(const Mat2& x, const Mat2& y, const Integer& m) {
    Mat2 z = mat_mul(x, y);
    mpz_mod(z.a.get_mpz_t(), z.a.get_mpz_t(), m.get_mpz_t());
    mpz_mod(z.b.get_mpz_t(), z.b.get_mpz_t(), m.get_mpz_t());
    mpz_mod(z.c.get_mpz_t(), z.c.get_mpz_t(), m.get_mpz_t());
    mpz_mod(z.d.get_mpz_t(), z.d.get_mpz_t(), m.get_mpz_t());
    return z;
}

// Binary powering of the companion matrix [[p, q], [1, 0]].  The bottom
// row of the n-th power gives x_n = c*x1 + d*x0, which also covers n = 0
// through the identity matrix.
template <typename Mul>
Mat2 companion_pow(const Integer& p, const Integer& q, std::uint64_t n, Mul mul) {
    Mat2 result{1, 0, 0, 1};
    Mat2 base{p, q, 1, 0};
    while (n > 0) {
        if (n & 1)
            result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

} // namespace

Modulus::Modulus(Integer m) : m_(std::move(m)) {
    if (m_ < 2)
        throw std::invalid_argument("modulus must be at least 2");
}

SequenceSpec k_lucas_spec(std::int64_t k) {
    if (k == 0)
        throw std::invalid_argument("k must be nonzero");
    return {Integer(k), Integer(1), Integer(2), Integer(k)};
}

SequenceSpec k_fibonacci_spec(std::int64_t k) {
    if (k == 0)
        throw std::invalid_argument("k must be nonzero");
    return {Integer(k), Integer(1), Integer(0), Integer(1)};
}

SequenceSpec lucas_spec() { return k_lucas_spec(1); }

SequenceSpec pell_lucas_spec() { return k_lucas_spec(2); }

SequenceSpec pell_spec() { return k_fibonacci_spec(2); }

std::vector<Integer> terms(const SequenceSpec& spec, std::size_t count) {
    std::vector<Integer> out;
    out.reserve(count);
    if (count > 0)
        out.push_back(spec.x0);
    if (count > 1)
        out.push_back(spec.x1);
    for (std::size_t i = 2; i < count; ++i)
        out.push_back(spec.p * out[i - 1] + spec.q * out[i - 2]);
    return out;
}

Integer term_at(const SequenceSpec& spec, std::uint64_t n) {
    Mat2 m = companion_pow(spec.p, spec.q, n, mat_mul);
    return m.c * spec.x1 + m.d * spec.x0;
}

Integer term_at_iterative(const SequenceSpec& spec, std::uint64_t n) {
    if (n == 0)
        return spec.x0;
    Integer prev = spec.x0;
    Integer curr = spec.x1;
    for (std::uint64_t i = 1; i < n; ++i) {
        Integer next = spec.p * curr + spec.q * prev;
        prev = std::move(curr);
        curr = std::move(next);
    }
    return curr;
}

Integer term_at_mod(const SequenceSpec& spec, std::uint64_t n, const Modulus& mod) {
    const Integer& m = mod.value();
    Mat2 p = companion_pow(spec.p, spec.q, n,
                           [&m](const Mat2& x, const Mat2& y) { return mat_mul_mod(x, y, m); });
    Integer result = p.c * spec.x1 + p.d * spec.x0;
    mpz_mod(result.get_mpz_t(), result.get_mpz_t(), m.get_mpz_t());
    return result;
}

Integer term_at_mod_iterative(const SequenceSpec& spec, std::uint64_t n, const Modulus& mod) {
    const Integer& m = mod.value();
    auto reduce = [&m](Integer v) {
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        return v;
    };
    if (n == 0)
        return reduce(spec.x0);
    Integer prev = reduce(spec.x0);
    Integer curr = reduce(spec.x1);
    for (std::uint64_t i = 1; i < n; ++i) {
        Integer next = reduce(spec.p * curr + spec.q * prev);
        prev = std::move(curr);
        curr = std::move(next);
    }
    return curr;
}

} // namespace lucasbt
