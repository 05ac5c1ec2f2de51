#include "lucasbt/quadfield.hpp"

#include <stdexcept>
#include <utility>

#include "lucasbt/errors.hpp"

namespace lucasbt {

namespace {

void require_same_field(const QuadElement& x, const QuadElement& y) {
    if (x.D() != y.D())
        throw std::invalid_argument("elements of different quadratic fields cannot mix");
}

Rational rational_int(long v) {
    return Rational(v);
}

// The element must be rational with an integral value; anything else is
// an arithmetic bug in the caller.
Integer extract_integer(const QuadElement& x, const char* context) {
    if (x.b() != 0)
        throw InternalInconsistencyError(std::string(context) + ": irrational part is nonzero");
    if (x.a().get_den() != 1)
        throw InternalInconsistencyError(std::string(context) + ": value is not an integer");
    return x.a().get_num();
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

QuadElement::QuadElement(Rational a, Rational b, Integer D)
    : a_(std::move(a)), b_(std::move(b)), D_(std::move(D)) {
    if (D_ <= 0)
        throw std::invalid_argument("D must be positive");
    if (mpz_perfect_square_p(D_.get_mpz_t()))
        throw std::invalid_argument("D must not be a perfect square");
}

QuadElement quad_add(const QuadElement& x, const QuadElement& y) {
    require_same_field(x, y);
    return {x.a() + y.a(), x.b() + y.b(), x.D()};
}

QuadElement quad_sub(const QuadElement& x, const QuadElement& y) {
    require_same_field(x, y);
    return {x.a() - y.a(), x.b() - y.b(), x.D()};
}

QuadElement quad_neg(const QuadElement& x) {
    return {-x.a(), -x.b(), x.D()};
}

QuadElement quad_mul(const QuadElement& x, const QuadElement& y) {
    require_same_field(x, y);
    Rational a = x.a() * y.a() + x.b() * y.b() * Rational(x.D());
    Rational b = x.a() * y.b() + x.b() * y.a();
    return {std::move(a), std::move(b), x.D()};
}

QuadElement quad_pow(const QuadElement& x, std::uint64_t n) {
    QuadElement result(rational_int(1), rational_int(0), x.D());
    QuadElement base = x;
    while (n > 0) {
        if (n & 1)
            result = quad_mul(result, base);
        base = quad_mul(base, base);
        n >>= 1;
    }
    return result;
}

QuadElement conj(const QuadElement& x) {
    return {x.a(), -x.b(), x.D()};
}

Rational norm(const QuadElement& x) {
    return x.a() * x.a() - x.b() * x.b() * Rational(x.D());
}

std::pair<QuadElement, QuadElement> char_roots(const TransformParams& params) {
    Integer D = params.disc();
    Rational half_trace = make_rational(params.trace(), 2);
    Rational half = make_rational(1, 2);
    QuadElement lambda1(half_trace, half, D);
    QuadElement lambda2(half_trace, -half, D);

    QuadElement sum = quad_add(lambda1, lambda2);
    if (extract_integer(sum, "char_roots sum") != params.trace())
        throw InternalInconsistencyError("char_roots: root sum differs from trace");
    QuadElement product = quad_mul(lambda1, lambda2);
    if (extract_integer(product, "char_roots product") != params.det())
        throw InternalInconsistencyError("char_roots: root product differs from determinant");

    return {std::move(lambda1), std::move(lambda2)};
}

Integer binet_term(const TransformParams& params, std::uint64_t n) {
    auto [lambda1, lambda2] = char_roots(params);
    QuadElement value = quad_add(quad_pow(lambda1, n), quad_pow(lambda2, n));
    return extract_integer(value, "binet_term");
}

Integer binet_fibonacci_term(const TransformParams& params, std::uint64_t n) {
    auto [lambda1, lambda2] = char_roots(params);
    QuadElement diff = quad_sub(quad_pow(lambda1, n), quad_pow(lambda2, n));
    // lambda1 - lambda2 = sqrt(D), so the quotient is diff.b() + the
    // rational part of diff over sqrt(D); the latter must vanish.
    if (diff.a() != 0)
        throw InternalInconsistencyError("binet_fibonacci_term: rational part is nonzero");
    if (diff.b().get_den() != 1)
        throw InternalInconsistencyError("binet_fibonacci_term: value is not an integer");
    return diff.b().get_num();
}

} // namespace lucasbt
