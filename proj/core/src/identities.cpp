#include "lucasbt/identities.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

#include "lucasbt/errors.hpp"
#include "lucasbt/quadfield.hpp"
#include "lucasbt/series.hpp"

namespace lucasbt {

const char* identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::OracleLucas: return "oracle-lucas";
    case IdentityId::OracleFibonacci: return "oracle-fibonacci";
    case IdentityId::Lemma: return "lemma";
    case IdentityId::Binet: return "binet";
    case IdentityId::Gf: return "gf";
    case IdentityId::Sum: return "sum";
    case IdentityId::Relation: return "relation";
    case IdentityId::B2ClosedForm: return "b2-closed-form";
    case IdentityId::SpecializeR1: return "specialize-r1";
    }
    throw std::invalid_argument("unknown identity id");
}

IdentityId identity_from_string(const std::string& name) {
    for (IdentityId id : all_identities())
        if (name == identity_name(id))
            return id;
    throw std::invalid_argument("unknown identity: " + name);
}

std::vector<IdentityId> all_identities() {
    return {IdentityId::OracleLucas, IdentityId::OracleFibonacci, IdentityId::Lemma,
            IdentityId::Binet,       IdentityId::Gf,              IdentityId::Sum,
            IdentityId::Relation,    IdentityId::B2ClosedForm,    IdentityId::SpecializeR1};
}

Integer sum_direct(const TransformParams& params, std::uint64_t n) {
    std::vector<Integer> b = terms(iterated_lucas_spec(params), n);
    Integer acc = 0;
    for (const Integer& t : b)
        acc += t;
    return acc;
}

Integer sum_closed_form(const TransformParams& params, std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("partial sum closed form needs n >= 1");
    Integer den = params.det() - params.trace() + 1;
    if (den == 0)
        throw DegenerateDenominatorError(
            "partial sum closed form is invalid when 1 is a characteristic root");
    SequenceSpec spec = iterated_lucas_spec(params);
    Integer num = params.det() * term_at(spec, n - 1) - term_at(spec, n)
                  - params.k() - 2 * Integer(params.r()) + 2;
    Integer quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
                num.get_mpz_t(), den.get_mpz_t());
    if (remainder != 0)
        throw InternalInconsistencyError("partial sum closed form divided inexactly");
    return quotient;
}

Integer lucas_from_fibonacci(const TransformParams& params, std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("the transform relation needs n >= 1");
    std::vector<Integer> c = terms(iterated_fibonacci_spec(params), n + 2);
    return c[n + 1] - params.det() * c[n - 1];
}

namespace {

struct Outcome {
    enum class State { Pass, Fail, Skip };
    State state;
    Integer expected;
    Integer actual;

    static Outcome pass() { return {State::Pass, 0, 0}; }
    static Outcome skip() { return {State::Skip, 0, 0}; }
    static Outcome fail(Integer expected, Integer actual) {
        return {State::Fail, std::move(expected), std::move(actual)};
    }
};

Outcome check_equal(const Integer& expected, const Integer& actual) {
    if (expected == actual)
        return Outcome::pass();
    return Outcome::fail(expected, actual);
}

using PointChecker = std::function<Outcome(std::uint64_t)>;

// Builds the per-(k, r) checker.  Expensive shared data (term prefixes,
// brute-force transforms, expansions) is computed once here; the
// returned closure handles a single n.  In every comparison `expected`
// is the independently computed side and `actual` the closed form under
// test.
PointChecker make_checker(IdentityId id, const TransformParams& params,
                          std::uint64_t n_max, const VerifyOptions& options) {
    switch (id) {
    case IdentityId::OracleLucas: {
        std::vector<Integer> brute =
            iterate_transform(terms(k_lucas_spec(params.k()), n_max + 1), params.r());
        std::vector<Integer> closed = terms(iterated_lucas_spec(params), n_max + 1);
        return [brute = std::move(brute), closed = std::move(closed)](std::uint64_t n) {
            return check_equal(brute[n], closed[n]);
        };
    }
    case IdentityId::OracleFibonacci: {
        std::vector<Integer> brute =
            iterate_transform(terms(k_fibonacci_spec(params.k()), n_max + 1), params.r());
        std::vector<Integer> closed = terms(iterated_fibonacci_spec(params), n_max + 1);
        return [brute = std::move(brute), closed = std::move(closed)](std::uint64_t n) {
            return check_equal(brute[n], closed[n]);
        };
    }
    case IdentityId::Lemma: {
        if (params.r() == 0)
            return [](std::uint64_t) { return Outcome::skip(); };
        std::vector<Integer> curr = terms(iterated_lucas_spec(params), n_max + 2);
        std::vector<Integer> prev = terms(
            iterated_lucas_spec(TransformParams(params.k(), params.r() - 1)), n_max + 2);
        return [curr = std::move(curr), prev = std::move(prev)](std::uint64_t n) {
            return check_equal(curr[n + 1], lemma_step(curr, prev, n));
        };
    }
    case IdentityId::Binet: {
        std::vector<Integer> closed = terms(iterated_lucas_spec(params), n_max + 1);
        return [params, closed = std::move(closed)](std::uint64_t n) {
            return check_equal(closed[n], binet_term(params, n));
        };
    }
    case IdentityId::Gf: {
        std::vector<Integer> closed = terms(iterated_lucas_spec(params), n_max + 1);
        std::vector<Rational> expansion = gf_expand(params, n_max + 1);
        return [closed = std::move(closed), expansion = std::move(expansion)](std::uint64_t n) {
            return check_equal(closed[n], expansion[n].get_num());
        };
    }
    case IdentityId::Sum: {
        return [params](std::uint64_t n) {
            if (n == 0)
                return Outcome::skip();
            try {
                return check_equal(sum_direct(params, n), sum_closed_form(params, n));
            } catch (const DegenerateDenominatorError&) {
                return Outcome::skip();
            }
        };
    }
    case IdentityId::Relation: {
        std::vector<Integer> closed = terms(iterated_lucas_spec(params), n_max + 1);
        return [params, closed = std::move(closed)](std::uint64_t n) {
            if (n == 0)
                return Outcome::skip();
            return check_equal(closed[n], lucas_from_fibonacci(params, n));
        };
    }
    case IdentityId::B2ClosedForm: {
        // Spot values b_0 = 2, b_1 = trace, b_2 = k^2 + 2rk + 2r^2 + 2;
        // indices past 2 carry no claim.
        std::vector<Integer> closed = terms(iterated_lucas_spec(params), n_max + 1);
        return [params, closed = std::move(closed), fault = options.fault_b2](std::uint64_t n) {
            if (n > 2)
                return Outcome::skip();
            if (n == 0)
                return check_equal(closed[0], 2);
            if (n == 1)
                return check_equal(closed[1], params.trace());
            Integer k(params.k());
            Integer r(params.r());
            Integer b2 = k * k + 2 * r * k + 2 * r * r + 2 + fault;
            return check_equal(closed[2], b2);
        };
    }
    case IdentityId::SpecializeR1: {
        if (params.r() != 1)
            return [](std::uint64_t) { return Outcome::skip(); };
        Integer k(params.k());
        std::vector<Integer> closed = terms(iterated_lucas_spec(params), n_max + 2);
        std::vector<Integer> fib = terms(iterated_fibonacci_spec(params), n_max + 2);

        // The r = 1 generating function, built from k alone so agreement
        // with the parametric expansion is informative.
        std::size_t count = n_max + 1;
        std::vector<Rational> num(count, Rational(0));
        std::vector<Rational> den(count, Rational(0));
        num[0] = 2;
        den[0] = 1;
        if (count > 1) {
            num[1] = Rational(-(k + 2));
            den[1] = Rational(-(k + 2));
        }
        if (count > 2)
            den[2] = Rational(k);
        PowerSeries expansion =
            series_mul(PowerSeries(std::move(num)), series_inverse(PowerSeries(std::move(den))));

        return [params, k, closed = std::move(closed), fib = std::move(fib),
                expansion = std::move(expansion)](std::uint64_t n) {
            if (n == 0) {
                // n-independent shapes, counted once per (k, r).
                if (params.trace() != k + 2)
                    return Outcome::fail(k + 2, params.trace());
                if (params.det() != k)
                    return Outcome::fail(k, params.det());
                // lambda_1 == (k + 2 + sqrt(k^2+4)) / 2, compared
                // cross-multiplied so both report sides stay integral.
                auto [lambda1, lambda2] = char_roots(params);
                Rational a = lambda1.a();
                Rational b = lambda1.b();
                if (2 * a.get_num() != (k + 2) * a.get_den())
                    return Outcome::fail((k + 2) * a.get_den(), 2 * a.get_num());
                if (2 * b.get_num() != b.get_den())
                    return Outcome::fail(b.get_den(), 2 * b.get_num());
                return check_equal(closed[0], expansion[0].get_num());
            }
            // Expansion of the k-only generating function.
            Outcome gf = check_equal(closed[n], expansion[n].get_num());
            if (gf.state != Outcome::State::Pass)
                return gf;
            // Partial sum: sum_{i<n} b_i == b_n - k b_{n-1} + k.
            Outcome sum = check_equal(sum_direct(params, n),
                                      closed[n] - k * closed[n - 1] + k);
            if (sum.state != Outcome::State::Pass)
                return sum;
            // Relation: b_n == c_{n+1} - k c_{n-1}.
            return check_equal(closed[n], fib[n + 1] - k * fib[n - 1]);
        };
    }
    }
    throw std::invalid_argument("unknown identity id");
}

} // namespace

VerificationReport verify_grid(IdentityId id, const IntRange& k_range,
                               const IntRange& r_range, std::uint64_t n_max,
                               const VerifyOptions& options) {
    if (k_range.lo > k_range.hi || r_range.lo > r_range.hi)
        throw std::invalid_argument("range bounds must satisfy lo <= hi");
    if (r_range.lo < 0)
        throw std::invalid_argument("r must be nonnegative");

    VerificationReport report;
    report.id = id;
    for (std::int64_t k = k_range.lo;; ++k) {
        if (k != 0) {
            for (std::int64_t r = r_range.lo;; ++r) {
                TransformParams params(k, static_cast<std::uint64_t>(r));
                PointChecker check = make_checker(id, params, n_max, options);
                for (std::uint64_t n = 0; n <= n_max; ++n) {
                    Outcome outcome = check(n);
                    switch (outcome.state) {
                    case Outcome::State::Pass:
                        ++report.passed;
                        break;
                    case Outcome::State::Skip:
                        ++report.skipped;
                        break;
                    case Outcome::State::Fail:
                        ++report.failed;
                        if (!report.counterexample)
                            report.counterexample =
                                Counterexample{id, k, static_cast<std::uint64_t>(r), n,
                                               std::move(outcome.expected),
                                               std::move(outcome.actual)};
                        break;
                    }
                }
                if (r == r_range.hi)
                    break;
            }
        }
        if (k == k_range.hi)
            break;
    }
    return report;
}

} // namespace lucasbt
