#include <doctest.h>

#include "lucasbt/errors.hpp"
#include "lucasbt/identities.hpp"

using lucasbt::Integer;
using lucasbt::IdentityId;
using lucasbt::IntRange;
using lucasbt::TransformParams;
using lucasbt::VerificationReport;

TEST_SUITE("identities") {

TEST_CASE("identity names round-trip") {
    for (IdentityId id : lucasbt::all_identities())
        CHECK(lucasbt::identity_from_string(lucasbt::identity_name(id)) == id);
    CHECK_THROWS_AS(lucasbt::identity_from_string("nonsense"), std::invalid_argument);
    CHECK(lucasbt::all_identities().size() == 9);
}

TEST_CASE("direct partial sums") {
    CHECK(lucasbt::sum_direct(TransformParams(1, 1), 3) == 12);
    CHECK(lucasbt::sum_direct(TransformParams(1, 2), 3) == 22);
    CHECK(lucasbt::sum_direct(TransformParams(4, 3), 1) == 2);
    CHECK(lucasbt::sum_direct(TransformParams(2, 0), 0) == 0);
}

TEST_CASE("closed-form partial sums") {
    CHECK(lucasbt::sum_closed_form(TransformParams(1, 1), 3) == 12);
    CHECK(lucasbt::sum_closed_form(TransformParams(1, 2), 3) == 22);
    CHECK(lucasbt::sum_closed_form(TransformParams(4, 3), 1) == 2);
    CHECK(lucasbt::sum_closed_form(TransformParams(-2, 4), 1) == 2);
    CHECK_THROWS_AS(lucasbt::sum_closed_form(TransformParams(1, 1), 0), std::invalid_argument);
}

TEST_CASE("closed-form sums equal direct sums across the grid") {
    for (std::int64_t k = -3; k <= 3; ++k) {
        if (k == 0)
            continue;
        for (std::uint64_t r = 0; r <= 3; ++r) {
            TransformParams params(k, r);
            for (std::uint64_t n = 1; n <= 32; ++n)
                CHECK(lucasbt::sum_closed_form(params, n) == lucasbt::sum_direct(params, n));
        }
    }
}

TEST_CASE("one-fold sums collapse to the displayed difference form") {
    // sum_{i<n} b_i == b_n - k b_{n-1} + k at r = 1.
    for (std::int64_t k = 1; k <= 5; ++k) {
        TransformParams params(k, 1);
        std::vector<Integer> b = lucasbt::terms(lucasbt::iterated_lucas_spec(params), 33);
        for (std::uint64_t n = 1; n <= 32; ++n)
            CHECK(lucasbt::sum_closed_form(params, n) == b[n] - k * b[n - 1] + k);
    }
}

TEST_CASE("transform relation matches stated values") {
    CHECK(lucasbt::lucas_from_fibonacci(TransformParams(1, 1), 2) == 7);
    CHECK(lucasbt::lucas_from_fibonacci(TransformParams(1, 2), 3) == 50);
    CHECK(lucasbt::lucas_from_fibonacci(TransformParams(2, 1), 2) == 12);
    CHECK_THROWS_AS(lucasbt::lucas_from_fibonacci(TransformParams(1, 1), 0),
                    std::invalid_argument);
}

TEST_CASE("transform relation reproduces every term past the first") {
    for (std::int64_t k = -3; k <= 3; ++k) {
        if (k == 0)
            continue;
        for (std::uint64_t r = 0; r <= 3; ++r) {
            TransformParams params(k, r);
            std::vector<Integer> b = lucasbt::terms(lucasbt::iterated_lucas_spec(params), 33);
            for (std::uint64_t n = 1; n <= 32; ++n)
                CHECK(lucasbt::lucas_from_fibonacci(params, n) == b[n]);
        }
    }
}

TEST_CASE("grid verification passes on healthy grids") {
    VerificationReport sum =
        lucasbt::verify_grid(IdentityId::Sum, IntRange{1, 3}, IntRange{0, 2}, 20);
    CHECK(sum.ok());
    CHECK(sum.failed == 0);
    CHECK(sum.passed == 3 * 3 * 20);
    CHECK(sum.skipped == 3 * 3); // the n = 0 points
    CHECK_FALSE(sum.counterexample.has_value());

    VerificationReport oracle =
        lucasbt::verify_grid(IdentityId::OracleLucas, IntRange{1, 1}, IntRange{0, 0}, 5);
    CHECK(oracle.passed == 6);
    CHECK(oracle.failed == 0);
    CHECK(oracle.skipped == 0);
}

TEST_CASE("every identity passes on a mixed-sign grid") {
    for (IdentityId id : lucasbt::all_identities()) {
        VerificationReport report =
            lucasbt::verify_grid(id, IntRange{-2, 3}, IntRange{0, 2}, 12);
        CHECK_MESSAGE(report.ok(), lucasbt::identity_name(id));
        CHECK(report.passed > 0);
    }
}

TEST_CASE("a seeded fault is caught and located") {
    lucasbt::VerifyOptions options;
    options.fault_b2 = 1;
    VerificationReport report = lucasbt::verify_grid(IdentityId::B2ClosedForm, IntRange{1, 3},
                                                     IntRange{0, 2}, 4, options);
    CHECK_FALSE(report.ok());
    CHECK(report.failed == 3 * 3); // one n = 2 point per (k, r)
    REQUIRE(report.counterexample.has_value());
    const lucasbt::Counterexample& ce = *report.counterexample;
    CHECK(ce.k == 1);
    CHECK(ce.r == 0);
    CHECK(ce.n == 2);
    CHECK(ce.expected == 3);
    CHECK(ce.actual == 4);
}

TEST_CASE("grid points that carry no claim are skipped") {
    VerificationReport lemma =
        lucasbt::verify_grid(IdentityId::Lemma, IntRange{1, 2}, IntRange{0, 0}, 8);
    CHECK(lemma.passed == 0);
    CHECK(lemma.skipped == 2 * 9);

    VerificationReport b2 =
        lucasbt::verify_grid(IdentityId::B2ClosedForm, IntRange{1, 2}, IntRange{0, 1}, 1);
    CHECK(b2.passed == 2 * 2 * 2); // only n = 0 and n = 1 claims exist
    CHECK(b2.skipped == 0);

    VerificationReport r1 =
        lucasbt::verify_grid(IdentityId::SpecializeR1, IntRange{1, 2}, IntRange{0, 2}, 6);
    CHECK(r1.passed == 2 * 7);
    CHECK(r1.skipped == 2 * 2 * 7);
}

TEST_CASE("weight zero is excluded from grids") {
    VerificationReport report =
        lucasbt::verify_grid(IdentityId::Binet, IntRange{0, 0}, IntRange{0, 1}, 4);
    CHECK(report.passed == 0);
    CHECK(report.failed == 0);
    CHECK(report.skipped == 0);

    VerificationReport straddle =
        lucasbt::verify_grid(IdentityId::Binet, IntRange{-1, 1}, IntRange{0, 0}, 4);
    CHECK(straddle.passed == 2 * 5);
}

TEST_CASE("grid verification is deterministic") {
    lucasbt::VerifyOptions options;
    options.fault_b2 = 2;
    VerificationReport first = lucasbt::verify_grid(IdentityId::B2ClosedForm, IntRange{-2, 2},
                                                    IntRange{0, 3}, 6, options);
    VerificationReport second = lucasbt::verify_grid(IdentityId::B2ClosedForm, IntRange{-2, 2},
                                                     IntRange{0, 3}, 6, options);
    CHECK(first.passed == second.passed);
    CHECK(first.failed == second.failed);
    CHECK(first.skipped == second.skipped);
    REQUIRE(first.counterexample.has_value());
    REQUIRE(second.counterexample.has_value());
    CHECK(first.counterexample->k == second.counterexample->k);
    CHECK(first.counterexample->r == second.counterexample->r);
    CHECK(first.counterexample->n == second.counterexample->n);
    CHECK(first.counterexample->expected == second.counterexample->expected);
    CHECK(first.counterexample->actual == second.counterexample->actual);
}

TEST_CASE("malformed grids are rejected") {
    CHECK_THROWS_AS(
        lucasbt::verify_grid(IdentityId::Sum, IntRange{3, 1}, IntRange{0, 1}, 4),
        std::invalid_argument);
    CHECK_THROWS_AS(
        lucasbt::verify_grid(IdentityId::Sum, IntRange{1, 3}, IntRange{-1, 1}, 4),
        std::invalid_argument);
}

} // TEST_SUITE
