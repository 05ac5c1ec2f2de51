#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lucasbt/format.hpp"
#include "lucasbt/identities.hpp"
#include "lucasbt/recurrence.hpp"
#include "lucasbt/transform.hpp"

namespace {

using lucasbt::Integer;

struct FamilySelection {
    std::string name;
    bool lucas_seeds; // seeds 2, k rather than 0, 1
    std::int64_t k;
};

// Resolves --family plus --k.  The named presets fix k themselves:
// lucas and pell-lucas are the k = 1 and k = 2 Lucas-seeded families,
// pell is the k = 2 Fibonacci-seeded one.
FamilySelection resolve_family(const std::string& family, std::optional<std::int64_t> k) {
    bool lucas_seeds = false;
    std::optional<std::int64_t> preset_k;
    if (family == "k-lucas") {
        lucas_seeds = true;
    } else if (family == "k-fibonacci") {
        lucas_seeds = false;
    } else if (family == "lucas") {
        lucas_seeds = true;
        preset_k = 1;
    } else if (family == "pell-lucas") {
        lucas_seeds = true;
        preset_k = 2;
    } else if (family == "pell") {
        lucas_seeds = false;
        preset_k = 2;
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    if (preset_k) {
        if (k)
            throw std::invalid_argument("family " + family + " fixes k; drop --k");
        k = preset_k;
    }
    if (!k)
        throw std::invalid_argument("family " + family + " needs --k");
    if (*k == 0)
        throw std::invalid_argument("k must be nonzero");
    return {family, lucas_seeds, *k};
}

lucasbt::SequenceSpec family_spec(const FamilySelection& family, std::uint64_t r) {
    lucasbt::TransformParams params(family.k, r);
    return family.lucas_seeds ? lucasbt::iterated_lucas_spec(params)
                              : lucasbt::iterated_fibonacci_spec(params);
}

int run_emit(const std::string& family_name, std::optional<std::int64_t> k, std::uint64_t r,
             std::int64_t count, const std::string& format_name, const std::string& method) {
    FamilySelection family = resolve_family(family_name, k);
    if (count < 0)
        throw std::invalid_argument("--count must be nonnegative");
    lucasbt::OutputFormat format = lucasbt::format_from_string(format_name);
    lucasbt::SequenceSpec spec = family_spec(family, r);

    std::vector<Integer> values;
    if (method == "matrix") {
        values.reserve(static_cast<std::size_t>(count));
        for (std::int64_t n = 0; n < count; ++n)
            values.push_back(lucasbt::term_at(spec, static_cast<std::uint64_t>(n)));
    } else {
        values = lucasbt::terms(spec, static_cast<std::size_t>(count));
    }
    std::cout << lucasbt::render_terms(values, format, {family.name, family.k, r});
    return 0;
}

int run_term(const std::string& family_name, std::optional<std::int64_t> k, std::uint64_t r,
             std::uint64_t n, const std::optional<std::string>& mod) {
    FamilySelection family = resolve_family(family_name, k);
    lucasbt::SequenceSpec spec = family_spec(family, r);

    Integer value;
    if (mod) {
        Integer m;
        try {
            m = Integer(*mod);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("--mod must be a decimal integer");
        }
        value = lucasbt::term_at_mod(spec, n, lucasbt::Modulus(m));
    } else {
        value = lucasbt::term_at(spec, n);
    }
    std::cout << value.get_str() << "\n";
    return 0;
}

int run_verify(const std::string& identity_name, const std::string& k_range_text,
               const std::string& r_range_text, std::uint64_t n_max, bool as_json,
               std::int64_t fault_b2) {
    lucasbt::IdentityId id = lucasbt::identity_from_string(identity_name);
    lucasbt::IntRange k_range = lucasbt::parse_range(k_range_text);
    lucasbt::IntRange r_range = lucasbt::parse_range(r_range_text);

    lucasbt::VerifyOptions options;
    options.fault_b2 = fault_b2;
    lucasbt::VerificationReport report = lucasbt::verify_grid(id, k_range, r_range, n_max, options);

    std::cout << (as_json ? lucasbt::report_to_json(report, k_range, r_range, n_max)
                          : lucasbt::report_to_text(report, k_range, r_range, n_max));
    return report.ok() ? 0 : 1;
}

int run_bench(const std::string& family_name, std::optional<std::int64_t> k, std::uint64_t r,
              std::uint64_t n_max, const std::string& method) {
    FamilySelection family = resolve_family(family_name, k);
    lucasbt::SequenceSpec spec = family_spec(family, r);

    std::vector<std::uint64_t> schedule;
    if (n_max == 0) {
        schedule.push_back(0);
    } else {
        for (std::uint64_t n = 1; n < n_max;) {
            schedule.push_back(n);
            if (n > n_max / 2)
                break;
            n *= 2;
        }
        schedule.push_back(n_max);
    }

    bool show_iterate = method != "matrix";
    bool show_matrix = method != "iterate";

    std::ostringstream table;
    table << std::setw(12) << "n";
    if (show_iterate)
        table << std::setw(14) << "iterate_ms";
    if (show_matrix)
        table << std::setw(14) << "matrix_ms";
    table << std::setw(8) << "agree" << "\n";
    table << std::fixed << std::setprecision(3);

    using clock = std::chrono::steady_clock;
    auto to_ms = [](clock::duration d) {
        return std::chrono::duration<double, std::milli>(d).count();
    };

    for (std::uint64_t n : schedule) {
        // Both methods always run: equal results gate the timing report.
        auto t0 = clock::now();
        Integer via_iterate = lucasbt::term_at_iterative(spec, n);
        auto t1 = clock::now();
        Integer via_matrix = lucasbt::term_at(spec, n);
        auto t2 = clock::now();
        if (via_iterate != via_matrix) {
            std::cerr << "method disagreement at n=" << n << "\n";
            return 1;
        }
        table << std::setw(12) << n;
        if (show_iterate)
            table << std::setw(14) << to_ms(t1 - t0);
        if (show_matrix)
            table << std::setw(14) << to_ms(t2 - t1);
        table << std::setw(8) << "ok" << "\n";
    }
    std::cout << table.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterated binomial transforms of weight-k Lucas and Fibonacci sequences"};
    app.require_subcommand(1);

    const char* family_help = "k-lucas, k-fibonacci, lucas, pell-lucas, or pell";

    auto* emit = app.add_subcommand("emit", "Print leading terms of a transformed sequence");
    std::string emit_family;
    std::optional<std::int64_t> emit_k;
    std::uint64_t emit_r = 0;
    std::int64_t emit_count = 10;
    std::string emit_format = "plain";
    std::string emit_method = "iterate";
    emit->add_option("--family", emit_family, family_help)->required();
    emit->add_option("--k", emit_k, "recurrence weight, any nonzero integer");
    emit->add_option("--r", emit_r, "how many times the binomial transform is applied");
    emit->add_option("--count", emit_count, "number of terms, starting at index 0");
    emit->add_option("--format", emit_format, "plain, csv, json, or bfile");
    emit->add_option("--method", emit_method, "iterate or matrix")
        ->check(CLI::IsMember({"iterate", "matrix"}));

    auto* term = app.add_subcommand("term", "Print a single term, optionally reduced mod m");
    std::string term_family;
    std::optional<std::int64_t> term_k;
    std::uint64_t term_r = 0;
    std::uint64_t term_n = 0;
    std::optional<std::string> term_mod;
    term->add_option("--family", term_family, family_help)->required();
    term->add_option("--k", term_k, "recurrence weight, any nonzero integer");
    term->add_option("--r", term_r, "how many times the binomial transform is applied");
    term->add_option("--n", term_n, "term index")->required();
    term->add_option("--mod", term_mod, "modulus, at least 2");

    auto* verify = app.add_subcommand("verify", "Check an identity over a (k, r, n) grid");
    std::string verify_identity;
    std::string verify_k_range = "1..5";
    std::string verify_r_range = "0..4";
    std::uint64_t verify_n_max = 32;
    bool verify_json = false;
    std::int64_t verify_fault_b2 = 0;
    verify->add_option("--identity", verify_identity,
                       "oracle-lucas, oracle-fibonacci, lemma, binet, gf, sum, relation, "
                       "b2-closed-form, or specialize-r1")
        ->required();
    verify->add_option("--k-range", verify_k_range, "weights to sweep, as A..B (0 is skipped)");
    verify->add_option("--r-range", verify_r_range, "transform depths to sweep, as A..B");
    verify->add_option("--n-max", verify_n_max, "check indices 0..n-max");
    verify->add_flag("--json", verify_json, "machine-readable report");
    verify->add_option("--fault-b2", verify_fault_b2,
                       "offset added to the closed-form second term; nonzero values force "
                       "failures, for exercising the reporting path");

    auto* bench = app.add_subcommand("bench", "Time term computation on a doubling schedule");
    std::string bench_family;
    std::optional<std::int64_t> bench_k;
    std::uint64_t bench_r = 0;
    std::uint64_t bench_n_max = 4096;
    std::string bench_method = "both";
    bench->add_option("--family", bench_family, family_help)->required();
    bench->add_option("--k", bench_k, "recurrence weight, any nonzero integer");
    bench->add_option("--r", bench_r, "how many times the binomial transform is applied");
    bench->add_option("--n-max", bench_n_max, "largest index in the schedule");
    bench->add_option("--method", bench_method, "iterate, matrix, or both")
        ->check(CLI::IsMember({"iterate", "matrix", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // help and version requests
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (emit->parsed())
            return run_emit(emit_family, emit_k, emit_r, emit_count, emit_format, emit_method);
        if (term->parsed())
            return run_term(term_family, term_k, term_r, term_n, term_mod);
        if (verify->parsed())
            return run_verify(verify_identity, verify_k_range, verify_r_range, verify_n_max,
                              verify_json, verify_fault_b2);
        if (bench->parsed())
            return run_bench(bench_family, bench_k, bench_r, bench_n_max, bench_method);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 2;
}
