#ifndef LUCASBT_FORMAT_HPP
#define LUCASBT_FORMAT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lucasbt/identities.hpp"
#include "lucasbt/recurrence.hpp"

namespace lucasbt {

enum class OutputFormat {
    Plain, // terms separated by single spaces, one line
    Csv,   // terms separated by commas, one line
    Json,  // one object: family, k, r, terms as decimal strings
    Bfile, // "<index> <value>\n" per term, index ascending from 0
};

// Accepts "plain", "csv", "json", "bfile"; anything else throws
// std::invalid_argument.
OutputFormat format_from_string(const std::string& name);

// Sequence identification carried into the json rendering.
struct EmitMeta {
    std::string family;
    std::int64_t k;
    std::uint64_t r;
};

// Renders terms in the requested format.  Every format ends with exactly
// one trailing newline; all numbers are plain decimal.
std::string render_terms(std::span<const Integer> terms, OutputFormat format,
                         const EmitMeta& meta);

// Inverse of the bfile rendering: parses "<index> <value>" lines with
// indices ascending from 0.  Malformed lines, gaps, or a nonzero first
// index throw std::invalid_argument.
std::vector<Integer> parse_bfile(const std::string& text);

// Parses "A..B" with A <= B into a closed range; anything else throws
// std::invalid_argument.
IntRange parse_range(const std::string& text);

// Human-readable verification report: one summary line plus a
// counterexample block when there is one.
std::string report_to_text(const VerificationReport& report,
                           const IntRange& k_range, const IntRange& r_range,
                           std::uint64_t n_max);

// Machine-readable verification report: identity, grid bounds, counts,
// and the counterexample tuple with its values as decimal strings.
std::string report_to_json(const VerificationReport& report,
                           const IntRange& k_range, const IntRange& r_range,
                           std::uint64_t n_max);

} // namespace lucasbt

#endif
