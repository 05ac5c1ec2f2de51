#include "lucasbt/format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lucasbt {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

bool decimal_integer(const std::string& s) {
    if (!s.empty() && s[0] == '-')
        return all_digits(s.substr(1));
    return all_digits(s);
}

std::int64_t parse_bound(const std::string& s) {
    std::size_t consumed = 0;
    std::int64_t value = std::stoll(s, &consumed);
    if (consumed != s.size())
        throw std::invalid_argument("range bound is not an integer: " + s);
    return value;
}

} // namespace

OutputFormat format_from_string(const std::string& name) {
    if (name == "plain")
        return OutputFormat::Plain;
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    if (name == "bfile")
        return OutputFormat::Bfile;
    throw std::invalid_argument("unknown format: " + name);
}

std::string render_terms(std::span<const Integer> terms, OutputFormat format,
                         const EmitMeta& meta) {
    switch (format) {
    case OutputFormat::Plain:
    case OutputFormat::Csv: {
        const char* sep = format == OutputFormat::Plain ? " " : ",";
        std::string out;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i > 0)
                out += sep;
            out += terms[i].get_str();
        }
        out += '\n';
        return out;
    }
    case OutputFormat::Json: {
        nlohmann::ordered_json doc;
        doc["family"] = meta.family;
        doc["k"] = meta.k;
        doc["r"] = meta.r;
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (const Integer& t : terms)
            values.push_back(t.get_str());
        doc["terms"] = std::move(values);
        return doc.dump() + "\n";
    }
    case OutputFormat::Bfile: {
        std::string out;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            out += std::to_string(i);
            out += ' ';
            out += terms[i].get_str();
            out += '\n';
        }
        return out;
    }
    }
    throw std::invalid_argument("unknown output format");
}

std::vector<Integer> parse_bfile(const std::string& text) {
    std::vector<Integer> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string index_str, value_str, extra;
        if (!(fields >> index_str >> value_str) || (fields >> extra))
            throw std::invalid_argument("malformed line: " + line);
        if (!all_digits(index_str) || !decimal_integer(value_str))
            throw std::invalid_argument("malformed line: " + line);
        if (Integer(index_str) != Integer(static_cast<unsigned long>(out.size())))
            throw std::invalid_argument("index out of order: " + line);
        out.emplace_back(value_str);
    }
    return out;
}

IntRange parse_range(const std::string& text) {
    std::size_t sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("range must look like A..B: " + text);
    IntRange range{parse_bound(text.substr(0, sep)), parse_bound(text.substr(sep + 2))};
    if (range.lo > range.hi)
        throw std::invalid_argument("range bounds must satisfy A <= B: " + text);
    return range;
}

std::string report_to_text(const VerificationReport& report,
                           const IntRange& k_range, const IntRange& r_range,
                           std::uint64_t n_max) {
    std::ostringstream out;
    out << identity_name(report.id) << ": " << (report.ok() ? "ok" : "FALSIFIED")
        << " passed=" << report.passed << " failed=" << report.failed
        << " skipped=" << report.skipped << " over k=" << k_range.lo << ".." << k_range.hi
        << " r=" << r_range.lo << ".." << r_range.hi << " n=0.." << n_max << "\n";
    if (report.counterexample) {
        const Counterexample& ce = *report.counterexample;
        out << "first counterexample: k=" << ce.k << " r=" << ce.r << " n=" << ce.n
            << " expected=" << ce.expected.get_str() << " actual=" << ce.actual.get_str()
            << "\n";
    }
    return out.str();
}

std::string report_to_json(const VerificationReport& report,
                           const IntRange& k_range, const IntRange& r_range,
                           std::uint64_t n_max) {
    nlohmann::ordered_json doc;
    doc["identity"] = identity_name(report.id);
    doc["k_range"] = {{"lo", k_range.lo}, {"hi", k_range.hi}};
    doc["r_range"] = {{"lo", r_range.lo}, {"hi", r_range.hi}};
    doc["n_max"] = n_max;
    doc["passed"] = report.passed;
    doc["failed"] = report.failed;
    doc["skipped"] = report.skipped;
    if (report.counterexample) {
        const Counterexample& ce = *report.counterexample;
        doc["counterexample"] = {{"k", std::to_string(ce.k)},
                                 {"r", std::to_string(ce.r)},
                                 {"n", std::to_string(ce.n)},
                                 {"expected", ce.expected.get_str()},
                                 {"actual", ce.actual.get_str()}};
    } else {
        doc["counterexample"] = nullptr;
    }
    return doc.dump() + "\n";
}

} // namespace lucasbt
