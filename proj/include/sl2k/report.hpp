#pragma once
// Verification-run reports and their serializers (text, CSV, JSON).
//
// The JSON emitter is hand-rolled so we control the numeric format: every
// double is printed with %.17g, which round-trips IEEE binary64 exactly.
// Non-finite values (which cannot appear in valid JSON numbers) are emitted
// as the quoted tokens "inf" / "-inf" / "nan"; CSV and text use the same
// tokens unquoted.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace sl2k {

struct FailureRecord {
    std::string input;  // human-readable dump of the offending configuration
    double residual = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::string field;  // "real" | "complex"
    std::uint64_t trials_requested = 0;
    std::uint64_t trials_run = 0;
    std::uint64_t rejected = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::vector<FailureRecord> failures;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

// Shortest-of-%.17g textual form of a double; "inf"/"-inf"/"nan" when
// non-finite.  17 significant digits guarantee bit-exact round trip.
inline std::string number_token(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (ch < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += static_cast<char>(ch);
                }
        }
    }
    return out;
}

inline std::string json_number(double x) {
    if (!std::isfinite(x)) return "\"" + number_token(x) + "\"";
    return number_token(x);
}

}  // namespace detail

// One report as a JSON object (no trailing newline).
inline std::string to_json(const VerificationReport& r, int indent = 2) {
    const std::string pad(indent, ' ');
    const std::string pad2(2 * indent, ' ');
    const std::string pad3(3 * indent, ' ');
    std::string out = "{\n";
    auto field = [&](const char* k, const std::string& v, bool last = false) {
        out += pad + "\"" + k + "\": " + v + (last ? "\n" : ",\n");
    };
    field("suite", "\"" + detail::json_escape(r.suite) + "\"");
    field("field", "\"" + detail::json_escape(r.field) + "\"");
    field("trials_requested", std::to_string(r.trials_requested));
    field("trials_run", std::to_string(r.trials_run));
    field("rejected", std::to_string(r.rejected));
    field("max_residual", detail::json_number(r.max_residual));
    field("tolerance", detail::json_number(r.tolerance));
    if (r.failures.empty()) {
        field("failures", "[]");
    } else {
        out += pad + "\"failures\": [\n";
        for (std::size_t i = 0; i < r.failures.size(); ++i) {
            out += pad2 + "{\"input\": \"" + detail::json_escape(r.failures[i].input) +
                   "\",\n" + pad3 + "\"residual\": " + detail::json_number(r.failures[i].residual) +
                   "}";
            out += (i + 1 < r.failures.size()) ? ",\n" : "\n";
        }
        out += pad + "],\n";
    }
    field("seed", std::to_string(r.seed));
    field("elapsed_ms", detail::json_number(r.elapsed_ms), /*last=*/true);
    out += "}";
    return out;
}

// A run's reports as a JSON array (the CLI's --format json output).
inline std::string to_json(const std::vector<VerificationReport>& rs) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        out += to_json(rs[i]);
        out += (i + 1 < rs.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

inline std::string csv_header() {
    return "suite,field,trials_requested,trials_run,rejected,max_residual,"
           "tolerance,failures,seed,elapsed_ms\n";
}

// One CSV data row; `failures` is the failure count.
inline std::string to_csv_row(const VerificationReport& r) {
    std::string out;
    out += r.suite + "," + r.field + ",";
    out += std::to_string(r.trials_requested) + "," + std::to_string(r.trials_run) + ",";
    out += std::to_string(r.rejected) + ",";
    out += number_token(r.max_residual) + "," + number_token(r.tolerance) + ",";
    out += std::to_string(r.failures.size()) + "," + std::to_string(r.seed) + ",";
    out += number_token(r.elapsed_ms) + "\n";
    return out;
}

inline std::string to_csv(const std::vector<VerificationReport>& rs) {
    std::string out = csv_header();
    for (const auto& r : rs) out += to_csv_row(r);
    return out;
}

// Human-oriented one-liner, also the --format text output.
inline std::string to_text_line(const VerificationReport& r) {
    return "SUITE " + r.suite + " field=" + r.field + " trials=" +
           std::to_string(r.trials_run) + " rejected=" + std::to_string(r.rejected) +
           " max_residual=" + number_token(r.max_residual) + " tol=" +
           number_token(r.tolerance) + (r.passed() ? " PASS" : " FAIL") + "\n";
}

inline std::string to_text(const std::vector<VerificationReport>& rs) {
    std::string out;
    for (const auto& r : rs) out += to_text_line(r);
    return out;
}

}  // namespace sl2k
