#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "eulerext/rational.hpp"

namespace eulerext {

/* Machine-readable verdicts for bound checks. One BoundReport per checked
 * inequality, serialized as a single JSON line so batch files can be appended
 * to freely. All numeric payloads are exact rationals ({"num": .., "den": ..});
 * verdicts never pass through floating point.
 */

enum class Verdict { PASS, FAIL, SKIPPED };

inline std::string verdict_to_string(Verdict v) {
    switch (v) {
        case Verdict::PASS: return "PASS";
        case Verdict::FAIL: return "FAIL";
        case Verdict::SKIPPED: return "SKIPPED";
    }
    throw std::logic_error("verdict_to_string: unknown verdict");
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "PASS") return Verdict::PASS;
    if (s == "FAIL") return Verdict::FAIL;
    if (s == "SKIPPED") return Verdict::SKIPPED;
    throw std::invalid_argument("verdict_from_string: unknown verdict '" + s + "'");
}

/// True iff `computed <relation> bound` holds exactly. relation is one of
/// ">=", "<=", "=".
inline bool relation_holds(const Rational& computed, const std::string& relation,
                           const Rational& bound) {
    if (relation == ">=") return computed >= bound;
    if (relation == "<=") return computed <= bound;
    if (relation == "=") return computed == bound;
    throw std::invalid_argument("relation_holds: unknown relation '" + relation + "'");
}

struct BoundReport {
    std::string quantity;
    Rational computed;
    Rational bound;
    std::string relation = ">=";
    Verdict verdict = Verdict::SKIPPED;
    std::string witness;  // optional; empty means absent
    long long time_ms = 0;

    bool operator==(const BoundReport&) const = default;
};

/// Builds a report whose verdict is decided by the exact comparison.
inline BoundReport make_bound_report(std::string quantity, Rational computed, Rational bound,
                                     std::string relation, std::string witness = "",
                                     long long time_ms = 0) {
    BoundReport r;
    r.quantity = std::move(quantity);
    r.computed = computed;
    r.bound = bound;
    r.relation = std::move(relation);
    r.verdict = relation_holds(computed, r.relation, bound) ? Verdict::PASS : Verdict::FAIL;
    r.witness = std::move(witness);
    r.time_ms = time_ms;
    return r;
}

/// A SKIPPED row (e.g. exact solver cap exceeded); the reason lands in the
/// witness slot so it survives serialization.
inline BoundReport make_skipped_report(std::string quantity, std::string reason,
                                       long long time_ms = 0) {
    BoundReport r;
    r.quantity = std::move(quantity);
    r.verdict = Verdict::SKIPPED;
    r.witness = std::move(reason);
    r.time_ms = time_ms;
    return r;
}

/// How far the check is from its boundary: positive = margin, zero = tight,
/// negative = violated. For "=" the slack is 0 when equal, else negative.
inline Rational report_slack(const BoundReport& r) {
    if (r.relation == ">=") return r.computed - r.bound;
    if (r.relation == "<=") return r.bound - r.computed;
    if (r.relation == "=") {
        const Rational diff = r.computed - r.bound;
        return diff < Rational(0) ? diff : Rational(0) - diff;
    }
    throw std::invalid_argument("report_slack: unknown relation '" + r.relation + "'");
}

// nlohmann ADL hooks -- `json j = report;` / `j.get<BoundReport>()`.
inline void to_json(nlohmann::json& j, const Rational& r) {
    j = nlohmann::json{{"num", r.num}, {"den", r.den}};
}

inline void from_json(const nlohmann::json& j, Rational& r) {
    r = Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

inline void to_json(nlohmann::json& j, const BoundReport& r) {
    j = nlohmann::json{{"quantity", r.quantity},
                       {"computed", r.computed},
                       {"bound", r.bound},
                       {"relation", r.relation},
                       {"verdict", verdict_to_string(r.verdict)},
                       {"time_ms", r.time_ms}};
    if (!r.witness.empty()) j["witness"] = r.witness;
}

inline void from_json(const nlohmann::json& j, BoundReport& r) {
    r.quantity = j.at("quantity").get<std::string>();
    r.computed = j.at("computed").get<Rational>();
    r.bound = j.at("bound").get<Rational>();
    r.relation = j.at("relation").get<std::string>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.witness = j.contains("witness") ? j.at("witness").get<std::string>() : "";
    r.time_ms = j.at("time_ms").get<long long>();
}

/// One compact JSON line (no trailing newline). Keys are emitted in sorted
/// order, so output is byte-stable.
inline std::string bound_report_to_line(const BoundReport& r) {
    return nlohmann::json(r).dump();
}

inline BoundReport bound_report_from_line(const std::string& line) {
    return nlohmann::json::parse(line).get<BoundReport>();
}

}  // namespace eulerext
