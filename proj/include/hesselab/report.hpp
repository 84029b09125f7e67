#pragma once

/**
 * @file report.hpp
 * @brief Check results, suite configuration and report serialization.
 *
 * The JSON report is deterministic for a given configuration: results are
 * sorted by id and elapsed times are left out (they appear only in the text
 * report).
 */

#include "hesse.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hesselab {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Info };

inline std::string_view status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Info: return "INFO";
    }
    return "?";
}

inline constexpr std::string_view kPlumbing = "plumbing";

struct CheckResult {
    std::string id;
    std::string anchor;  ///< the claim being checked, or "plumbing"
    Status status = Status::Info;
    std::string computed;
    std::string expected = "none";
    std::vector<Json> witnesses;
    double elapsed = 0;  ///< seconds
};

/// PASS iff computed == expected.
inline CheckResult expect_eq(std::string id, std::string anchor, std::string computed, std::string expected,
                             std::vector<Json> witnesses = {}) {
    CheckResult r{std::move(id), std::move(anchor), Status::Pass, std::move(computed), std::move(expected),
                  std::move(witnesses)};
    if (r.computed != r.expected) r.status = Status::Fail;
    return r;
}

inline CheckResult expect_eq(std::string id, std::string anchor, long computed, long expected,
                             std::vector<Json> witnesses = {}) {
    return expect_eq(std::move(id), std::move(anchor), std::to_string(computed), std::to_string(expected),
                     std::move(witnesses));
}

inline CheckResult expect_true(std::string id, std::string anchor, bool computed, std::vector<Json> witnesses = {}) {
    return expect_eq(std::move(id), std::move(anchor), computed ? "true" : "false", "true", std::move(witnesses));
}

/// Reported, never failing. expected may be "none".
inline CheckResult info(std::string id, std::string anchor, std::string computed, std::string expected = "none",
                        std::vector<Json> witnesses = {}) {
    return {std::move(id), std::move(anchor), Status::Info, std::move(computed), std::move(expected),
            std::move(witnesses)};
}

struct SuiteConfig {
    std::string suite = "all";
    std::vector<PencilParam> lambdas;  ///< empty: the default samples
    int shear_seed = 0;
    unsigned jobs = 1;
};

inline const std::vector<PencilParam>& default_lambdas() {
    static const std::vector<PencilParam> d{PencilParam(Eisenstein(2)), PencilParam(Eisenstein(-3)),
                                            PencilParam(Eisenstein(3))};
    return d;
}

inline const std::vector<PencilParam>& effective_lambdas(const SuiteConfig& c) {
    return c.lambdas.empty() ? default_lambdas() : c.lambdas;
}

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError for a lambda in the exceptional set or a negative seed.
inline void validate(const SuiteConfig& c) {
    for (const auto& l : c.lambdas)
        if (is_exceptional(l))
            throw ConfigError("lambda = " + l.str() +
                              " is exceptional (singular, equianharmonic, or excluded from the 36-point count)");
    if (c.shear_seed < 0) throw ConfigError("shear seed must be >= 0");
    if (c.jobs < 1) throw ConfigError("jobs must be >= 1");
}

struct Summary {
    int pass = 0, fail = 0, info = 0;
};

inline Summary summarize(const std::vector<CheckResult>& rs) {
    Summary s;
    for (const auto& r : rs) {
        if (r.status == Status::Pass) ++s.pass;
        else if (r.status == Status::Fail) ++s.fail;
        else ++s.info;
    }
    return s;
}

inline void sort_results(std::vector<CheckResult>& rs) {
    std::stable_sort(rs.begin(), rs.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

inline Json to_json(const CheckResult& r) {
    Json w = Json::array();
    for (const auto& x : r.witnesses) w.push_back(x);
    return Json{{"id", r.id},
                {"anchor", r.anchor},
                {"status", status_name(r.status)},
                {"computed", r.computed},
                {"expected", r.expected},
                {"witnesses", std::move(w)}};
}

/// {schema, config, results, summary}; results must already be sorted.
inline Json report_json(const SuiteConfig& c, const std::vector<CheckResult>& rs) {
    Json lam = Json::array();
    for (const auto& l : effective_lambdas(c)) lam.push_back(l.str());
    Json results = Json::array();
    for (const auto& r : rs) results.push_back(to_json(r));
    Summary s = summarize(rs);
    return Json{{"schema", 1},
                {"config", {{"suite", c.suite}, {"lambda", std::move(lam)}, {"shear_seed", c.shear_seed}}},
                {"results", std::move(results)},
                {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"info", s.info}}}};
}

inline std::string report_text(const SuiteConfig& c, const std::vector<CheckResult>& rs) {
    std::ostringstream os;
    os << "suite " << c.suite << ", lambda {";
    const auto& ls = effective_lambdas(c);
    for (std::size_t i = 0; i < ls.size(); ++i) os << (i ? ", " : "") << ls[i].str();
    os << "}, shear seed " << c.shear_seed << "\n";
    for (const auto& r : rs) {
        os << status_name(r.status) << "  " << r.id << "  computed: " << r.computed;
        if (r.expected != "none") os << "  expected: " << r.expected;
        char buf[32];
        std::snprintf(buf, sizeof buf, "  (%.3f s)", r.elapsed);
        os << buf << "\n";
        if (r.status != Status::Pass) {
            if (r.anchor != kPlumbing) os << "      claim: " << r.anchor << "\n";
            for (const auto& w : r.witnesses) os << "      " << (w.is_string() ? w.get<std::string>() : w.dump()) << "\n";
        }
    }
    Summary s = summarize(rs);
    os << s.pass << " passed, " << s.fail << " failed, " << s.info << " info\n";
    return os.str();
}

/// JSON form of a singular point record.
inline Json to_json(const SingularPointRecord& r) {
    return Json{{"point", r.point.str()},
                {"multiplicity", r.multiplicity},
                {"tag", tag_name(r.tag)},
                {"shear", r.shear}};
}

}  // namespace hesselab
