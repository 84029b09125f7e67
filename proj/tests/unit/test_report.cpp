#include <hesselab/suites.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hesselab;

TEST_CASE("check helpers set the status from the comparison", "[report]") {
    CHECK(expect_eq("a", "x", "1", "1").status == Status::Pass);
    CHECK(expect_eq("a", "x", 2, 3).status == Status::Fail);
    CHECK(expect_true("a", "x", false).status == Status::Fail);
    auto i = info("a", "x", "k = 1");
    CHECK(i.status == Status::Info);
    CHECK(i.expected == "none");
}

TEST_CASE("every result carries an anchor and FAIL iff computed differs", "[report]") {
    SuiteConfig cfg;
    cfg.jobs = 4;
    auto rs = run_suite(cfg);
    std::set<std::string> ids;
    for (const auto& r : rs) {
        INFO(r.id);
        CHECK_FALSE(r.anchor.empty());
        CHECK(ids.insert(r.id).second);
        if (r.expected != "none" && r.status != Status::Info) CHECK((r.status == Status::Fail) == (r.computed != r.expected));
    }
    CHECK(std::is_sorted(rs.begin(), rs.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
    CHECK(summarize(rs).fail == 0);
}

TEST_CASE("JSON report is deterministic and versioned", "[report]") {
    SuiteConfig a;
    a.suite = "hesse-identities";
    a.jobs = 1;
    SuiteConfig b = a;
    b.jobs = 6;
    auto ja = report_json(a, run_suite(a)).dump(2);
    auto jb = report_json(b, run_suite(b)).dump(2);
    CHECK(ja == jb);
    auto j = Json::parse(ja);
    CHECK(j["schema"] == 1);
    CHECK(j["config"]["suite"] == "hesse-identities");
    CHECK(j["config"]["lambda"].size() == 3);
    CHECK(j["summary"]["fail"] == 0);
    for (const auto& r : j["results"]) {
        CHECK(r.contains("anchor"));
        CHECK_FALSE(r.contains("elapsed"));
    }
}

TEST_CASE("named checks", "[report]") {
    SuiteConfig cfg;
    cfg.suite = "enumerative";
    auto rs = run_suite(cfg);
    auto it = std::find_if(rs.begin(), rs.end(), [](const auto& r) { return r.id == "plucker.18-36-72"; });
    REQUIRE(it != rs.end());
    CHECK(it->computed == "(28, 18)");
    cfg.suite = "orbits";
    rs = run_suite(cfg);
    it = std::find_if(rs.begin(), rs.end(), [](const auto& r) { return r.id == "orbit.flexpoints.size"; });
    REQUIRE(it != rs.end());
    CHECK(it->computed == "9");
    CHECK(it->status == Status::Pass);
}

TEST_CASE("configuration errors", "[report]") {
    SuiteConfig cfg;
    cfg.suite = "nope";
    CHECK_THROWS_AS(suite_tasks(cfg), ConfigError);
    cfg.suite = "w0";
    for (const auto& p : exceptional_parameters()) {
        cfg.lambdas = {p};
        CHECK_THROWS_AS(suite_tasks(cfg), ConfigError);
    }
    cfg.lambdas = {PencilParam(Eisenstein(2))};
    cfg.shear_seed = -1;
    CHECK_THROWS_AS(suite_tasks(cfg), ConfigError);
    CHECK(suite_names().size() == 9);
}

TEST_CASE("a throwing task becomes a FAIL result", "[report]") {
    std::vector<Task> ts{{"boom", []() -> std::vector<CheckResult> { throw std::runtime_error("x"); }},
                         {"ok", [] { return std::vector<CheckResult>{expect_true("ok.check", "plumbing", true)}; }}};
    auto rs = run_tasks(ts, 2);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].id == "boom.error");
    CHECK(rs[0].status == Status::Fail);
    CHECK(rs[1].status == Status::Pass);
}

TEST_CASE("shear seed does not change outcomes", "[report]") {
    SuiteConfig a, b;
    a.suite = b.suite = "transversality";
    b.shear_seed = 3;
    auto ra = run_suite(a), rb = run_suite(b);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i].id == rb[i].id);
        CHECK(ra[i].status == rb[i].status);
        CHECK(ra[i].computed == rb[i].computed);
    }
}
