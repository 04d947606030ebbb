#include "doctest.h"

#include <cstdlib>
#include <filesystem>

#include "adw/verify.hpp"

using namespace adw;

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("ADW_DATA_DIR")) return env;
    return "data";
}

int fail_count(const SuiteReport& r) {
    int n = 0;
    for (const auto& c : r.checks)
        if (c.status == Status::Fail) ++n;
    return n;
}

} // namespace

TEST_CASE("as3 suite passes") {
    auto rep = run_suite("as3", 0, 5);
    CHECK(rep.all_ok());
    CHECK(rep.checks.size() == 13);  // 6 x 2 + maximum-nilpotency row
}

TEST_CASE("ad3 suite flags exactly the AD3.17 transcription defect") {
    auto rep = run_suite("ad3", 0, 5);
    std::vector<std::string> failing;
    for (const auto& c : rep.checks)
        if (c.status == Status::Fail) failing.push_back(c.claim);
    REQUIRE(failing.size() == 1);
    CHECK(failing[0] == "AD3.17: identities (2)-(8)");
}

TEST_CASE("as4 suite passes") {
    auto rep = run_suite("as4", 0, 5);
    CHECK(rep.all_ok());
    // 15 rows x {assoc, center, nilpotency} plus one row per automorphism family
    int families = 0;
    for (const auto* e : Catalog::instance().list({4, Kind::Assoc, {}, false}))
        families += static_cast<int>(e->automorphisms.size());
    CHECK(static_cast<int>(rep.checks.size()) == 45 + families);
}

TEST_CASE("ad4 theorem suites pass and report pair evidence") {
    for (int g = 1; g <= 8; ++g) {
        auto rep = run_suite("ad4-thm" + std::to_string(g), 0, 5);
        CHECK_MESSAGE(rep.all_ok(), rep.suite_id);
    }
}

TEST_CASE("coincidences suite verifies all persisted witnesses") {
    auto rep = run_suite("coincidences", 0, 5, data_dir());
    CHECK(rep.all_ok());
    CHECK(rep.checks.size() == 8);
    for (const auto& c : rep.checks) CHECK(c.status == Status::Pass);
}

TEST_CASE("nonexistence precondition suite") {
    auto rep = run_suite("nonexistence-preconditions", 0, 5);
    CHECK(rep.all_ok());
    bool found_index_row = false, found_evidence_row = false;
    for (const auto& c : rep.checks) {
        if (c.claim.find("nilpotency index = 5") != std::string::npos) {
            found_index_row = true;
            CHECK(c.status == Status::Pass);
        }
        if (c.status == Status::EvidenceOnly) found_evidence_row = true;
    }
    CHECK(found_index_row);
    CHECK(found_evidence_row);
}

TEST_CASE("contradiction probes reproduce the proofs' clashes") {
    for (const auto& id : probe_ids()) {
        auto rep = run_contradiction_probe(id);
        REQUIRE_MESSAGE(rep.checks.size() == 1, id);
        CHECK_MESSAGE(rep.checks[0].status == Status::EvidenceOnly, id);
        CHECK_MESSAGE(rep.checks[0].detail.find("incompatible") != std::string::npos, id);
    }
    CHECK_THROWS_AS(run_contradiction_probe("thm9.9-bogus"), UnknownCase);
}

TEST_CASE("probe details carry the forced values") {
    auto rep = run_contradiction_probe("thm3.2-ad3.4");
    CHECK(rep.checks[0].detail.find("alpha_33 = 0") != std::string::npos);
    CHECK(rep.checks[0].detail.find("alpha_33 = -1") != std::string::npos);

    auto rep34 = run_contradiction_probe("thm3.4-ad3.19");
    CHECK(rep34.checks[0].detail.find("alpha_13 = 0") != std::string::npos);
    CHECK(rep34.checks[0].detail.find("alpha_13 = 1") != std::string::npos);
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(run_suite("bogus", 0, 5), UnknownSuite);
}

TEST_CASE("suite reports are deterministic") {
    auto a = run_suite("ad4-thm3", 0, 3, data_dir());
    auto b = run_suite("ad4-thm3", 0, 3, data_dir());
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));

    auto s1 = run_suite("ad3", 7, 4);
    auto s2 = run_suite("ad3", 7, 4);
    CHECK(s1.to_json().dump(2) == s2.to_json().dump(2));
}

TEST_CASE("seeded sampling changes the grid but not correctness") {
    auto rep = run_suite("as3", 12345, 5);
    CHECK(rep.all_ok());
}

TEST_CASE("worker count does not affect results or report bytes") {
    setenv("ADW_THREADS", "1", 1);
    auto rep1 = run_suite("ad4-thm4", 0, 3, data_dir()).to_json().dump();
    auto d1 = instantiate_ad("AD4.20", {{"alpha", Scalar(2)}});
    auto d2 = instantiate_ad("AD4.23", {{"alpha", Scalar(2)}});
    auto miss1 = search_witness(d1, d2, AutFamilyGrid{"As4.8", {}});
    auto s1 = instantiate_ad("AD3.8", {{"alpha", Scalar(1)}, {"beta", Scalar(0)}});
    auto s2 = instantiate_ad("AD3.8", {{"alpha", Scalar(0)}, {"beta", Scalar(-1)}});
    auto hit1 = search_witness(s1, s2, StructuredGrid{});

    setenv("ADW_THREADS", "3", 1);
    auto rep3 = run_suite("ad4-thm4", 0, 3, data_dir()).to_json().dump();
    auto miss3 = search_witness(d1, d2, AutFamilyGrid{"As4.8", {}});
    auto hit3 = search_witness(s1, s2, StructuredGrid{});
    unsetenv("ADW_THREADS");

    CHECK(rep1 == rep3);
    CHECK(miss1.witness.has_value() == miss3.witness.has_value());
    CHECK(miss1.candidates == miss3.candidates);
    REQUIRE(hit1.witness.has_value());
    REQUIRE(hit3.witness.has_value());
    CHECK(*hit1.witness == *hit3.witness);  // first-in-grid-order, not first-finished
}

TEST_CASE("json report shape") {
    auto rep = run_suite("nonexistence-preconditions", 0, 5);
    auto j = rep.to_json();
    CHECK(j.at("suite") == "nonexistence-preconditions");
    CHECK(j.at("checks").is_array());
    CHECK_FALSE(j.contains("elapsed_ms"));
    for (const auto& c : j.at("checks")) {
        CHECK(c.contains("claim"));
        CHECK(c.contains("anchor"));
        CHECK(c.contains("status"));
    }
}
