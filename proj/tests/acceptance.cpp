// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Criterion 1 is expected to fail on exactly one family: the published
// AD3.17 table is internally inconsistent (its violations are pinned below
// and in the catalog note), and this binary reports that honestly rather
// than patching the table.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "adw/verify.hpp"

using namespace adw;

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("ADW_DATA_DIR")) return env;
    return "data";
}

struct Outcome {
    bool pass;
    std::string detail;
};

long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

Outcome criterion1_identities() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> failures;
    int families = 0;
    for (const auto* e : Catalog::instance().list({{}, Kind::Ad, {}, false})) {
        ++families;
        auto points = sample_points(*e, 5);
        if (!e->params.empty() && points.size() < 5)
            failures.push_back(e->id + " (only " + std::to_string(points.size()) + " grid points)");
        for (const auto& pt : points)
            if (!check_anti_dendriform(instantiate_ad(e->id, pt)).empty()) {
                failures.push_back(e->id);
                break;
            }
    }
    long elapsed = ms_since(t0);
    std::ostringstream os;
    os << families << " families x >=5 points in " << elapsed << " ms";
    if (!failures.empty()) {
        os << "; violating families:";
        for (const auto& f : failures) os << " " << f;
        os << " (AD3.17 is the published table's own inconsistency: id1/id4/id6/id7 at triple "
              "(1,1,2); see the catalog note and ledger)";
    }
    return {failures.empty() && elapsed < 30000, os.str()};
}

Outcome criterion2_sum_equality() {
    for (const auto* e : Catalog::instance().list({{}, Kind::Ad, {}, true}))
        for (const auto& pt : sample_points(*e, 5))
            if (sum_product(instantiate_ad(e->id, pt)).mul !=
                claimed_assoc_instance(*e, pt).mul)
                return {false, e->id + " sum differs from " + e->claimed_assoc};
    return {true, "every AD entry sums tensor-identically to its claimed associative table"};
}

Outcome criterion3_centers() {
    for (const auto* e : Catalog::instance().list({4, Kind::Assoc, {}, false})) {
        std::vector<int> idx0;
        for (int k : e->claimed_center) idx0.push_back(k - 1);
        for (const auto& pt : sample_points(*e, 5))
            if (center_assoc(instantiate_assoc(e->id, pt)) != SubspaceBasis::standard(4, idx0))
                return {false, e->id + " center differs from the table column"};
    }
    for (const auto* e : Catalog::instance().list({4, Kind::Ad, {}, true}))
        for (const auto& pt : sample_points(*e, 5))
            if (center_ad(instantiate_ad(e->id, pt)) != SubspaceBasis::standard(4, {3}))
                return {false, e->id + " AD-center differs from <e_4>"};
    return {true, "As4 centers match the table column; every AD4 family has AD-center <e_4>"};
}

Outcome criterion4_nilpotency() {
    for (const auto* e : Catalog::instance().list({{}, Kind::Assoc, {}, false}))
        for (const auto& pt : sample_points(*e, 5)) {
            auto idx = nilpotency_index(instantiate_assoc(e->id, pt));
            if (!idx || *idx > e->dim + 1)
                return {false, e->id + " is not nilpotent of index <= dim+1"};
        }
    if (nilpotency_index(instantiate_assoc("As4.16")) != 5)
        return {false, "As4.16 index is not 5"};
    if (nilpotency_index(instantiate_assoc("As3.6")) != 4)
        return {false, "As3.6 index is not 4"};
    return {true, "all associative entries nilpotent with index <= dim+1; As4.16 = 5, As3.6 = 4"};
}

Outcome criterion5_quotients() {
    for (const auto* e : Catalog::instance().list({4, Kind::Ad, {}, true}))
        for (const auto& pt : sample_points(*e, 5)) {
            auto d = instantiate_ad(e->id, pt);
            auto z = SubspaceBasis::standard(4, {3});
            if (!is_ideal(d, z)) return {false, e->id + ": <e_4> is not an ideal"};
            auto q = quotient_by_ideal(d, z);
            if (!check_anti_dendriform(q).empty())
                return {false, e->id + ": quotient is not anti-dendriform"};
            if (q != claimed_quotient_instance(*e, pt))
                return {false, e->id + ": quotient differs from " + e->claimed_quotient};
        }
    return {true, "every AD4 quotient by <e_4> is anti-dendriform and equals its named "
                  "3-dim family after the canonical complement choice"};
}

Outcome criterion6_coincidences() {
    SuiteReport rep;
    verify_detail::suite_coincidences(rep, data_dir());
    int pass = 0;
    for (const auto& c : rep.checks)
        if (c.status == Status::Pass) ++pass;
    if (pass != 8)
        return {false, std::to_string(pass) + "/8 persisted witnesses re-verified"};
    // Fresh generation stays inside the per-claim budget.
    long worst = 0;
    for (const auto& claim : verify_detail::coincidence_claims()) {
        auto t0 = std::chrono::steady_clock::now();
        AdAlgebra d1 = instantiate_ad(claim.source_id, claim.source_params, false);
        AdAlgebra d2 = instantiate_ad(claim.target_id, claim.target_params, false);
        SearchStrategy strat;
        if (claim.structured) strat = StructuredGrid{};
        else strat = AutFamilyGrid{claim.aut_base, ParamMap{}};
        auto res = search_witness(d1, d2, strat);
        long elapsed = ms_since(t0);
        worst = std::max(worst, elapsed);
        if (!res.witness) return {false, "fresh search failed for " + claim.source_id};
        if (elapsed > 60000) return {false, "fresh search exceeded 60 s"};
    }
    return {true, "8/8 persisted witnesses re-verify; fresh generation worst case " +
                      std::to_string(worst) + " ms (budget 60 s per claim)"};
}

Outcome criterion7_automorphisms() {
    SuiteReport rep;
    verify_detail::suite_as4(rep, 0, 5);
    int aut_rows = 0;
    for (const auto& c : rep.checks) {
        if (c.claim.find("automorphism family") == std::string::npos) continue;
        ++aut_rows;
        if (c.status != Status::Pass) return {false, c.claim + " -- " + c.detail};
    }
    return {true, std::to_string(aut_rows) + " automorphism families, each with 10 verified "
                  "grid instantiations per admissible base point"};
}

Outcome criterion8_noniso() {
    verify_detail::PairEvidence tally;
    for (int g = 1; g <= 8; ++g) {
        SuiteReport rep;
        verify_detail::suite_ad4_group(rep, g, 0, 5, &tally);
        for (const auto& c : rep.checks)
            if (c.status == Status::Fail) return {false, c.claim};
    }
    int pairs = tally.separated_by_fingerprint + tally.searched_no_witness + tally.cross_witness;
    double frac = pairs ? static_cast<double>(tally.separated_by_fingerprint) / pairs : 0.0;
    std::ostringstream os;
    os << tally.separated_by_fingerprint << "/" << pairs << " pairs separated by fingerprint ("
       << static_cast<int>(frac * 1000) / 10.0 << "%), " << tally.searched_no_witness
       << " by exhaustive grid search, " << tally.cross_witness << " cross-witnesses";
    return {tally.cross_witness == 0 && frac >= 0.9, os.str()};
}

Outcome criterion9_probes() {
    int confirmed = 0;
    for (const auto& id : probe_ids()) {
        auto rep = run_contradiction_probe(id);
        if (rep.checks.size() == 1 && rep.checks[0].status == Status::EvidenceOnly) ++confirmed;
    }
    return {confirmed >= 6, std::to_string(confirmed) + "/6 nonexistence cases reproduce their "
                            "incompatible coefficient constraints"};
}

Outcome criterion10_determinism() {
    auto a = run_suite("all", 0, 5, data_dir()).to_json().dump(2);
    auto b = run_suite("all", 0, 5, data_dir()).to_json().dump(2);
    if (a != b) return {false, "verify all --seed 0 --samples 5 is not byte-identical"};
    return {true, "two runs of `verify all --seed 0 --samples 5` produce byte-identical JSON (" +
                      std::to_string(a.size()) + " bytes)"};
}

} // namespace

int main() {
    struct Criterion {
        int num;
        const char* title;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "identity certification (23 AD3 + 47 AD4 families, exact, < 30 s)", criterion1_identities},
        {2, "associated-algebra equality", criterion2_sum_equality},
        {3, "centers", criterion3_centers},
        {4, "nilpotency", criterion4_nilpotency},
        {5, "quotient claims", criterion5_quotients},
        {6, "coincidence witnesses", criterion6_coincidences},
        {7, "automorphism table fidelity", criterion7_automorphisms},
        {8, "non-isomorphism evidence", criterion8_noniso},
        {9, "contradiction probes", criterion9_probes},
        {10, "determinism", criterion10_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out{false, ""};
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        if (!out.pass) ++failures;
        std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.num << ": " << c.title
                  << " -- " << out.detail << "\n";
    }
    std::cout << (failures ? "ACCEPTANCE: FAIL (" : "ACCEPTANCE: PASS (")
              << (10 - failures) << "/10 criteria)\n";
    return failures ? 1 : 0;
}
