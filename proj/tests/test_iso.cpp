#include "doctest.h"

#include <random>

#include "adw/iso.hpp"
#include "adw/json_io.hpp"

using namespace adw;

namespace {

LinearMap random_change(int n, std::mt19937_64& rng) {
    static const std::vector<Scalar> pool = {Scalar(0),    Scalar(1),    Scalar(-1), Scalar(2),
                                             Scalar(1, 2), Scalar::i()};
    for (;;) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = pool[rng() % pool.size()];
        if (!det(m).is_zero()) return LinearMap(m);
    }
}

} // namespace

TEST_CASE("witness verification") {
    auto d = instantiate_ad("AD4.9", {{"alpha", Scalar(2)}, {"beta", Scalar(1, 2)}});
    CHECK(verify_iso_witness(d, d, LinearMap::identity(4)));

    auto d1 = instantiate_ad("AD4.38", {{"alpha", Scalar(0)}}, false);
    auto d2 = instantiate_ad("AD4.39", {{"alpha", Scalar(0)}, {"beta", Scalar(-1, 2)}});
    CHECK(verify_iso_witness(d1, d2, LinearMap::identity(4)));

    Mat wrong = Mat::identity(4);
    wrong.at(0, 0) = Scalar(2);
    CHECK_FALSE(verify_iso_witness(d, d, LinearMap(wrong)));
    CHECK_THROWS_AS(verify_iso_witness(d, instantiate_ad("AD3.5"), LinearMap::identity(3)),
                    DimensionMismatch);
}

TEST_CASE("fingerprint of the trivial algebra") {
    auto f = fingerprint(instantiate_ad("AD3.3"));
    CHECK(f.dim == 3);
    CHECK(f.dim_image_r == 0);
    CHECK(f.dim_image_l == 0);
    CHECK(f.dim_center_ad == 3);
    CHECK(f.dim_center_assoc == 3);
    CHECK(f.two_nilpotent);
    CHECK(f.power_dims == std::vector<int>{3, 0});
}

TEST_CASE("fingerprint separates AD3.5 from AD3.10") {
    auto f5 = fingerprint(instantiate_ad("AD3.5"));
    auto f10 = fingerprint(instantiate_ad("AD3.10"));
    CHECK(f5.dim_image_r == 1);
    CHECK(f10.dim_image_r == 2);
    CHECK(f5 != f10);
}

TEST_CASE("fingerprint power dims come from the sum filtration") {
    auto f = fingerprint(instantiate_ad("AD4.1"));
    CHECK(f.power_dims == std::vector<int>{4, 1, 0});
    CHECK(f.extra.size() == Fingerprint::extra_labels().size());
}

TEST_CASE("fingerprint is invariant under simultaneous basis change") {
    std::mt19937_64 rng(86);
    for (const auto* e : Catalog::instance().list({{}, Kind::Ad, {}, false})) {
        ParamMap pt = generic_point(*e);
        auto d = instantiate_ad(e->id, pt);
        auto f = fingerprint(d);
        for (int trial = 0; trial < 20; ++trial) {
            LinearMap p = random_change(d.dim, rng);
            CHECK_MESSAGE(fingerprint(apply_basis_change(d, p)) == f, e->id);
        }
    }
}

TEST_CASE("structured grid search finds the identity first for equal algebras") {
    auto d = instantiate_ad("AD3.8", {{"alpha", Scalar(1)}, {"beta", Scalar(0)}});
    auto res = search_witness(d, d, StructuredGrid{});
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == LinearMap::identity(3));
}

TEST_CASE("search realizes the AD3.8 coincidence") {
    auto d1 = instantiate_ad("AD3.8", {{"alpha", Scalar(1)}, {"beta", Scalar(0)}});
    auto d2 = instantiate_ad("AD3.8", {{"alpha", Scalar(0)}, {"beta", Scalar(-1)}});
    auto res = search_witness(d1, d2, StructuredGrid{});
    REQUIRE(res.witness.has_value());
    CHECK(verify_iso_witness(d1, d2, *res.witness));
}

TEST_CASE("search realizes the AD3.15 coincidence") {
    ParamMap p1 = {{"alpha", Scalar(1)}, {"beta", Scalar(1)}, {"gamma", Scalar(1)}, {"lambda", Scalar(0)}};
    ParamMap p2 = {{"alpha", Scalar(1)}, {"beta", Scalar(-1)}, {"gamma", Scalar(-1)}, {"lambda", Scalar(0)}};
    auto d1 = instantiate_ad("AD3.15", p1);
    auto d2 = instantiate_ad("AD3.15", p2);
    auto res = search_witness(d1, d2, StructuredGrid{});
    REQUIRE(res.witness.has_value());
    CHECK(verify_iso_witness(d1, d2, *res.witness));
}

TEST_CASE("aut-family grid search works over a 4-dim base") {
    auto d = instantiate_ad("AD4.9", {{"alpha", Scalar(2)}, {"beta", Scalar(1, 2)}});
    auto res = search_witness(d, d, AutFamilyGrid{"As4.3", {}});
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == LinearMap::identity(4));
}

TEST_CASE("search requires identical sum products") {
    CHECK_THROWS_AS(search_witness(instantiate_ad("AD3.5"), instantiate_ad("AD3.10"),
                                   StructuredGrid{}),
                    PrereqFailed);
}

TEST_CASE("witness files round-trip and re-verify") {
    auto d1 = instantiate_ad("AD3.8", {{"alpha", Scalar(2)}, {"beta", Scalar(0)}});
    auto d2 = instantiate_ad("AD3.8", {{"alpha", Scalar(0)}, {"beta", Scalar(-2)}});
    auto res = search_witness(d1, d2, StructuredGrid{});
    REQUIRE(res.witness.has_value());
    IsoWitness w{"AD3.8", {{"alpha", Scalar(2)}, {"beta", Scalar(0)}},
                 "AD3.8", {{"alpha", Scalar(0)}, {"beta", Scalar(-2)}}, *res.witness};
    CHECK(w.reverify());
    auto j = witness_to_json(w);
    auto back = witness_from_json(j);
    CHECK(back.source_id == "AD3.8");
    CHECK(back.map == w.map);
    CHECK(back.reverify());
}

TEST_CASE("scalar and algebra JSON round-trips") {
    auto d = instantiate_ad("AD4.13", {{"lambda", Scalar(2)}, {"alpha", Scalar::i()},
                                       {"beta", Scalar(1, 2)}, {"gamma", Scalar(-1)}});
    CHECK(ad_from_json(algebra_to_json(d)) == d);
    CHECK(scalar_from_json(scalar_to_json(Scalar(Rational(-3, 7), Rational(22, 5)))) ==
          Scalar(Rational(-3, 7), Rational(22, 5)));
}
