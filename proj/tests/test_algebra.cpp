#include "doctest.h"

#include <random>

#include "adw/algebra.hpp"
#include "adw/catalog.hpp"

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

TEST_CASE("multiply evaluates the bilinear product") {
    auto as36 = instantiate_assoc("As3.6");
    CHECK(multiply(as36.mul, unit_vec(3, 0), unit_vec(3, 1)) == unit_vec(3, 2));
    CHECK(multiply(as36.mul, zero_vec(3), unit_vec(3, 1)) == zero_vec(3));

    auto as43 = instantiate_assoc("As4.3");
    CHECK(multiply(as43.mul, unit_vec(4, 2), unit_vec(4, 0)) == unit_vec(4, 3));
    CHECK_THROWS_AS(multiply(as43.mul, zero_vec(3), zero_vec(4)), DimensionMismatch);

    // bilinearity on a random-ish combination
    Vec x = {Scalar(2), Scalar(1, 2), Scalar(0), Scalar(1)};
    Vec y = {Scalar(0), Scalar(3), Scalar(-1), Scalar(0)};
    Vec lhs = multiply(as43.mul, x, y);
    Vec expect = zero_vec(4);
    expect[3] = Scalar(2) * Scalar(3) + Scalar(0) * Scalar(0);  // 2*3*(e1e2->e4) + x3*y1*(e3e1->e4)
    CHECK(lhs == expect);
}

TEST_CASE("sum product reproduces the claimed associative tables") {
    auto ad41 = instantiate_ad("AD4.1");
    CHECK(sum_product(ad41).mul == instantiate_assoc("As4.3").mul);

    AdAlgebra trivial(3);
    CHECK(sum_product(trivial).mul.is_zero());

    // AD3.1 sums to As3.6: e1e2 = 2e3 + (-e3) = e3, etc.
    auto ad31 = instantiate_ad("AD3.1");
    CHECK(sum_product(ad31).mul == instantiate_assoc("As3.6").mul);
}

TEST_CASE("basis change: identity, inverse, group action") {
    auto t = instantiate_ad("AD3.8", {{"alpha", Scalar(2)}, {"beta", Scalar(1, 2)}});
    auto id = LinearMap::identity(3);
    CHECK(apply_basis_change(t, id) == t);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        LinearMap p = random_change(3, rng);
        CHECK(apply_basis_change(apply_basis_change(t, p), p.inverse()) == t);
        LinearMap q = random_change(3, rng);
        CHECK(apply_basis_change(apply_basis_change(t, p), q) ==
              apply_basis_change(t, p.compose(q)));
    }
}

TEST_CASE("shear basis change absorbs an e4 coefficient") {
    // Lifted table with e1 |> e2 = e3 + (1 + a12) e4; the change
    // e3' = e3 + a12 e4 renormalizes the coefficient to 1.
    Scalar a12(5, 3);
    ProductTensor t(4);
    t.at(0, 1, 2) = Scalar(1);
    t.at(0, 1, 3) = Scalar(1) + a12;
    Mat p = Mat::identity(4);
    p.at(3, 2) = a12;  // image of e3 is e3 + a12 e4
    ProductTensor moved = apply_basis_change(t, LinearMap(p));
    CHECK(moved.at(0, 1, 2) == Scalar(1));
    CHECK(moved.at(0, 1, 3) == Scalar(1));
}

TEST_CASE("power filtration and nilpotency index") {
    auto as416 = instantiate_assoc("As4.16");
    auto filt = power_filtration(as416, 6);
    std::vector<int> dims;
    for (auto& s : filt) dims.push_back(s.dim());
    CHECK(dims == std::vector<int>{4, 3, 2, 1, 0});
    CHECK(nilpotency_index(as416) == 5);

    AssocAlgebra zero(4);
    auto zf = power_filtration(zero, 6);
    CHECK(zf.size() == 2);
    CHECK(zf[1].dim() == 0);
    CHECK(nilpotency_index(zero) == 2);

    auto as36 = instantiate_assoc("As3.6");
    auto f36 = power_filtration(as36, 5);
    std::vector<int> d36;
    for (auto& s : f36) d36.push_back(s.dim());
    CHECK(d36 == std::vector<int>{3, 2, 1, 0});
    CHECK(nilpotency_index(as36) == 4);

    CHECK(nilpotency_index(instantiate_assoc("As4.3")) == 3);

    // Idempotent algebra: chain stalls at <e1>, not nilpotent.
    AssocAlgebra idem(2);
    idem.mul.at(0, 0, 0) = Scalar(1);
    CHECK_FALSE(nilpotency_index(idem).has_value());
}

TEST_CASE("associative centers") {
    CHECK(center_assoc(instantiate_assoc("As4.3")) == SubspaceBasis::standard(4, {3}));
    CHECK(center_assoc(instantiate_assoc("As4.2")) == SubspaceBasis::standard(4, {2, 3}));
    CHECK(center_assoc(AssocAlgebra(4)) == SubspaceBasis::full(4));
}

TEST_CASE("anti-dendriform centers") {
    CHECK(center_ad(instantiate_ad("AD4.1")) == SubspaceBasis::standard(4, {3}));
    CHECK(center_ad(AdAlgebra(3)) == SubspaceBasis::full(3));
    CHECK(center_ad(instantiate_ad("AD3.5")) == SubspaceBasis::standard(3, {1, 2}));
}

TEST_CASE("center dimension is basis independent") {
    std::mt19937_64 rng(5150);
    auto a = instantiate_assoc("As4.9");
    auto d = instantiate_ad("AD4.13", {{"lambda", Scalar(1)},
                                       {"alpha", Scalar(2)},
                                       {"beta", Scalar(1, 2)},
                                       {"gamma", Scalar(-1)}});
    for (int trial = 0; trial < 10; ++trial) {
        LinearMap p = random_change(4, rng);
        CHECK(center_assoc(apply_basis_change(a, p)).dim() == center_assoc(a).dim());
        CHECK(center_ad(apply_basis_change(d, p)).dim() == center_ad(d).dim());
    }
}

TEST_CASE("ideals and quotients") {
    auto ad41 = instantiate_ad("AD4.1");
    auto z = center_ad(ad41);
    CHECK(is_ideal(ad41, z));
    CHECK(is_ideal(ad41, SubspaceBasis::full(4)));
    CHECK_FALSE(is_ideal(ad41, SubspaceBasis::standard(4, {0})));

    // AD4.9 / <e4> carries the AD3.5 table: e1|>e1 = e3, e1<|e1 = -e3.
    auto ad49 = instantiate_ad("AD4.9", {{"alpha", Scalar(2)}, {"beta", Scalar(-1)}});
    auto q = quotient_by_ideal(ad49, SubspaceBasis::standard(4, {3}));
    CHECK(q == instantiate_ad("AD3.5"));

    // Quotient by the zero subspace changes nothing.
    CHECK(quotient_by_ideal(ad49, SubspaceBasis(4)) == ad49);

    // Every product of AD4.1 lands in <e4>, so the quotient is trivial.
    auto q41 = quotient_by_ideal(ad41, SubspaceBasis::standard(4, {3}));
    CHECK(q41.rprod.is_zero());
    CHECK(q41.lprod.is_zero());

    CHECK_THROWS_AS(quotient_by_ideal(ad41, SubspaceBasis::standard(4, {0})), NotAnIdeal);
}
