#include "doctest.h"

#include <random>

#include "adw/linalg.hpp"

using namespace adw;

namespace {

Mat random_invertible(int n, std::mt19937_64& rng) {
    static const std::vector<Scalar> pool = {Scalar(0),    Scalar(1),    Scalar(-1), Scalar(2),
                                             Scalar(1, 2), Scalar::i()};
    for (;;) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = pool[rng() % pool.size()];
        if (!det(m).is_zero()) return m;
    }
}

} // namespace

TEST_CASE("rref canonicalizes spans") {
    // span{(1,1,0),(2,2,0),(0,0,3)} = <e1+e2, e3>
    std::vector<Vec> gens = {{Scalar(1), Scalar(1), Scalar(0)},
                             {Scalar(2), Scalar(2), Scalar(0)},
                             {Scalar(0), Scalar(0), Scalar(3)}};
    auto s = SubspaceBasis::span_of(3, gens);
    CHECK(s.dim() == 2);
    CHECK(s.pivots() == std::vector<int>{0, 2});
    CHECK(s.vectors()[0] == Vec{Scalar(1), Scalar(1), Scalar(0)});
    CHECK(s.vectors()[1] == Vec{Scalar(0), Scalar(0), Scalar(1)});
    CHECK(s.contains(Vec{Scalar(3), Scalar(3), Scalar(-1)}));
    CHECK_FALSE(s.contains(Vec{Scalar(1), Scalar(0), Scalar(0)}));
}

TEST_CASE("subspace equality is canonical") {
    std::vector<Vec> g1 = {{Scalar(1), Scalar(2), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)}};
    std::vector<Vec> g2 = {{Scalar(2), Scalar(5), Scalar(1)}, {Scalar(1), Scalar(3), Scalar(1)}};
    CHECK(SubspaceBasis::span_of(3, g1) == SubspaceBasis::span_of(3, g2));
}

TEST_CASE("nullspace of a known matrix") {
    // x + y + z = 0, y - z = 0  ->  span{(-2, 1, 1)}
    Mat m(2, 3);
    m.at(0, 0) = Scalar(1); m.at(0, 1) = Scalar(1); m.at(0, 2) = Scalar(1);
    m.at(1, 1) = Scalar(1); m.at(1, 2) = Scalar(-1);
    auto ns = nullspace(m);
    CHECK(ns.dim() == 1);
    CHECK(ns.vectors()[0] == Vec{Scalar(1), Scalar(-1, 2), Scalar(-1, 2)});
}

TEST_CASE("inverse and determinant properties") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        Mat a = random_invertible(3, rng);
        Mat b = random_invertible(3, rng);
        CHECK(det(mat_mul(a, b)) == det(a) * det(b));
        CHECK(mat_mul(a, inverse(a)) == Mat::identity(3));
    }
    Mat singular(2, 2);
    singular.at(0, 0) = Scalar(1);
    singular.at(1, 0) = Scalar(2);
    CHECK_THROWS_AS(inverse(singular), SingularMap);
}

TEST_CASE("intersection dimension") {
    auto a = SubspaceBasis::standard(4, {0, 1});
    auto b = SubspaceBasis::standard(4, {1, 2});
    CHECK(intersection_dim(a, b) == 1);
    CHECK(sum_spaces(a, b).dim() == 3);
}

TEST_CASE("subspace rendering") {
    CHECK(SubspaceBasis::standard(4, {2, 3}).str() == "<e_3, e_4>");
    CHECK(SubspaceBasis(4).str() == "<0>");
    auto s = SubspaceBasis::span_of(3, {{Scalar(1), Scalar(0), Scalar(-2)}});
    CHECK(s.str() == "<e_1-2*e_3>");
}
