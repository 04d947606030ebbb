#pragma once

// Residual checkers for the defining laws: associativity of one product,
// the seven anti-dendriform identities id1..id7 of the pair (|>, <|), and
// 2-nilpotency. Checking on basis triples suffices by multilinearity, so each
// run is exact and complete at n^3 cost.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "adw/algebra.hpp"

namespace adw {

struct Violation {
    std::string identity_id;    // one of: assoc, id1..id7, twonilp
    std::array<int, 3> triple;  // 1-based basis indices
    Vec residual;               // lhs - rhs, never zero
};

inline std::vector<Violation> check_associative(const AssocAlgebra& a) {
    std::vector<Violation> out;
    int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ek = unit_vec(n, k);
                Vec lhs = multiply(a.mul, a.mul.basis_product(i, j), ek);
                Vec rhs = multiply(a.mul, unit_vec(n, i), a.mul.basis_product(j, k));
                Vec res = vec_sub(lhs, rhs);
                if (!is_zero_vec(res)) out.push_back({"assoc", {i + 1, j + 1, k + 1}, res});
            }
    return out;
}

namespace detail {

// Residuals of id1..id7 at one basis triple (0-based indices), in label order.
// With x.y = x|>y + x<|y:
//   id1: (x|>y)<|z - x|>(y<|z)
//   id2: x|>(y|>z) + (x.y)|>z
//   id3: x|>(y|>z) + x<|(y.z)
//   id4: x|>(y|>z) - (x<|y)<|z
//   id5: (x.y)|>z - x<|(y.z)
//   id6: (x.y)|>z + (x<|y)<|z
//   id7: x<|(y.z) + (x<|y)<|z
inline std::array<Vec, 7> ad_residuals(const AdAlgebra& d, const ProductTensor& sum, int i, int j, int k) {
    int n = d.dim;
    Vec ei = unit_vec(n, i), ek = unit_vec(n, k);
    Vec r_jk = d.rprod.basis_product(j, k);   // y|>z
    Vec l_jk = d.lprod.basis_product(j, k);   // y<|z
    Vec r_ij = d.rprod.basis_product(i, j);   // x|>y
    Vec l_ij = d.lprod.basis_product(i, j);   // x<|y
    Vec s_ij = sum.basis_product(i, j);       // x.y
    Vec s_jk = sum.basis_product(j, k);       // y.z

    Vec a1 = multiply(d.lprod, r_ij, ek);     // (x|>y)<|z
    Vec a2 = multiply(d.rprod, ei, l_jk);     // x|>(y<|z)
    Vec b1 = multiply(d.rprod, ei, r_jk);     // x|>(y|>z)
    Vec b2 = multiply(d.rprod, s_ij, ek);     // (x.y)|>z
    Vec b3 = multiply(d.lprod, ei, s_jk);     // x<|(y.z)
    Vec b4 = multiply(d.lprod, l_ij, ek);     // (x<|y)<|z

    return {
        vec_sub(a1, a2),        // id1
        vec_add(b1, b2),        // id2
        vec_add(b1, b3),        // id3
        vec_sub(b1, b4),        // id4
        vec_sub(b2, b3),        // id5
        vec_add(b2, b4),        // id6
        vec_add(b3, b4),        // id7
    };
}

} // namespace detail

// Violations come back in (identity, triple) order.
inline std::vector<Violation> check_anti_dendriform(const AdAlgebra& d) {
    std::vector<Violation> out;
    int n = d.dim;
    ProductTensor sum = d.rprod + d.lprod;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                auto res = detail::ad_residuals(d, sum, i, j, k);
                for (int id = 0; id < 7; ++id)
                    if (!is_zero_vec(res[static_cast<size_t>(id)]))
                        out.push_back({"id" + std::to_string(id + 1),
                                       {i + 1, j + 1, k + 1},
                                       res[static_cast<size_t>(id)]});
            }
    std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
        return a.triple < b.triple;
    });
    return out;
}

inline bool check_2nilpotent_assoc(const AssocAlgebra& a) {
    int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (!is_zero_vec(multiply(a.mul, a.mul.basis_product(i, j), unit_vec(n, k)))) return false;
                if (!is_zero_vec(multiply(a.mul, unit_vec(n, i), a.mul.basis_product(j, k)))) return false;
            }
    return true;
}

// All eight mixed triple products over {|>, <|} vanish.
inline bool check_2nilpotent_ad(const AdAlgebra& d) {
    int n = d.dim;
    const ProductTensor* prods[2] = {&d.rprod, &d.lprod};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (const ProductTensor* inner : prods)
                    for (const ProductTensor* outer : prods) {
                        if (!is_zero_vec(multiply(*outer, inner->basis_product(i, j), unit_vec(n, k)))) return false;
                        if (!is_zero_vec(multiply(*outer, unit_vec(n, i), inner->basis_product(j, k)))) return false;
                    }
    return true;
}

} // namespace adw
