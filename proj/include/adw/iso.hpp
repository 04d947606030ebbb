#pragma once

// Isomorphism machinery: basis-change-invariant fingerprints (the
// non-isomorphism evidence layer), witness verification, and bounded witness
// search over automorphism families / structured matrix grids.

#include <optional>
#include <sstream>
#include <variant>

#include "adw/catalog.hpp"
#include "adw/identities.hpp"
#include "adw/parallel.hpp"

namespace adw {

namespace detail {

inline ProductTensor sym_part(const ProductTensor& t) {
    ProductTensor s(t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k) s.at(i, j, k) = t.at(i, j, k) + t.at(j, i, k);
    return s;
}

inline ProductTensor antisym_part(const ProductTensor& t) {
    ProductTensor s(t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k) s.at(i, j, k) = t.at(i, j, k) - t.at(j, i, k);
    return s;
}

inline SubspaceBasis one_sided_annihilator(const ProductTensor& t, Side side) {
    std::vector<Vec> rows;
    append_annihilator_rows(rows, t, side);
    return solve_annihilator(t.dim(), rows);
}

inline SubspaceBasis two_sided_annihilator(const ProductTensor& t) {
    std::vector<Vec> rows;
    append_annihilator_rows(rows, t, Side::Left);
    append_annihilator_rows(rows, t, Side::Right);
    return solve_annihilator(t.dim(), rows);
}

} // namespace detail

// Every component is the dimension of a canonically-defined subspace, hence
// invariant under simultaneous basis change of both products. `extra` holds
// the sharper separators, in the fixed order listed in extra_labels().
struct Fingerprint {
    int dim = 0;
    std::vector<int> power_dims;   // filtration dims of the sum algebra
    int dim_center_ad = 0;
    int dim_center_assoc = 0;
    int dim_image_r = 0;           // rank of span{x |> y}
    int dim_image_l = 0;
    bool two_nilpotent = false;
    std::vector<int> extra;

    bool operator==(const Fingerprint& o) const = default;

    static const std::vector<std::string>& extra_labels() {
        static const std::vector<std::string> labels = {
            "im_sym_r",    "im_asym_r",    "im_sym_l",    "im_asym_l",
            "rad_sym_r",   "rad_asym_r",   "rad_sym_l",   "rad_asym_l",
            "lann_r",      "rann_r",       "cen_r",       "lann_l",
            "rann_l",      "cen_l",        "im_r&im_l",   "im_r+im_l",
            "im_diff",     "rad_sym_diff", "rad_asym_diff", "cen_diff",
            "im_r&sq",     "im_l&sq",      "im_diff&sq",
            "im_asym_r&im_asym_l", "im_sym_r&im_sym_l"};
        return labels;
    }

    std::string str() const {
        std::ostringstream os;
        os << "dim=" << dim << " power=[";
        for (size_t i = 0; i < power_dims.size(); ++i) os << (i ? "," : "") << power_dims[i];
        os << "] z_ad=" << dim_center_ad << " z_as=" << dim_center_assoc
           << " im_r=" << dim_image_r << " im_l=" << dim_image_l
           << " 2nilp=" << (two_nilpotent ? "yes" : "no") << " extra=[";
        for (size_t i = 0; i < extra.size(); ++i) os << (i ? "," : "") << extra[i];
        os << "]";
        return os.str();
    }
};

inline Fingerprint fingerprint(const AdAlgebra& d) {
    Fingerprint f;
    f.dim = d.dim;
    AssocAlgebra sum = sum_product(d);
    for (const auto& s : power_filtration(sum, d.dim + 2)) f.power_dims.push_back(s.dim());
    f.dim_center_ad = center_ad(d).dim();
    f.dim_center_assoc = center_assoc(sum).dim();

    SubspaceBasis im_r = image_space(d.rprod);
    SubspaceBasis im_l = image_space(d.lprod);
    f.dim_image_r = im_r.dim();
    f.dim_image_l = im_l.dim();
    f.two_nilpotent = check_2nilpotent_ad(d);

    ProductTensor sym_r = detail::sym_part(d.rprod);
    ProductTensor asym_r = detail::antisym_part(d.rprod);
    ProductTensor sym_l = detail::sym_part(d.lprod);
    ProductTensor asym_l = detail::antisym_part(d.lprod);
    ProductTensor diff = d.rprod - d.lprod;
    ProductTensor sym_diff = detail::sym_part(diff);
    ProductTensor asym_diff = detail::antisym_part(diff);

    SubspaceBasis im_sym_r = image_space(sym_r), im_asym_r = image_space(asym_r);
    SubspaceBasis im_sym_l = image_space(sym_l), im_asym_l = image_space(asym_l);
    SubspaceBasis im_diff = image_space(diff);
    SubspaceBasis square = power_filtration(sum, 3).size() > 1 ? power_filtration(sum, 3)[1]
                                                               : SubspaceBasis(d.dim);

    f.extra = {
        im_sym_r.dim(),
        im_asym_r.dim(),
        im_sym_l.dim(),
        im_asym_l.dim(),
        detail::two_sided_annihilator(sym_r).dim(),
        detail::two_sided_annihilator(asym_r).dim(),
        detail::two_sided_annihilator(sym_l).dim(),
        detail::two_sided_annihilator(asym_l).dim(),
        detail::one_sided_annihilator(d.rprod, detail::Side::Left).dim(),
        detail::one_sided_annihilator(d.rprod, detail::Side::Right).dim(),
        detail::two_sided_annihilator(d.rprod).dim(),
        detail::one_sided_annihilator(d.lprod, detail::Side::Left).dim(),
        detail::one_sided_annihilator(d.lprod, detail::Side::Right).dim(),
        detail::two_sided_annihilator(d.lprod).dim(),
        intersection_dim(im_r, im_l),
        sum_spaces(im_r, im_l).dim(),
        im_diff.dim(),
        detail::two_sided_annihilator(sym_diff).dim(),
        detail::two_sided_annihilator(asym_diff).dim(),
        detail::two_sided_annihilator(diff).dim(),
        intersection_dim(im_r, square),
        intersection_dim(im_l, square),
        intersection_dim(im_diff, square),
        intersection_dim(im_asym_r, im_asym_l),
        intersection_dim(im_sym_r, im_sym_l),
    };
    return f;
}

// True iff p intertwines both products: p(x |>1 y) = p(x) |>2 p(y) and the
// same for <|. Checking basis pairs suffices by bilinearity.
inline bool verify_iso_witness(const AdAlgebra& d1, const AdAlgebra& d2, const LinearMap& p) {
    if (d1.dim != d2.dim || p.dim() != d1.dim)
        throw DimensionMismatch("witness verification: dimension mismatch");
    for (int i = 0; i < d1.dim; ++i)
        for (int j = 0; j < d1.dim; ++j) {
            Vec pi = p.matrix().col(i), pj = p.matrix().col(j);
            if (p.apply(d1.rprod.basis_product(i, j)) != multiply(d2.rprod, pi, pj)) return false;
            if (p.apply(d1.lprod.basis_product(i, j)) != multiply(d2.lprod, pi, pj)) return false;
        }
    return true;
}

// --------------------------------------------------------------------------
// Witness search

struct AutFamilyGrid {
    std::string base_id;   // catalog entry whose automorphism families to walk
    ParamMap base_params;
};
struct StructuredGrid {};  // permutation x diagonal x unit shear (dim 3 bases)

using SearchStrategy = std::variant<AutFamilyGrid, StructuredGrid>;

struct SearchResult {
    std::optional<LinearMap> witness;  // first hit in grid order
    size_t candidates = 0;             // size of the scanned candidate space
};

namespace detail {

inline const std::vector<Scalar>& mult_grid() {
    static const std::vector<Scalar> g = {Scalar(1),    Scalar(-1),  Scalar(2),
                                          Scalar(1, 2), Scalar::i(), -Scalar::i()};
    return g;
}
inline const std::vector<Scalar>& add_grid() {
    static const std::vector<Scalar> g = {Scalar(0),    Scalar(1),   Scalar(-1), Scalar(2),
                                          Scalar(1, 2), Scalar::i(), -Scalar::i()};
    return g;
}

// Candidate matrices for one automorphism template, indexed by a mixed-radix
// odometer over the per-parameter grids. Returns nullopt when the tuple fails
// the template's validity constraint or is singular.
struct TemplateSpace {
    const CatalogEntry* entry;
    const AutTemplate* tmpl;
    ParamMap base_params;
    std::vector<std::vector<Scalar>> grids;
    size_t total = 1;

    TemplateSpace(const CatalogEntry& e, const AutTemplate& t, ParamMap base)
        : entry(&e), tmpl(&t), base_params(std::move(base)) {
        for (const auto& p : t.params) {
            grids.push_back(t.grid_for(p));
            total *= grids.back().size();
        }
    }

    std::optional<LinearMap> candidate(size_t idx) const {
        ParamMap p = base_params;
        size_t rem = idx;
        for (size_t m = 0; m < grids.size(); ++m) {
            p[tmpl->params[m]] = grids[m][rem % grids[m].size()];
            rem /= grids[m].size();
        }
        if (!tmpl->validity(p)) return std::nullopt;
        Mat mat(entry->dim, entry->dim);
        for (int r = 0; r < entry->dim; ++r)
            for (int c = 0; c < entry->dim; ++c) {
                const Expr& cell = tmpl->mat[static_cast<size_t>(r)][static_cast<size_t>(c)];
                try {
                    mat.at(r, c) = cell.eval(p);
                } catch (const DivisionByZero&) {
                    return std::nullopt;
                }
            }
        if (det(mat).is_zero()) return std::nullopt;
        return LinearMap(mat);
    }
};

// Permutation x diagonal x unit-shear candidates in dimension n. Identity is
// candidate 0 by construction.
struct StructuredSpace {
    int n;
    std::vector<std::vector<int>> perms;
    size_t diag_total;
    size_t shear_total;  // 1 (no shear) + positions * values
    size_t total;

    explicit StructuredSpace(int dim) : n(dim) {
        std::vector<int> p(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        diag_total = 1;
        for (int i = 0; i < n; ++i) diag_total *= mult_grid().size();
        shear_total = 1 + static_cast<size_t>(n) * (n - 1) * mult_grid().size();
        total = perms.size() * diag_total * shear_total;
    }

    LinearMap candidate(size_t idx) const {
        size_t shear_idx = idx % shear_total;
        idx /= shear_total;
        size_t diag_idx = idx % diag_total;
        idx /= diag_total;
        const auto& perm = perms[idx];

        Mat m(n, n);
        size_t rem = diag_idx;
        for (int j = 0; j < n; ++j) {
            Scalar dj = mult_grid()[rem % mult_grid().size()];
            rem /= mult_grid().size();
            m.at(perm[static_cast<size_t>(j)], j) = dj;  // column j = d_j * e_{perm(j)}
        }
        if (shear_idx > 0) {
            size_t s = shear_idx - 1;
            Scalar c = mult_grid()[s % mult_grid().size()];
            s /= mult_grid().size();
            int pos = static_cast<int>(s);  // off-diagonal slot, row-major
            int row = pos / (n - 1);
            int col = pos % (n - 1);
            if (col >= row) ++col;
            Mat shear = Mat::identity(n);
            shear.at(row, col) = c;
            m = mat_mul(m, shear);
        }
        return LinearMap(std::move(m));  // always invertible by construction
    }
};

} // namespace detail

// First verified witness in grid order, or nothing. Precondition: the two sum
// products coincide tensor-identically (a witness additively intertwines the
// sums, so with a shared sum table the map must be an automorphism of it;
// that is what makes a family/grid walk exhaustive enough to be meaningful).
// budget caps the scanned candidate space. NotFound is not a proof.
inline SearchResult search_witness(const AdAlgebra& d1, const AdAlgebra& d2,
                                   const SearchStrategy& strategy, size_t budget = 100000) {
    if (d1.dim != d2.dim) throw DimensionMismatch("witness search: dimension mismatch");
    if (sum_product(d1).mul != sum_product(d2).mul)
        throw PrereqFailed("witness search requires tensor-identical sum products");

    SearchResult result;
    if (std::holds_alternative<AutFamilyGrid>(strategy)) {
        const auto& cfg = std::get<AutFamilyGrid>(strategy);
        const CatalogEntry& e = Catalog::instance().entry(cfg.base_id);
        std::vector<detail::TemplateSpace> spaces;
        for (const auto& t : e.automorphisms) spaces.emplace_back(e, t, cfg.base_params);
        for (const auto& space : spaces) {
            size_t n = std::min(space.total, budget - std::min(budget, result.candidates));
            auto hit = parallel_find_first(n, [&](size_t idx) {
                auto cand = space.candidate(idx);
                return cand && verify_iso_witness(d1, d2, *cand);
            });
            result.candidates += n;
            if (hit) {
                result.witness = space.candidate(*hit);
                return result;
            }
            if (result.candidates >= budget) break;
        }
        return result;
    }

    detail::StructuredSpace space(d1.dim);
    size_t n = std::min(space.total, budget);
    auto hit = parallel_find_first(n, [&](size_t idx) {
        return verify_iso_witness(d1, d2, space.candidate(idx));
    });
    result.candidates = n;
    if (hit) result.witness = space.candidate(*hit);
    return result;
}

// Persisted witness: source/target instances plus the intertwining map.
struct IsoWitness {
    std::string source_id;
    ParamMap source_params;
    std::string target_id;
    ParamMap target_params;
    LinearMap map;

    // Re-instantiates both sides (constraints not enforced: coincidence
    // witnesses live at boundary points) and checks the map from scratch.
    bool reverify() const {
        AdAlgebra d1 = instantiate_ad(source_id, source_params, false);
        AdAlgebra d2 = instantiate_ad(target_id, target_params, false);
        return verify_iso_witness(d1, d2, map);
    }
};

} // namespace adw
