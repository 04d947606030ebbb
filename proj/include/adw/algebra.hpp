#pragma once

// Structure-constant tensors and the operations built on them: bilinear
// products, basis changes, the power filtration, nilpotency indices, centers,
// ideals and quotients.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adw/linalg.hpp"

namespace adw {

// Rank-3 array c[i][j][k]: e_i * e_j = sum_k c[i][j][k] e_k (0-based here;
// all textual/JSON interfaces are 1-based to match the e_i numbering).
class ProductTensor {
public:
    explicit ProductTensor(int dim) : dim_(dim) {
        if (dim < 1) throw Error("product tensor needs dimension >= 1");
        c_.assign(static_cast<size_t>(dim) * dim * dim, Scalar(0));
    }

    int dim() const { return dim_; }

    Scalar& at(int i, int j, int k) { return c_[idx(i, j, k)]; }
    const Scalar& at(int i, int j, int k) const { return c_[idx(i, j, k)]; }

    // e_i * e_j as a coordinate vector.
    Vec basis_product(int i, int j) const {
        Vec v(static_cast<size_t>(dim_));
        for (int k = 0; k < dim_; ++k) v[static_cast<size_t>(k)] = at(i, j, k);
        return v;
    }

    bool is_zero() const { return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); }); }
    bool operator==(const ProductTensor& o) const { return dim_ == o.dim_ && c_ == o.c_; }
    bool operator!=(const ProductTensor& o) const { return !(*this == o); }

    ProductTensor operator+(const ProductTensor& o) const {
        if (dim_ != o.dim_) throw DimensionMismatch("tensor sum dimension mismatch");
        ProductTensor r(dim_);
        for (size_t n = 0; n < c_.size(); ++n) r.c_[n] = c_[n] + o.c_[n];
        return r;
    }
    ProductTensor operator-(const ProductTensor& o) const {
        if (dim_ != o.dim_) throw DimensionMismatch("tensor difference dimension mismatch");
        ProductTensor r(dim_);
        for (size_t n = 0; n < c_.size(); ++n) r.c_[n] = c_[n] - o.c_[n];
        return r;
    }

private:
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
    }

    int dim_;
    std::vector<Scalar> c_;
};

inline Vec multiply(const ProductTensor& t, const Vec& x, const Vec& y) {
    if (static_cast<int>(x.size()) != t.dim() || static_cast<int>(y.size()) != t.dim())
        throw DimensionMismatch("multiply: vector length does not match tensor dimension");
    Vec r(static_cast<size_t>(t.dim()));
    for (int i = 0; i < t.dim(); ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < t.dim(); ++j) {
            if (y[static_cast<size_t>(j)].is_zero()) continue;
            Scalar f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            for (int k = 0; k < t.dim(); ++k) {
                const Scalar& c = t.at(i, j, k);
                if (!c.is_zero()) r[static_cast<size_t>(k)] += f * c;
            }
        }
    }
    return r;
}

struct AssocAlgebra {
    int dim;
    ProductTensor mul;

    explicit AssocAlgebra(int d) : dim(d), mul(d) {}
    AssocAlgebra(int d, ProductTensor m) : dim(d), mul(std::move(m)) {}
    bool operator==(const AssocAlgebra& o) const { return dim == o.dim && mul == o.mul; }
};

// Anti-dendriform pair: rprod is x |> y, lprod is x <| y.
struct AdAlgebra {
    int dim;
    ProductTensor rprod;
    ProductTensor lprod;

    explicit AdAlgebra(int d) : dim(d), rprod(d), lprod(d) {}
    AdAlgebra(int d, ProductTensor r, ProductTensor l)
        : dim(d), rprod(std::move(r)), lprod(std::move(l)) {}
    bool operator==(const AdAlgebra& o) const {
        return dim == o.dim && rprod == o.rprod && lprod == o.lprod;
    }
};

inline AssocAlgebra sum_product(const AdAlgebra& d) {
    return AssocAlgebra(d.dim, d.rprod + d.lprod);
}

// Invertible map; column j of the matrix is the image of e_j in the source
// basis. Construction rejects singular matrices.
class LinearMap {
public:
    explicit LinearMap(Mat m) : m_(std::move(m)) {
        if (m_.rows != m_.cols) throw DimensionMismatch("linear map matrix must be square");
        if (det(m_).is_zero()) throw SingularMap();
    }

    static LinearMap identity(int n) { return LinearMap(Mat::identity(n)); }

    int dim() const { return m_.rows; }
    const Mat& matrix() const { return m_; }

    Vec apply(const Vec& v) const { return mat_vec(m_, v); }
    LinearMap inverse() const { return LinearMap(adw::inverse(m_)); }

    // (p.compose(q))(x) = p(q(x))
    LinearMap compose(const LinearMap& q) const { return LinearMap(mat_mul(m_, q.m_)); }

    bool operator==(const LinearMap& o) const { return m_ == o.m_; }

private:
    Mat m_;
};

// Structure constants in the new basis {p(e_i)}: t'(x, y) = p^{-1}(t(p x, p y)).
inline ProductTensor apply_basis_change(const ProductTensor& t, const LinearMap& p) {
    if (p.dim() != t.dim()) throw DimensionMismatch("basis change dimension mismatch");
    Mat pinv = inverse(p.matrix());
    ProductTensor out(t.dim());
    for (int i = 0; i < t.dim(); ++i) {
        Vec pi = p.matrix().col(i);
        for (int j = 0; j < t.dim(); ++j) {
            Vec w = mat_vec(pinv, multiply(t, pi, p.matrix().col(j)));
            for (int k = 0; k < t.dim(); ++k) out.at(i, j, k) = w[static_cast<size_t>(k)];
        }
    }
    return out;
}

inline AdAlgebra apply_basis_change(const AdAlgebra& d, const LinearMap& p) {
    return AdAlgebra(d.dim, apply_basis_change(d.rprod, p), apply_basis_change(d.lprod, p));
}

inline AssocAlgebra apply_basis_change(const AssocAlgebra& a, const LinearMap& p) {
    return AssocAlgebra(a.dim, apply_basis_change(a.mul, p));
}

// [A^1, A^2, ...] with A^1 = A and A^{i+1} = sum_{k=1..i} A^k A^{i+1-k};
// stops after the zero subspace or after max_steps entries.
inline std::vector<SubspaceBasis> power_filtration(const AssocAlgebra& a, int max_steps) {
    std::vector<SubspaceBasis> filt;
    filt.push_back(SubspaceBasis::full(a.dim));
    while (static_cast<int>(filt.size()) < max_steps) {
        size_t i = filt.size();  // computing A^{i+1}
        std::vector<Vec> gens;
        for (size_t k = 1; k <= i; ++k) {
            const auto& u = filt[k - 1];
            const auto& v = filt[i - k];
            for (const auto& x : u.vectors())
                for (const auto& y : v.vectors()) gens.push_back(multiply(a.mul, x, y));
        }
        SubspaceBasis next = SubspaceBasis::span_of(a.dim, gens);
        filt.push_back(next);
        if (next.dim() == 0) break;
    }
    return filt;
}

// Smallest i with A^i = 0; nullopt when the chain stalls before reaching zero.
inline std::optional<int> nilpotency_index(const AssocAlgebra& a) {
    auto filt = power_filtration(a, a.dim + 2);
    for (size_t i = 0; i < filt.size(); ++i) {
        if (filt[i].dim() == 0) return static_cast<int>(i) + 1;
        if (i > 0 && filt[i].dim() >= filt[i - 1].dim()) return std::nullopt;
    }
    return std::nullopt;
}

namespace detail {

// Rows of the constraint matrix for "x annihilates under the given slots".
// Each slot (tensor, side) contributes n^2 rows.
enum class Side { Left, Right };  // Left: x * e_j, Right: e_j * x

inline void append_annihilator_rows(std::vector<Vec>& rows, const ProductTensor& t, Side side) {
    int n = t.dim();
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Vec row(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                row[static_cast<size_t>(i)] = side == Side::Left ? t.at(i, j, k) : t.at(j, i, k);
            rows.push_back(row);
        }
}

inline SubspaceBasis solve_annihilator(int n, const std::vector<Vec>& rows) {
    Mat m(static_cast<int>(rows.size()), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(r), j) = rows[r][static_cast<size_t>(j)];
    return nullspace(m);
}

} // namespace detail

inline SubspaceBasis center_assoc(const AssocAlgebra& a) {
    std::vector<Vec> rows;
    detail::append_annihilator_rows(rows, a.mul, detail::Side::Left);
    detail::append_annihilator_rows(rows, a.mul, detail::Side::Right);
    return detail::solve_annihilator(a.dim, rows);
}

inline SubspaceBasis center_ad(const AdAlgebra& d) {
    std::vector<Vec> rows;
    detail::append_annihilator_rows(rows, d.rprod, detail::Side::Left);
    detail::append_annihilator_rows(rows, d.rprod, detail::Side::Right);
    detail::append_annihilator_rows(rows, d.lprod, detail::Side::Left);
    detail::append_annihilator_rows(rows, d.lprod, detail::Side::Right);
    return detail::solve_annihilator(d.dim, rows);
}

inline bool is_ideal(const AdAlgebra& d, const SubspaceBasis& s) {
    if (s.ambient() != d.dim) throw DimensionMismatch("ideal test: wrong ambient dimension");
    for (const auto& v : s.vectors())
        for (int j = 0; j < d.dim; ++j) {
            Vec ej = unit_vec(d.dim, j);
            for (const ProductTensor* t : {&d.rprod, &d.lprod}) {
                if (!s.contains(multiply(*t, ej, v))) return false;
                if (!s.contains(multiply(*t, v, ej))) return false;
            }
        }
    return true;
}

// Quotient on the complement spanned by the non-pivot standard basis vectors
// of the ideal's echelon form, in index order. With ideal <e_4> the quotient
// table is literally the first three rows and columns.
inline AdAlgebra quotient_by_ideal(const AdAlgebra& d, const SubspaceBasis& s) {
    if (!is_ideal(d, s)) throw NotAnIdeal();
    std::vector<int> comp = s.non_pivots();
    int m = static_cast<int>(comp.size());
    AdAlgebra q(m == 0 ? 1 : m);
    if (m == 0) throw Error("quotient by the full space is zero-dimensional");
    auto fill = [&](const ProductTensor& t, ProductTensor& out) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                Vec w = s.reduce(t.basis_product(comp[static_cast<size_t>(a)], comp[static_cast<size_t>(b)]));
                for (int k = 0; k < m; ++k) out.at(a, b, k) = w[static_cast<size_t>(comp[static_cast<size_t>(k)])];
            }
    };
    fill(d.rprod, q.rprod);
    fill(d.lprod, q.lprod);
    return q;
}

inline bool is_algebra_automorphism(const AssocAlgebra& a, const LinearMap& phi) {
    if (phi.dim() != a.dim) throw DimensionMismatch("automorphism check: dimension mismatch");
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec lhs = phi.apply(a.mul.basis_product(i, j));
            Vec rhs = multiply(a.mul, phi.matrix().col(i), phi.matrix().col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

// Span of all basis products of one tensor (the image of the bilinear map).
inline SubspaceBasis image_space(const ProductTensor& t) {
    std::vector<Vec> gens;
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) gens.push_back(t.basis_product(i, j));
    return SubspaceBasis::span_of(t.dim(), gens);
}

} // namespace adw
