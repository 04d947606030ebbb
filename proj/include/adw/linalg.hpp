#pragma once

// Exact dense linear algebra over Q(i): reduced row echelon form, null
// spaces, determinants, inverses, and canonical subspace bases. Everything is
// small (ambient dimension <= 4 in practice), so plain Gauss-Jordan is used
// throughout.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "adw/errors.hpp"
#include "adw/scalar.hpp"

namespace adw {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }

inline Vec unit_vec(int n, int k) {
    Vec v = zero_vec(n);
    v[static_cast<size_t>(k)] = Scalar(1);
    return v;
}

inline bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    Vec col(int j) const {
        Vec v(static_cast<size_t>(rows));
        for (int i = 0; i < rows; ++i) v[static_cast<size_t>(i)] = at(i, j);
        return v;
    }
    Vec row(int i) const {
        Vec v(static_cast<size_t>(cols));
        for (int j = 0; j < cols; ++j) v[static_cast<size_t>(j)] = at(i, j);
        return v;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw DimensionMismatch("matrix product shape mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
    if (m.cols != static_cast<int>(v.size())) throw DimensionMismatch("matrix/vector shape mismatch");
    Vec r(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) r[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

// In-place Gauss-Jordan; returns pivot columns in increasing order.
inline std::vector<int> rref_inplace(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        Scalar inv = m.at(row, col).inv();
        for (int j = 0; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline Scalar det(Mat m) {
    if (m.rows != m.cols) throw DimensionMismatch("determinant of non-square matrix");
    Scalar d(1);
    for (int col = 0; col < m.cols; ++col) {
        int p = -1;
        for (int i = col; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) return Scalar(0);
        if (p != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Scalar inv = m.at(col, col).inv();
        for (int i = col + 1; i < m.rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * inv;
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

inline Mat inverse(const Mat& m) {
    if (m.rows != m.cols) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    auto pivots = rref_inplace(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) throw SingularMap();
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Canonical subspace: rows are a reduced row echelon basis with strictly
// increasing pivots, so equality of subspaces is equality of representations.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(int ambient) : ambient_(ambient) {}

    static SubspaceBasis span_of(int ambient, const std::vector<Vec>& gens) {
        Mat m(static_cast<int>(gens.size()), ambient);
        for (size_t i = 0; i < gens.size(); ++i) {
            if (static_cast<int>(gens[i].size()) != ambient)
                throw DimensionMismatch("generator has wrong ambient dimension");
            for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = gens[i][static_cast<size_t>(j)];
        }
        auto pivots = rref_inplace(m);
        SubspaceBasis b(ambient);
        b.pivots_ = pivots;
        for (size_t r = 0; r < pivots.size(); ++r) b.rows_.push_back(m.row(static_cast<int>(r)));
        return b;
    }

    static SubspaceBasis full(int ambient) {
        std::vector<Vec> gens;
        for (int k = 0; k < ambient; ++k) gens.push_back(unit_vec(ambient, k));
        return span_of(ambient, gens);
    }

    static SubspaceBasis standard(int ambient, const std::vector<int>& indices0) {
        std::vector<Vec> gens;
        for (int k : indices0) gens.push_back(unit_vec(ambient, k));
        return span_of(ambient, gens);
    }

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& vectors() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    std::vector<int> non_pivots() const {
        std::vector<int> out;
        for (int j = 0; j < ambient_; ++j)
            if (std::find(pivots_.begin(), pivots_.end(), j) == pivots_.end()) out.push_back(j);
        return out;
    }

    // Residual of v after eliminating all pivot coordinates.
    Vec reduce(Vec v) const {
        if (static_cast<int>(v.size()) != ambient_) throw DimensionMismatch("reduce: wrong ambient dimension");
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& c = v[static_cast<size_t>(pivots_[r])];
            if (c.is_zero()) continue;
            v = vec_sub(v, vec_scale(c, rows_[r]));
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    bool contains(const SubspaceBasis& other) const {
        for (const auto& v : other.rows_)
            if (!contains(v)) return false;
        return true;
    }

    bool operator==(const SubspaceBasis& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }
    bool operator!=(const SubspaceBasis& o) const { return !(*this == o); }

    // "<e_3, e_4>" when all basis vectors are standard, explicit sums otherwise.
    std::string str() const {
        if (rows_.empty()) return "<0>";
        std::string out = "<";
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (r) out += ", ";
            out += vec_str(rows_[r]);
        }
        return out + ">";
    }

    static std::string vec_str(const Vec& v) {
        std::string out;
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            std::string coef = v[j].str();
            std::string term;
            if (coef == "1") term = "e_" + std::to_string(j + 1);
            else if (coef == "-1") term = "-e_" + std::to_string(j + 1);
            else {
                if (coef.find('+') != std::string::npos || coef.find('-', 1) != std::string::npos)
                    coef = "(" + coef + ")";
                term = coef + "*e_" + std::to_string(j + 1);
            }
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out.empty() ? "0" : out;
    }

private:
    int ambient_ = 0;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

inline SubspaceBasis sum_spaces(const SubspaceBasis& a, const SubspaceBasis& b) {
    std::vector<Vec> gens = a.vectors();
    gens.insert(gens.end(), b.vectors().begin(), b.vectors().end());
    return SubspaceBasis::span_of(a.ambient(), gens);
}

inline int intersection_dim(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.dim() + b.dim() - sum_spaces(a, b).dim();
}

// Canonical basis of { x : M x = 0 }.
inline SubspaceBasis nullspace(Mat m) {
    int n = m.cols;
    auto pivots = rref_inplace(m);
    std::vector<Vec> gens;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        Vec v = zero_vec(n);
        v[static_cast<size_t>(j)] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), j);
        gens.push_back(v);
    }
    return SubspaceBasis::span_of(n, gens);
}

} // namespace adw
