#pragma once

// Machine-readable catalog of every named family in the classification:
// the six 3-dimensional nilpotent associative algebras, the 23 three-dim
// anti-dendriform families, the 15 four-dim nilpotent indecomposable
// associative algebras As4.2..As4.16 with their automorphism families and
// centers, and the 47 four-dim anti-dendriform families AD4.1..AD4.47
// grouped by associated algebra.
//
// Tables are stored symbolically (coefficients are rational functions of the
// family parameters) and instantiated at exact Q(i) points.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adw/algebra.hpp"
#include "adw/symbolic.hpp"

namespace adw {

enum class Kind { Assoc, Ad };

struct ParamSpec {
    enum class Constraint { Any, NotEqual, InSet };

    std::string name;
    Constraint constraint = Constraint::Any;
    std::vector<Scalar> values;  // excluded value for NotEqual, allowed set for InSet
    std::string note;            // recorded side conditions that are not enforced

    bool admits(const Scalar& v) const {
        switch (constraint) {
            case Constraint::Any: return true;
            case Constraint::NotEqual:
                for (const auto& x : values)
                    if (v == x) return false;
                return true;
            case Constraint::InSet:
                for (const auto& x : values)
                    if (v == x) return true;
                return false;
        }
        return false;
    }

    std::string constraint_text() const {
        switch (constraint) {
            case Constraint::Any: return "any";
            case Constraint::NotEqual: {
                std::string out;
                for (const auto& x : values) out += (out.empty() ? "!=" : ",!=") + x.str();
                return out;
            }
            case Constraint::InSet: {
                std::string out = "in{";
                for (size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].str();
                return out + "}";
            }
        }
        return "";
    }

    // Default sampling grid {0,1,-1,2,1/2,i} intersected with the constraint.
    std::vector<Scalar> grid() const {
        static const std::vector<Scalar> base = {Scalar(0),  Scalar(1),     Scalar(-1),
                                                 Scalar(2),  Scalar(1, 2),  Scalar::i()};
        if (constraint == Constraint::InSet) return values;
        std::vector<Scalar> out;
        for (const auto& v : base)
            if (admits(v)) out.push_back(v);
        return out;
    }
};

inline ParamSpec any_param(const std::string& name, const std::string& note = "") {
    return {name, ParamSpec::Constraint::Any, {}, note};
}
inline ParamSpec not_equal(const std::string& name, const Scalar& excluded, const std::string& note = "") {
    return {name, ParamSpec::Constraint::NotEqual, {excluded}, note};
}
inline ParamSpec in_set(const std::string& name, const std::vector<Scalar>& allowed, const std::string& note = "") {
    return {name, ParamSpec::Constraint::InSet, allowed, note};
}

// One nonzero structure constant: coefficient of e_k in e_i * e_j (1-based).
struct Cell {
    int i, j, k;
    Expr coef;
};

// Parametrized automorphism of a base algebra. Matrix entries may reference
// both the template's own parameters and the base family's parameters.
struct AutTemplate {
    std::string name;
    std::vector<std::string> params;
    std::set<std::string> nonzero;                      // params whose grid excludes 0
    std::map<std::string, std::vector<Scalar>> custom_grid;
    std::vector<std::vector<Expr>> mat;                 // mat[row][col], col j = image of e_{j+1}
    std::function<bool(const ParamMap&)> validity;      // beyond nonzero-ness; may inspect base params
    std::string validity_text;

    std::vector<Scalar> grid_for(const std::string& p) const {
        auto it = custom_grid.find(p);
        if (it != custom_grid.end()) return it->second;
        static const std::vector<Scalar> mult = {Scalar(1),    Scalar(-1),     Scalar(2),
                                                 Scalar(1, 2), Scalar::i(),    -Scalar::i()};
        if (nonzero.count(p)) return mult;
        std::vector<Scalar> out = {Scalar(0)};
        out.insert(out.end(), mult.begin(), mult.end());
        return out;
    }
};

struct CatalogEntry {
    std::string id;
    int dim = 0;
    Kind kind = Kind::Assoc;
    std::vector<ParamSpec> params;

    std::vector<Cell> mul;             // assoc entries
    std::vector<Cell> rprod, lprod;    // ad entries

    std::string claimed_assoc;                      // ad entries: id of the sum table
    std::map<std::string, std::string> assoc_params;// target param <- this entry's param
    std::vector<int> claimed_center;                // 1-based basis indices; empty = none claimed
    std::string claimed_quotient;                   // ad4 entries: 3-dim family of the quotient by <e_4>
    std::map<std::string, Expr> quotient_params;    // target param <- expression in this entry's params
    std::vector<AutTemplate> automorphisms;
    std::string note;
    bool alias = false;
    int group = 0;                                  // 1..8 for AD4 families, else 0

    const ParamSpec* find_param(const std::string& name) const {
        for (const auto& p : params)
            if (p.name == name) return &p;
        return nullptr;
    }
};

namespace detail {

// Incremental entry construction used by the catalog builder below.
struct EntryBuilder {
    CatalogEntry e;

    EntryBuilder& r(int i, int j, int k, Expr c) { e.rprod.push_back({i, j, k, std::move(c)}); return *this; }
    EntryBuilder& l(int i, int j, int k, Expr c) { e.lprod.push_back({i, j, k, std::move(c)}); return *this; }
    EntryBuilder& m(int i, int j, int k, Expr c) { e.mul.push_back({i, j, k, std::move(c)}); return *this; }
    EntryBuilder& assoc(const std::string& id, std::map<std::string, std::string> pm = {}) {
        e.claimed_assoc = id;
        e.assoc_params = std::move(pm);
        return *this;
    }
    EntryBuilder& center(std::vector<int> idx) { e.claimed_center = std::move(idx); return *this; }
    EntryBuilder& quotient(const std::string& id, std::map<std::string, Expr> pm = {}) {
        e.claimed_quotient = id;
        e.quotient_params = std::move(pm);
        return *this;
    }
    EntryBuilder& note(const std::string& n) { e.note = n; return *this; }
    EntryBuilder& group(int g) { e.group = g; return *this; }
    EntryBuilder& mark_alias() { e.alias = true; return *this; }
    EntryBuilder& aut(AutTemplate t) { e.automorphisms.push_back(std::move(t)); return *this; }
};

inline EntryBuilder make(const std::string& id, int dim, Kind kind, std::vector<ParamSpec> params = {}) {
    EntryBuilder b;
    b.e.id = id;
    b.e.dim = dim;
    b.e.kind = kind;
    b.e.params = std::move(params);
    return b;
}

// Automorphism template construction helper.
struct AutBuilder {
    AutTemplate t;
    int dim;

    AutBuilder(std::string name, int d, std::vector<std::string> params, std::set<std::string> nonzero)
        : dim(d) {
        t.name = std::move(name);
        t.params = std::move(params);
        t.nonzero = std::move(nonzero);
        t.mat.assign(static_cast<size_t>(d), std::vector<Expr>(static_cast<size_t>(d), Expr(0)));
        t.validity = [](const ParamMap&) { return true; };
    }
    // coefficient of e_row in the image of e_col (1-based)
    AutBuilder& set(int row, int col, Expr v) {
        t.mat[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)] = std::move(v);
        return *this;
    }
    AutBuilder& valid(std::function<bool(const ParamMap&)> f, std::string text) {
        t.validity = std::move(f);
        t.validity_text = std::move(text);
        return *this;
    }
    AutBuilder& grid(const std::string& p, std::vector<Scalar> g) {
        t.custom_grid[p] = std::move(g);
        return *this;
    }
};

} // namespace detail

class Catalog {
public:
    static const Catalog& instance() {
        static Catalog c;
        return c;
    }

    const CatalogEntry& entry(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw UnknownId(id);
        return entries_[it->second];
    }
    bool has(const std::string& id) const { return index_.count(id) > 0; }

    struct Filter {
        std::optional<int> dim;
        std::optional<Kind> kind;
        std::optional<std::string> base;  // claimed associated algebra id
        bool include_aliases = false;
    };

    std::vector<const CatalogEntry*> list() const { return list(Filter{}); }

    std::vector<const CatalogEntry*> list(const Filter& f) const {
        std::vector<const CatalogEntry*> out;
        for (const auto& e : entries_) {
            if (e.alias && !f.include_aliases) continue;
            if (f.dim && e.dim != *f.dim) continue;
            if (f.kind && e.kind != *f.kind) continue;
            if (f.base && e.claimed_assoc != *f.base) continue;
            out.push_back(&e);
        }
        return out;
    }

    const std::vector<CatalogEntry>& all() const { return entries_; }

private:
    Catalog() { build(); }
    void add(detail::EntryBuilder b) {
        index_[b.e.id] = entries_.size();
        entries_.push_back(std::move(b.e));
    }
    void build();

    std::vector<CatalogEntry> entries_;
    std::map<std::string, size_t> index_;
};

// ---------------------------------------------------------------------------
// Instantiation

namespace detail {

inline void check_params(const CatalogEntry& e, const ParamMap& params, bool enforce) {
    for (const auto& p : e.params) {
        auto it = params.find(p.name);
        if (it == params.end())
            throw ConstraintViolated(e.id + ": missing parameter '" + p.name + "'");
        if (enforce && !p.admits(it->second))
            throw ConstraintViolated(e.id + ": parameter " + p.name + "=" + it->second.str() +
                                     " violates constraint " + p.constraint_text());
    }
    for (const auto& [name, v] : params)
        if (!e.find_param(name))
            throw ConstraintViolated(e.id + ": unknown parameter '" + name + "'");
}

inline ProductTensor eval_cells(int dim, const std::vector<Cell>& cells, const ParamMap& params) {
    ProductTensor t(dim);
    for (const auto& c : cells) t.at(c.i - 1, c.j - 1, c.k - 1) = c.coef.eval(params);
    return t;
}

} // namespace detail

// enforce=false intentionally admits boundary points excluded from the
// normal form (used for the classification's coincidence claims, which live
// exactly at such points).
inline AssocAlgebra instantiate_assoc(const std::string& id, const ParamMap& params = {}, bool enforce = true) {
    const CatalogEntry& e = Catalog::instance().entry(id);
    if (e.kind != Kind::Assoc) throw ConstraintViolated(id + " is not an associative-algebra entry");
    detail::check_params(e, params, enforce);
    return AssocAlgebra(e.dim, detail::eval_cells(e.dim, e.mul, params));
}

inline AdAlgebra instantiate_ad(const std::string& id, const ParamMap& params = {}, bool enforce = true) {
    const CatalogEntry& e = Catalog::instance().entry(id);
    if (e.kind != Kind::Ad) throw ConstraintViolated(id + " is not an anti-dendriform entry");
    detail::check_params(e, params, enforce);
    return AdAlgebra(e.dim, detail::eval_cells(e.dim, e.rprod, params),
                     detail::eval_cells(e.dim, e.lprod, params));
}

// The associated-algebra instance an AD entry claims, at mapped parameters.
inline AssocAlgebra claimed_assoc_instance(const CatalogEntry& e, const ParamMap& params) {
    ParamMap target;
    for (const auto& [tgt, src] : e.assoc_params) target[tgt] = params.at(src);
    return instantiate_assoc(e.claimed_assoc, target, false);
}

// The 3-dim AD instance an AD4 entry's quotient by <e_4> must equal.
inline AdAlgebra claimed_quotient_instance(const CatalogEntry& e, const ParamMap& params) {
    ParamMap target;
    for (const auto& [tgt, expr] : e.quotient_params) target[tgt] = expr.eval(params);
    return instantiate_ad(e.claimed_quotient, target, false);
}

// Instantiates automorphism family `which` of `base` and verifies, at
// construction time, that the result is invertible and intertwines the base
// product. `params` must bind the template parameters and any base-family
// parameters the matrix references.
inline LinearMap instantiate_automorphism(const std::string& base, size_t which, const ParamMap& params) {
    const CatalogEntry& e = Catalog::instance().entry(base);
    if (which >= e.automorphisms.size())
        throw UnknownId(base + " has no automorphism family #" + std::to_string(which));
    const AutTemplate& t = e.automorphisms[which];
    for (const auto& p : t.params)
        if (!params.count(p))
            throw ConstraintViolated(base + "/" + t.name + ": missing parameter '" + p + "'");
    for (const auto& p : t.nonzero)
        if (params.at(p).is_zero())
            throw ConstraintViolated(base + "/" + t.name + ": parameter " + p + " must be nonzero");
    if (!t.validity(params))
        throw ConstraintViolated(base + "/" + t.name + ": validity constraint failed (" + t.validity_text + ")");

    Mat m(e.dim, e.dim);
    for (int r = 0; r < e.dim; ++r)
        for (int c = 0; c < e.dim; ++c)
            m.at(r, c) = t.mat[static_cast<size_t>(r)][static_cast<size_t>(c)].eval(params);
    LinearMap phi{m};  // throws SingularMap when degenerate

    ParamMap base_params;
    for (const auto& p : e.params) base_params[p.name] = params.at(p.name);
    AssocAlgebra a = instantiate_assoc(base, base_params, false);
    if (!is_algebra_automorphism(a, phi))
        throw NotAutomorphism(base + "/" + t.name + ": product not preserved");
    return phi;
}

// ---------------------------------------------------------------------------
// Sampling

// Deterministic parameter points for an entry: the per-parameter default
// grids walked diagonally. seed != 0 permutes each grid reproducibly.
std::vector<ParamMap> sample_points(const CatalogEntry& e, int count, int seed = 0);

// A single "generic" point: prefers values away from the special 0, 1, -1.
ParamMap generic_point(const CatalogEntry& e);

// Parameter points for an automorphism template (template params plus the
// base entry's params), filtered by validity.
std::vector<ParamMap> sample_automorphism_points(const CatalogEntry& e, const AutTemplate& t,
                                                 int count, const ParamMap& base_params, int seed = 0);

} // namespace adw

#include "adw/catalog_data.hpp"     // Catalog::build — the tables themselves
#include "adw/catalog_sampling.hpp" // sampling implementations
