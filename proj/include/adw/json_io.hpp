#pragma once

// JSON forms of the external interfaces: scalars as four decimal integer
// strings, algebras as sparse 1-based structure-constant lists, violation
// reports, persisted isomorphism witnesses, and the full catalog export.

#include <fstream>

#include <json.hpp>

#include "adw/identities.hpp"
#include "adw/iso.hpp"

namespace adw {

using json = nlohmann::json;

inline json scalar_to_json(const Scalar& s) {
    auto q = s.to_strings();
    return json::array({q[0], q[1], q[2], q[3]});
}

inline Scalar scalar_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("scalar JSON must be [re_num, re_den, im_num, im_den]");
    return Scalar::from_strings({j[0].get<std::string>(), j[1].get<std::string>(),
                                 j[2].get<std::string>(), j[3].get<std::string>()});
}

inline json params_to_json(const ParamMap& params) {
    json out = json::object();
    for (const auto& [k, v] : params) out[k] = v.str();
    return out;
}

inline ParamMap params_from_json(const json& j) {
    ParamMap out;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = Scalar::parse(it.value().get<std::string>());
    return out;
}

namespace detail {

inline json tensor_to_json(const ProductTensor& t) {
    json cells = json::array();
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k)
                if (!t.at(i, j, k).is_zero())
                    cells.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1},
                                     {"c", scalar_to_json(t.at(i, j, k))}});
    return cells;
}

inline ProductTensor tensor_from_json(int dim, const json& cells) {
    ProductTensor t(dim);
    for (const auto& c : cells)
        t.at(c.at("i").get<int>() - 1, c.at("j").get<int>() - 1, c.at("k").get<int>() - 1) =
            scalar_from_json(c.at("c"));
    return t;
}

} // namespace detail

inline json algebra_to_json(const AssocAlgebra& a) {
    return {{"dim", a.dim}, {"products", {{"mul", detail::tensor_to_json(a.mul)}}}};
}

inline json algebra_to_json(const AdAlgebra& d) {
    return {{"dim", d.dim},
            {"products", {{"rprod", detail::tensor_to_json(d.rprod)},
                          {"lprod", detail::tensor_to_json(d.lprod)}}}};
}

inline AdAlgebra ad_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    return AdAlgebra(dim, detail::tensor_from_json(dim, j.at("products").at("rprod")),
                     detail::tensor_from_json(dim, j.at("products").at("lprod")));
}

inline json violations_to_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
        json residual = json::array();
        for (const auto& c : v.residual) residual.push_back(scalar_to_json(c));
        out.push_back({{"id", v.identity_id},
                       {"triple", {v.triple[0], v.triple[1], v.triple[2]}},
                       {"residual", residual}});
    }
    return out;
}

// Witness files: matrix rows are scalar strings; column j is the image of e_j.
inline json witness_to_json(const IsoWitness& w) {
    json matrix = json::array();
    for (int i = 0; i < w.map.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < w.map.dim(); ++j) row.push_back(w.map.matrix().at(i, j).str());
        matrix.push_back(row);
    }
    return {{"source", {{"id", w.source_id}, {"params", params_to_json(w.source_params)}}},
            {"target", {{"id", w.target_id}, {"params", params_to_json(w.target_params)}}},
            {"map", matrix}};
}

inline IsoWitness witness_from_json(const json& j) {
    const json& rows = j.at("map");
    int n = static_cast<int>(rows.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) m.at(i, jj) = Scalar::parse(rows[i][jj].get<std::string>());
    return IsoWitness{j.at("source").at("id").get<std::string>(),
                      params_from_json(j.at("source").at("params")),
                      j.at("target").at("id").get<std::string>(),
                      params_from_json(j.at("target").at("params")),
                      LinearMap(m)};
}

inline IsoWitness load_witness(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open witness file: " + path);
    json j;
    in >> j;
    return witness_from_json(j);
}

inline void save_witness(const std::string& path, const IsoWitness& w) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write witness file: " + path);
    out << witness_to_json(w).dump(2) << "\n";
}

// Catalog export: symbolic tables with coefficients rendered in canonical
// monomial order.
inline json entry_to_json(const CatalogEntry& e) {
    auto cells = [](const std::vector<Cell>& cs) {
        json out = json::array();
        for (const auto& c : cs)
            out.push_back({{"i", c.i}, {"j", c.j}, {"k", c.k}, {"coef", c.coef.str()}});
        return out;
    };
    json j = {{"id", e.id},
              {"dim", e.dim},
              {"kind", e.kind == Kind::Assoc ? "assoc" : "ad"}};
    json params = json::array();
    for (const auto& p : e.params) {
        json pj = {{"name", p.name}, {"constraint", p.constraint_text()}};
        if (!p.note.empty()) pj["note"] = p.note;
        params.push_back(pj);
    }
    j["params"] = params;
    if (e.kind == Kind::Assoc) {
        j["products"] = {{"mul", cells(e.mul)}};
    } else {
        j["products"] = {{"rprod", cells(e.rprod)}, {"lprod", cells(e.lprod)}};
        json ap = json::object();
        for (const auto& [tgt, src] : e.assoc_params) ap[tgt] = src;
        j["claimed_assoc"] = {{"id", e.claimed_assoc}, {"params", ap}};
    }
    if (!e.claimed_center.empty()) j["claimed_center"] = e.claimed_center;
    if (!e.claimed_quotient.empty()) {
        json qp = json::object();
        for (const auto& [tgt, expr] : e.quotient_params) qp[tgt] = expr.str();
        j["claimed_quotient"] = {{"id", e.claimed_quotient}, {"params", qp}};
    }
    if (!e.automorphisms.empty()) {
        json auts = json::array();
        for (const auto& t : e.automorphisms) {
            json rows = json::array();
            for (const auto& row : t.mat) {
                json r = json::array();
                for (const auto& cell : row) r.push_back(cell.str());
                rows.push_back(r);
            }
            json tj = {{"name", t.name}, {"params", t.params}, {"matrix", rows}};
            json nz = json::array();
            for (const auto& p : t.nonzero) nz.push_back(p);
            tj["nonzero"] = nz;
            if (!t.validity_text.empty()) tj["validity"] = t.validity_text;
            auts.push_back(tj);
        }
        j["automorphisms"] = auts;
    }
    if (e.group) j["group"] = e.group;
    if (e.alias) j["alias"] = true;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

inline json catalog_to_json() {
    json out = json::array();
    for (const auto& e : Catalog::instance().all()) out.push_back(entry_to_json(e));
    return out;
}

} // namespace adw
