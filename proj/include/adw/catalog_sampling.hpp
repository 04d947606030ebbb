#pragma once

// Deterministic parameter sampling for catalog entries and automorphism
// templates. seed = 0 keeps the fixed default grids; a nonzero seed permutes
// each grid reproducibly.

#include <random>

#include "adw/catalog.hpp"

namespace adw {

namespace detail {

inline std::vector<Scalar> maybe_shuffled(std::vector<Scalar> grid, int seed, size_t salt) {
    if (seed == 0) return grid;
    std::mt19937_64 rng(static_cast<uint64_t>(seed) * 1000003u + salt);
    for (size_t i = grid.size(); i > 1; --i) std::swap(grid[i - 1], grid[rng() % i]);
    return grid;
}

} // namespace detail

inline std::vector<ParamMap> sample_points(const CatalogEntry& e, int count, int seed) {
    if (e.params.empty()) return {ParamMap{}};
    std::vector<std::vector<Scalar>> grids;
    for (size_t m = 0; m < e.params.size(); ++m)
        grids.push_back(detail::maybe_shuffled(e.params[m].grid(), seed, m));
    size_t longest = 0;
    for (auto& g : grids) longest = std::max(longest, g.size());
    std::vector<ParamMap> out;
    for (size_t k = 0; k < static_cast<size_t>(count) && k < longest * grids.size(); ++k) {
        ParamMap p;
        for (size_t m = 0; m < grids.size(); ++m)
            p[e.params[m].name] = grids[m][(k + m) % grids[m].size()];
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        if (static_cast<int>(out.size()) == count) break;
    }
    return out;
}

inline ParamMap generic_point(const CatalogEntry& e) {
    static const std::vector<Scalar> preferred = {Scalar(2),    Scalar(1, 2), Scalar::i(),
                                                  Scalar(-1),   Scalar(1),    Scalar(0)};
    ParamMap p;
    for (const auto& spec : e.params) {
        for (const auto& v : preferred)
            if (spec.admits(v)) { p[spec.name] = v; break; }
        if (!p.count(spec.name)) throw ConstraintViolated(e.id + ": no admissible generic value for " + spec.name);
    }
    return p;
}

inline std::vector<ParamMap> sample_automorphism_points(const CatalogEntry&, const AutTemplate& t,
                                                        int count, const ParamMap& base_params, int seed) {
    std::vector<std::vector<Scalar>> grids;
    size_t total = 1;
    for (size_t m = 0; m < t.params.size(); ++m) {
        grids.push_back(detail::maybe_shuffled(t.grid_for(t.params[m]), seed, 77 + m));
        total = std::min<size_t>(total * grids.back().size(), 1u << 20);
    }
    std::vector<ParamMap> out;
    // Mixed-radix odometer over the full tuple space, validity-filtered.
    for (size_t k = 0; out.size() < static_cast<size_t>(count) && k < total; ++k) {
        ParamMap p = base_params;
        size_t rem = k;
        for (size_t m = 0; m < grids.size(); ++m) {
            p[t.params[m]] = grids[m][rem % grids[m].size()];
            rem /= grids[m].size();
        }
        if (!t.validity(p)) continue;
        out.push_back(p);
    }
    return out;
}

} // namespace adw
