// adw: exact-arithmetic workbench for the catalog of low-dimensional complex
// anti-dendriform algebras and their associated nilpotent associative
// algebras. Subcommands expose the catalog, the identity checkers, the
// isomorphism machinery and the verification suites for batch/CI use.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "adw/json_io.hpp"
#include "adw/verify.hpp"

using namespace adw;

namespace {

constexpr const char* kRight = "\xE2\x96\xB7";  // |>
constexpr const char* kLeft = "\xE2\x97\x81";   // <|
constexpr const char* kDot = "\xC2\xB7";        // .

std::string data_dir() {
    if (const char* env = std::getenv("ADW_DATA_DIR")) return env;
    return "data";
}

ParamMap parse_params(const std::string& text) {
    ParamMap out;
    if (text.empty()) return out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected name=value in --params, got '" + item + "'");
        out[item.substr(0, eq)] = Scalar::parse(item.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string term_str(const std::string& coef, int k) {
    std::string basis = "e_" + std::to_string(k);
    if (coef == "1") return basis;
    if (coef == "-1") return "-" + basis;
    std::string c = coef;
    if (c.find('+') != std::string::npos || c.find('-', 1) != std::string::npos) c = "(" + c + ")";
    return c + "*" + basis;
}

std::string symbolic_row(const std::vector<Cell>& cells, int i, int j) {
    std::string out;
    for (const auto& c : cells) {
        if (c.i != i || c.j != j || c.coef.is_zero()) continue;
        std::string t = term_str(c.coef.str(), c.k);
        if (!out.empty() && t[0] != '-') out += "+";
        out += t;
    }
    return out;
}

std::string concrete_row(const ProductTensor& t, int i, int j) {
    std::string out;
    for (int k = 0; k < t.dim(); ++k) {
        if (t.at(i - 1, j - 1, k).is_zero()) continue;
        std::string term = term_str(t.at(i - 1, j - 1, k).str(), k + 1);
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

template <typename RowFn>
std::string render_table(int dim, const char* op, RowFn row) {
    std::string out;
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j) {
            std::string rhs = row(i, j);
            if (rhs.empty()) continue;
            if (!out.empty()) out += ", ";
            out += "e_" + std::to_string(i) + op + "e_" + std::to_string(j) + "=" + rhs;
        }
    return out.empty() ? std::string("(all products zero)") : out;
}

void print_entry(const CatalogEntry& e, const ParamMap& params, bool have_params,
                 const std::string& format) {
    if (format == "json") {
        if (!have_params) {
            std::cout << entry_to_json(e).dump(2) << "\n";
        } else if (e.kind == Kind::Assoc) {
            std::cout << algebra_to_json(instantiate_assoc(e.id, params)).dump(2) << "\n";
        } else {
            std::cout << algebra_to_json(instantiate_ad(e.id, params)).dump(2) << "\n";
        }
        return;
    }
    std::cout << e.id;
    if (!e.params.empty()) {
        std::cout << "(";
        for (size_t m = 0; m < e.params.size(); ++m) {
            std::cout << (m ? "," : "") << e.params[m].name;
            if (have_params) std::cout << "=" << params.at(e.params[m].name).str();
            std::string con = e.params[m].constraint_text();
            if (!have_params && con != "any") std::cout << " " << con;
        }
        std::cout << ")";
    }
    std::cout << "  [" << (e.kind == Kind::Assoc ? "assoc" : "ad") << ", dim " << e.dim << "]\n";
    if (e.kind == Kind::Assoc) {
        if (have_params) {
            auto a = instantiate_assoc(e.id, params);
            std::cout << "  " << render_table(e.dim, kDot, [&](int i, int j) { return concrete_row(a.mul, i, j); }) << "\n";
        } else {
            std::cout << "  " << render_table(e.dim, kDot, [&](int i, int j) { return symbolic_row(e.mul, i, j); }) << "\n";
        }
    } else {
        if (have_params) {
            auto d = instantiate_ad(e.id, params);
            std::cout << "  " << render_table(e.dim, kRight, [&](int i, int j) { return concrete_row(d.rprod, i, j); }) << "\n";
            std::cout << "  " << render_table(e.dim, kLeft, [&](int i, int j) { return concrete_row(d.lprod, i, j); }) << "\n";
        } else {
            std::cout << "  " << render_table(e.dim, kRight, [&](int i, int j) { return symbolic_row(e.rprod, i, j); }) << "\n";
            std::cout << "  " << render_table(e.dim, kLeft, [&](int i, int j) { return symbolic_row(e.lprod, i, j); }) << "\n";
        }
        std::cout << "  associated algebra: " << e.claimed_assoc << "\n";
    }
    if (!e.note.empty()) std::cout << "  note: " << e.note << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adw - exact catalog and verifier for low-dimensional complex "
                 "anti-dendriform algebras"};
    app.require_subcommand(1);

    // list
    auto* list_cmd = app.add_subcommand("list", "list catalog entries");
    int list_dim = 0;
    std::string list_kind, list_base;
    list_cmd->add_option("--dim", list_dim, "filter by dimension");
    list_cmd->add_option("--kind", list_kind, "assoc|ad")->check(CLI::IsMember({"assoc", "ad"}));
    list_cmd->add_option("--base", list_base, "filter by associated algebra id");

    // shared bits
    std::string id, params_text, format = "text";
    auto add_id_params = [&](CLI::App* cmd, bool params_required = false) {
        cmd->add_option("id", id, "catalog id, e.g. AD4.13")->required();
        auto* opt = cmd->add_option("--params", params_text, "comma-separated name=value list, "
                                                             "values in scalar grammar (1/2, -1+1/2i)");
        if (params_required) opt->required();
        cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* show_cmd = app.add_subcommand("show", "print a family table");
    add_id_params(show_cmd);
    auto* sum_cmd = app.add_subcommand("sum", "print the sum product and its associated-algebra match");
    add_id_params(sum_cmd);
    auto* center_cmd = app.add_subcommand("center", "print the center");
    add_id_params(center_cmd);
    auto* check_cmd = app.add_subcommand("check", "run the defining-identity checkers");
    add_id_params(check_cmd);

    // iso
    auto* iso_cmd = app.add_subcommand("iso", "verify or search isomorphism witnesses");
    std::string iso_src, iso_dst, witness_file, src_params_text, dst_params_text, out_file;
    bool do_search = false;
    size_t budget = 100000;
    iso_cmd->add_option("src", iso_src, "source catalog id");
    iso_cmd->add_option("dst", iso_dst, "target catalog id");
    iso_cmd->add_option("--witness", witness_file, "witness file to re-verify");
    iso_cmd->add_flag("--search", do_search, "search for a witness over the grid");
    iso_cmd->add_option("--src-params", src_params_text, "source parameters");
    iso_cmd->add_option("--dst-params", dst_params_text, "target parameters");
    iso_cmd->add_option("--out", out_file, "write the found witness to this file");
    iso_cmd->add_option("--budget", budget, "candidate budget for --search");
    iso_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int seed = 0, samples = 5;
    verify_cmd->add_option("suite", suite, "suite id (see --list-suites)")->required();
    verify_cmd->add_option("--seed", seed, "grid permutation seed (0 = fixed grid)");
    verify_cmd->add_option("--samples", samples, "parameter points per family");
    verify_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // probe
    auto* probe_cmd = app.add_subcommand("probe", "re-play a nonexistence contradiction case");
    std::string case_id;
    probe_cmd->add_option("case", case_id, "case id, e.g. thm3.2-ad3.4")->required();
    probe_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // export
    auto* export_cmd = app.add_subcommand("export", "dump the whole catalog");
    std::string export_format = "json";
    export_cmd->add_option("--format", export_format, "json")->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (*list_cmd) {
            Catalog::Filter f;
            if (list_dim) f.dim = list_dim;
            if (list_kind == "assoc") f.kind = Kind::Assoc;
            if (list_kind == "ad") f.kind = Kind::Ad;
            if (!list_base.empty()) f.base = list_base;
            for (const auto* e : Catalog::instance().list(f)) {
                std::cout << e->id;
                if (!e->params.empty()) {
                    std::cout << "(";
                    for (size_t m = 0; m < e->params.size(); ++m)
                        std::cout << (m ? "," : "") << e->params[m].name;
                    std::cout << ")";
                }
                std::cout << "  dim " << e->dim << " "
                          << (e->kind == Kind::Assoc ? "assoc" : "ad");
                if (!e->claimed_assoc.empty()) std::cout << "  -> " << e->claimed_assoc;
                std::cout << "\n";
            }
            return 0;
        }

        if (*show_cmd) {
            const auto& e = Catalog::instance().entry(id);
            print_entry(e, parse_params(params_text), !params_text.empty(), format);
            return 0;
        }

        if (*sum_cmd) {
            const auto& e = Catalog::instance().entry(id);
            if (e.kind != Kind::Ad) throw ConstraintViolated(id + " is not an anti-dendriform entry");
            ParamMap params = parse_params(params_text);
            auto d = instantiate_ad(id, params);
            auto sum = sum_product(d);
            bool match = sum.mul == claimed_assoc_instance(e, params).mul;
            if (format == "json") {
                json j = algebra_to_json(sum);
                j["claimed_assoc"] = e.claimed_assoc;
                j["matches_claimed"] = match;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << render_table(e.dim, kDot, [&](int i, int j) {
                    return concrete_row(sum.mul, i, j);
                }) << "\n";
                std::cout << "matches " << e.claimed_assoc << ": " << (match ? "yes" : "NO") << "\n";
            }
            return match ? 0 : 1;
        }

        if (*center_cmd) {
            const auto& e = Catalog::instance().entry(id);
            ParamMap params = parse_params(params_text);
            SubspaceBasis z = e.kind == Kind::Ad ? center_ad(instantiate_ad(id, params))
                                                 : center_assoc(instantiate_assoc(id, params));
            if (format == "json") {
                json rows = json::array();
                for (const auto& v : z.vectors()) {
                    json row = json::array();
                    for (const auto& c : v) row.push_back(scalar_to_json(c));
                    rows.push_back(row);
                }
                std::cout << json{{"id", id}, {"dim", z.dim()}, {"basis", rows}}.dump(2) << "\n";
            } else {
                std::cout << z.str() << "\n";
            }
            return 0;
        }

        if (*check_cmd) {
            const auto& e = Catalog::instance().entry(id);
            ParamMap params = parse_params(params_text);
            std::vector<Violation> viols;
            if (e.kind == Kind::Ad)
                viols = check_anti_dendriform(instantiate_ad(id, params));
            else
                viols = check_associative(instantiate_assoc(id, params));
            if (format == "json") {
                std::cout << violations_to_json(viols).dump(2) << "\n";
            } else if (viols.empty()) {
                std::cout << "ok: zero violations\n";
            } else {
                for (const auto& v : viols)
                    std::cout << v.identity_id << " at (" << v.triple[0] << "," << v.triple[1]
                              << "," << v.triple[2] << "): residual "
                              << SubspaceBasis::vec_str(v.residual) << "\n";
                std::cout << viols.size() << " violations\n";
            }
            return viols.empty() ? 0 : 1;
        }

        if (*iso_cmd) {
            if (!witness_file.empty()) {
                IsoWitness w = load_witness(witness_file);
                if (!iso_src.empty() && (w.source_id != iso_src || w.target_id != iso_dst)) {
                    std::cerr << "witness file is for " << w.source_id << " -> " << w.target_id
                              << ", not " << iso_src << " -> " << iso_dst << "\n";
                    return 1;
                }
                bool ok = w.reverify();
                std::cout << (ok ? "witness verifies" : "witness REJECTED") << ": " << w.source_id
                          << " -> " << w.target_id << "\n";
                return ok ? 0 : 1;
            }
            if (!do_search) throw ParseError("iso needs --witness FILE or --search");
            if (iso_src.empty() || iso_dst.empty())
                throw ParseError("iso --search needs SRC and DST catalog ids");
            ParamMap sp = parse_params(src_params_text), dp = parse_params(dst_params_text);
            auto d1 = instantiate_ad(iso_src, sp, false);
            auto d2 = instantiate_ad(iso_dst, dp, false);
            SearchStrategy strat;
            const auto& se = Catalog::instance().entry(iso_src);
            if (d1.dim == 3) {
                strat = StructuredGrid{};
            } else {
                AutFamilyGrid cfg{se.claimed_assoc, {}};
                for (const auto& [tgt, src] : se.assoc_params) cfg.base_params[tgt] = sp.at(src);
                strat = cfg;
            }
            auto res = search_witness(d1, d2, strat, budget);
            if (!res.witness) {
                std::cout << "no witness among " << res.candidates << " candidates\n";
                return 1;
            }
            IsoWitness w{iso_src, sp, iso_dst, dp, *res.witness};
            if (!out_file.empty()) save_witness(out_file, w);
            std::cout << witness_to_json(w).dump(2) << "\n";
            return 0;
        }

        if (*verify_cmd) {
            auto rep = run_suite(suite, seed, samples, data_dir());
            if (format == "json")
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << rep.to_text();
            return rep.all_ok() ? 0 : 1;
        }

        if (*probe_cmd) {
            auto rep = run_contradiction_probe(case_id);
            if (format == "json")
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << rep.to_text();
            return rep.all_ok() ? 0 : 1;
        }

        if (*export_cmd) {
            std::cout << catalog_to_json().dump(2) << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownId& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UnknownSuite& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "known suites:";
        for (const auto& s : suite_ids()) std::cerr << " " << s;
        std::cerr << "\n";
        return 2;
    } catch (const UnknownCase& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "known cases:";
        for (const auto& c : probe_ids()) std::cerr << " " << c;
        std::cerr << "\n";
        return 2;
    } catch (const ConstraintViolated& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
