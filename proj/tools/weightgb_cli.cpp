// weightgb command-line front end: parse ideal files, dispatch the
// computations, emit human-readable and JSON reports.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weightgb/betti.hpp"
#include "weightgb/bounds.hpp"
#include "weightgb/error.hpp"
#include "weightgb/field.hpp"
#include "weightgb/gb.hpp"
#include "weightgb/ideal_io.hpp"
#include "weightgb/lambda.hpp"
#include "weightgb/oracle.hpp"
#include "weightgb/parse.hpp"
#include "weightgb/relgb.hpp"
#include "weightgb/verify.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
    std::string path;
    std::vector<std::int64_t> weight;
    bool omega_h = false;
    std::string matrix; // rows "a,b,c;d,e,f"
    std::optional<std::int64_t> degree_cap;
    bool trace = false;
    bool as_json = false;
};

void add_order_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--weight", o.weight, "weight vector, comma separated")->delimiter(',');
    cmd->add_flag("--omega-h", o.omega_h, "use the shrinking-prefix matrix preorder for h");
    cmd->add_option("--matrix", o.matrix, "matrix preorder rows, e.g. '1,1,0;1,0,0'");
}

wgb::OrderSpec order_from_flags(const CommonOpts& o, const wgb::IdealFile& file) {
    int given = (!o.weight.empty()) + o.omega_h + (!o.matrix.empty());
    if (given > 1) throw wgb::precondition_error("choose at most one of --weight/--omega-h/--matrix");
    wgb::OrderSpec spec;
    if (!o.weight.empty()) {
        spec.kind = wgb::OrderSpec::Kind::Weight;
        spec.omega = o.weight;
    } else if (!o.matrix.empty()) {
        spec.kind = wgb::OrderSpec::Kind::Matrix;
        std::vector<std::int64_t> row;
        std::string cur;
        for (char c : o.matrix + ";") {
            if (c == ',' || c == ';') {
                if (cur.empty()) throw wgb::precondition_error("--matrix: empty entry");
                row.push_back(std::stoll(cur));
                cur.clear();
                if (c == ';') {
                    spec.rows.push_back(row);
                    row.clear();
                }
            } else {
                cur += c;
            }
        }
    } else if (o.omega_h) {
        spec.kind = wgb::OrderSpec::Kind::OmegaH;
    } else {
        spec = file.order; // fall back to the file, then Omega_h
    }
    return spec;
}

std::uint64_t default_seed(const wgb::IdealFile& file) {
    if (file.seed != 0) return file.seed;
    if (const char* env = std::getenv("WEIGHTGB_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

json error_json(const std::string& type, const std::string& msg) {
    return json{{"error", {{"type", type}, {"message", msg}}}};
}

void print_betti(const wgb::BettiTable& t, std::ostream& os) {
    os << "  j:";
    for (std::int64_t j = 0; j <= t.max_j; ++j) os << "\t" << j;
    os << "\n";
    for (int i = 0; i <= t.max_i; ++i) {
        os << "i=" << i << ":";
        for (std::int64_t j = 0; j <= t.max_j; ++j) {
            auto v = t.get(i, j);
            if (v == 0)
                os << "\t.";
            else
                os << "\t" << v;
        }
        os << "\n";
    }
}

json betti_json(const wgb::BettiTable& t) {
    json entries = json::array();
    for (const auto& [key, v] : t.entries)
        entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
    return json{{"max_i", t.max_i}, {"max_j", t.max_j}, {"entries", entries}};
}

template <wgb::Field K>
int run_gb(const wgb::IdealFile& file, const CommonOpts& o, bool initial_only) {
    auto gens = wgb::parse_generators<K>(file);
    std::int64_t maxdeg = 0;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
    auto w = wgb::resolve_weight(order_from_flags(o, file), file.ring,
                                 std::max(maxdeg, o.degree_cap.value_or(0)));
    auto res = wgb::relative_gb(gens, w, o.degree_cap);

    if (o.as_json) {
        json out;
        out["omega"] = w.omega;
        out["minimal"] = res.minimal;
        out["truncated"] = res.truncated;
        json init = json::array(), gb = json::array();
        for (const auto& g : res.initial_gens) init.push_back(g.str(file.ring));
        if (!initial_only)
            for (const auto& g : res.gb) gb.push_back(g.str(file.ring));
        out["initial"] = init;
        if (!initial_only) out["gb"] = gb;
        if (o.trace) {
            json hist = json::array();
            for (const auto& r : res.history)
                hist.push_back({{"iteration", r.iteration},
                                {"syzygy_rows", r.syzygy_rows},
                                {"pushed", r.pushed},
                                {"parked", r.parked}});
            out["iterations"] = hist;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "omega:";
    for (auto x : w.omega) std::cout << " " << x;
    std::cout << "\n";
    if (o.trace)
        for (const auto& r : res.history)
            std::cout << "iteration " << r.iteration << ": syzygy rows " << r.syzygy_rows
                      << ", pushed " << r.pushed << ", parked " << r.parked << "\n";
    std::cout << "initial generators (" << res.initial_gens.size() << "):\n";
    for (const auto& g : res.initial_gens) std::cout << "  " << g.str(file.ring) << "\n";
    if (!initial_only) {
        std::cout << "groebner basis (" << res.gb.size() << "):\n";
        for (const auto& g : res.gb) std::cout << "  " << g.str(file.ring) << "\n";
    }
    if (res.truncated) std::cout << "note: truncated at degree cap\n";
    return 0;
}

template <wgb::Field K>
int run_betti(const wgb::IdealFile& file, const CommonOpts& o, int max_i, std::int64_t max_j) {
    auto gens = wgb::parse_generators<K>(file);
    bool monomial = true;
    for (const auto& g : gens) monomial = monomial && g.terms().size() == 1;
    auto t = monomial ? wgb::monomial_betti(gens, max_i, max_j)
                      : wgb::truncated_betti(gens, max_i, max_j);
    if (o.as_json)
        std::cout << betti_json(t).dump(2) << "\n";
    else
        print_betti(t, std::cout);
    return 0;
}

template <wgb::Field K>
int run_lambda(const wgb::IdealFile& file, const CommonOpts& o, std::int64_t j_lo,
               std::int64_t j_hi) {
    auto gens = wgb::parse_generators<K>(file);
    std::vector<wgb::SplitGenerator<K>> gamma;
    for (std::size_t r = 0; r < gens.size(); ++r)
        gamma.push_back(wgb::split_generator(gens[r], file.ring, static_cast<int>(r)));
    auto mod = wgb::build_lambda(gamma, file.ring.h);
    if (o.as_json) {
        json dims = json::object();
        for (std::int64_t j = j_lo; j <= j_hi; ++j)
            dims[std::to_string(j)] = wgb::lambda_dim(mod, j).get_str();
        std::cout << json{{"basis_size", mod.basis.size()}, {"lambda", dims}}.dump(2) << "\n";
    } else {
        std::cout << "basis size: " << mod.basis.size() << "\n";
        for (std::int64_t j = j_lo; j <= j_hi; ++j)
            std::cout << "lambda_" << j << " = " << wgb::lambda_dim(mod, j).get_str() << "\n";
    }
    return 0;
}

template <wgb::Field K>
int run_oracle(const wgb::IdealFile& file, const CommonOpts& o, std::int64_t cap) {
    auto gens = wgb::parse_generators<K>(file);
    std::int64_t maxdeg = 0;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
    auto w = wgb::resolve_weight(order_from_flags(o, file), file.ring, std::max(maxdeg, cap));
    json rows = json::array();
    for (std::int64_t d = 0; d <= cap; ++d) {
        auto id = wgb::ideal_component_dim(gens, file.ring.n, d);
        auto ind = wgb::initial_ideal_component(gens, file.ring.n, d, w).dim();
        if (o.as_json)
            rows.push_back({{"d", d}, {"dim_ideal", id}, {"dim_initial", ind}});
        else
            std::cout << "d=" << d << "  dim I_d = " << id << "  dim in(I)_d = " << ind << "\n";
    }
    if (o.as_json) std::cout << json{{"components", rows}}.dump(2) << "\n";
    return 0;
}

// "a..b" or a single value
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        auto v = std::stoll(s);
        return {v, v};
    }
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weightgb: Groebner bases under weight preorders and Betti bound checks"};
    app.require_subcommand(1);

    CommonOpts gb_o, init_o, betti_o, lambda_o, oracle_o;

    auto* gb = app.add_subcommand("gb", "relative Groebner basis of an ideal file");
    gb->add_option("ideal", gb_o.path, "ideal JSON file")->required();
    add_order_flags(gb, gb_o);
    gb->add_option("--degree-cap", gb_o.degree_cap, "park elements above this x-degree");
    gb->add_flag("--trace", gb_o.trace, "print per-iteration statistics");
    gb->add_flag("--json", gb_o.as_json, "JSON output");

    auto* init = app.add_subcommand("initial", "generators of the initial ideal");
    init->add_option("ideal", init_o.path, "ideal JSON file")->required();
    add_order_flags(init, init_o);
    init->add_option("--degree-cap", init_o.degree_cap, "park elements above this x-degree");
    init->add_flag("--trace", init_o.trace, "print per-iteration statistics");
    init->add_flag("--json", init_o.as_json, "JSON output");

    auto* betti = app.add_subcommand("betti", "graded Betti table within a window");
    betti->add_option("ideal", betti_o.path, "ideal JSON file")->required();
    std::string window_str;
    betti->add_option("--window", window_str, "window as 'max_i,max_j' (default from file)");
    betti->add_flag("--json", betti_o.as_json, "JSON output");

    auto* lambda = app.add_subcommand("lambda", "graded dimensions of the lcm module");
    lambda->add_option("ideal", lambda_o.path, "ideal JSON file with split generators")->required();
    std::string j_range = "0..8";
    lambda->add_option("--j-range", j_range, "degree range 'a..b'");
    lambda->add_flag("--json", lambda_o.as_json, "JSON output");

    auto* bounds = app.add_subcommand("bounds", "closed-form bound tables");
    bounds->set_help_flag("--help", "print help"); // frees -h/--h for the height option
    std::int64_t bh = 2;
    std::string bj = "0..3", bi = "0..0";
    std::optional<std::int64_t> bigheight_opt;
    bool bounds_json = false;
    bounds->add_option("--h", bh, "height")->required();
    bounds->add_option("--j", bj, "degree-offset range 'a..b'");
    bounds->add_option("--i", bi, "homological range 'a..b'");
    bounds->add_option("--bigheight", bigheight_opt, "also tabulate the bigheight bound");
    bounds->add_flag("--json", bounds_json, "JSON output");

    auto* verify = app.add_subcommand("verify", "check a corpus against the bounds");
    std::string corpus_dir = "corpus";
    int jobs = 1;
    bool verify_json = false;
    verify->add_option("--corpus-dir", corpus_dir, "directory of ideal JSON files");
    verify->add_option("--jobs", jobs, "verify corpus items in parallel");
    verify->add_flag("--json", verify_json, "JSON output");

    auto* oracle = app.add_subcommand("oracle", "brute-force graded dimensions for cross-checks");
    oracle->add_option("ideal", oracle_o.path, "ideal JSON file")->required();
    std::int64_t oracle_cap = 6;
    add_order_flags(oracle, oracle_o);
    oracle->add_option("--degree-cap", oracle_cap, "largest degree to tabulate");
    oracle->add_flag("--json", oracle_o.as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bounds->parsed()) {
            auto [jlo, jhi] = parse_range(bj);
            auto [ilo, ihi] = parse_range(bi);
            json rows = json::array();
            for (std::int64_t j = jlo; j <= jhi; ++j) {
                json row = {{"j", j}, {"bound_A", wgb::bound_A(bh, j).get_str()}};
                if (bigheight_opt && *bigheight_opt >= 2) {
                    for (std::int64_t i = ilo; i <= ihi; ++i)
                        row["bound_thm48_i" + std::to_string(i)] =
                            wgb::bound_thm48(*bigheight_opt, i, j).get_str();
                }
                rows.push_back(row);
            }
            json out = {{"h", bh},
                        {"bound_B", wgb::bound_B(bh).get_str()},
                        {"castelnuovo", wgb::castelnuovo_bound(bh).get_str()},
                        {"rows", rows}};
            if (bounds_json) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "h = " << bh << ", bound_B = " << wgb::bound_B(bh).get_str()
                          << ", castelnuovo = " << wgb::castelnuovo_bound(bh).get_str() << "\n";
                for (const auto& row : rows) {
                    std::cout << "j=" << row["j"].get<std::int64_t>()
                              << "  bound_A = " << row["bound_A"].get<std::string>();
                    for (auto it = row.begin(); it != row.end(); ++it)
                        if (it.key().rfind("bound_thm48", 0) == 0)
                            std::cout << "  " << it.key() << " = " << it.value().get<std::string>();
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (verify->parsed()) {
            auto reports = wgb::verify_corpus(corpus_dir, jobs);
            bool all_ok = true;
            json out = json::array();
            for (const auto& r : reports) {
                all_ok = all_ok && r.passed();
                if (verify_json) {
                    out.push_back(wgb::to_json(r));
                } else {
                    std::cout << r.instance << ": " << (r.passed() ? "ok" : "FAILED") << " ("
                              << r.checks.size() << " checks, " << r.elapsed_ms << " ms)\n";
                    for (const auto& c : r.checks)
                        if (!c.ok && !c.informational)
                            std::cout << "  " << c.bound_name << " at (i=" << c.i << ", j=" << c.j
                                      << "): " << c.computed.get_str() << " vs "
                                      << c.bound.get_str() << "\n";
                }
            }
            if (verify_json) std::cout << out.dump(2) << "\n";
            return all_ok ? 0 : 1;
        }

        const CommonOpts* oo = gb->parsed()       ? &gb_o
                               : init->parsed()   ? &init_o
                               : betti->parsed()  ? &betti_o
                               : lambda->parsed() ? &lambda_o
                                                  : &oracle_o;
        wgb::IdealFile file = wgb::parse_ideal_file(oo->path);
        (void)default_seed(file); // reserved for seeded subcommands
        bool rational = file.ring.field.p == 0;

        if (gb->parsed() || init->parsed()) {
            bool initial_only = init->parsed();
            return rational ? run_gb<wgb::QQ>(file, *oo, initial_only)
                            : run_gb<wgb::Fp>(file, *oo, initial_only);
        }
        if (betti->parsed()) {
            int mi = file.window.max_i;
            std::int64_t mj = file.window.max_j;
            if (!window_str.empty()) {
                auto comma = window_str.find(',');
                if (comma == std::string::npos)
                    throw wgb::precondition_error("--window: expected 'max_i,max_j'");
                mi = std::stoi(window_str.substr(0, comma));
                mj = std::stoll(window_str.substr(comma + 1));
            }
            return rational ? run_betti<wgb::QQ>(file, *oo, mi, mj)
                            : run_betti<wgb::Fp>(file, *oo, mi, mj);
        }
        if (lambda->parsed()) {
            auto [lo, hi] = parse_range(j_range);
            return rational ? run_lambda<wgb::QQ>(file, *oo, lo, hi)
                            : run_lambda<wgb::Fp>(file, *oo, lo, hi);
        }
        return rational ? run_oracle<wgb::QQ>(file, *oo, oracle_cap)
                        : run_oracle<wgb::Fp>(file, *oo, oracle_cap);
    } catch (const wgb::parse_error& e) {
        std::cerr << error_json("parse", e.what()).dump() << "\n";
        return 1;
    } catch (const wgb::precondition_error& e) {
        std::cerr << error_json("precondition", e.what()).dump() << "\n";
        return 1;
    } catch (const wgb::resource_error& e) {
        std::cerr << error_json("resource", e.what()).dump() << "\n";
        return 1;
    } catch (const wgb::search_failure& e) {
        std::cerr << error_json("search", e.what()).dump() << "\n";
        return 1;
    } catch (const wgb::error& e) {
        std::cerr << error_json("internal", e.what()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << error_json("unexpected", e.what()).dump() << "\n";
        return 1;
    }
}
