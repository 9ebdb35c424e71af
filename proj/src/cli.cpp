#include "oriftl/cli.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oriftl/calibrated.hpp"
#include "oriftl/llt.hpp"
#include "oriftl/parallel.hpp"
#include "oriftl/paths.hpp"

namespace oriftl::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config;
    int n = 0;
    std::string shape;
    std::string block_of;
    std::string tableau;
    std::string format = "tsv";
    std::uint64_t seed = 0;
    double tol = 1e-8;
    int jobs = 0;
    bool allow_self_inverse = false;
    bool blob = false;
};

ParamConfig load_config(const Options& o) {
    if (o.config.empty()) throw UsageError("--config is required for this command");
    return ParamConfig::from_file(o.config);
}

void require_n(const Options& o) {
    if (o.n < 1 || o.n > kMaxN) throw UsageError("--n must be between 1 and " + std::to_string(kMaxN));
}

Shape require_shape(const std::string& s, int n, const char* flag) {
    if (s.empty()) throw UsageError(std::string(flag) + " is required for this command");
    Shape sh;
    try {
        sh = parse_shape(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!in_lambda(n, sh)) throw UsageError("shape " + shape_str(sh) + " is not in Lambda_" + std::to_string(n));
    return sh;
}

StandardTableau require_tableau(const Options& o) {
    if (o.tableau.empty()) throw UsageError("--tableau is required for this command");
    try {
        return parse_tableau(o.tableau);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad tableau: ") + e.what());
    }
}

json residues_json(const std::vector<Residue>& rs, const ParamConfig& cfg) {
    json a = json::array();
    for (const auto& r : rs) a.push_back(cfg.residue_str(r));
    return a;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::vector<std::string> shape_names(const std::vector<Shape>& ss) {
    std::vector<std::string> out;
    for (const auto& s : ss) out.push_back(shape_str(s));
    return out;
}

int cmd_validate(const Options& o, std::ostream& out) {
    const auto cfg = load_config(o);
    const auto v = validate_config(cfg, o.allow_self_inverse);
    if (o.format == "json") {
        out << json{{"valid", v.empty()}, {"violations", v}, {"config", cfg.to_json()}}.dump(2) << "\n";
    } else {
        out << (v.empty() ? "valid" : "invalid") << "\n";
        for (const auto& s : v) out << s << "\n";
    }
    return v.empty() ? kOk : kCheckFailed;
}

int cmd_shapes(const Options& o, std::ostream& out) {
    require_n(o);
    const auto all = shapes(o.n);
    if (o.format == "json") {
        json a = json::array();
        for (const auto& s : all)
            a.push_back({{"shape", shape_str(s)}, {"count", count_std(o.n, s)}});
        out << json{{"n", o.n}, {"shapes", a}}.dump(2) << "\n";
    } else {
        out << "shape\tcount\n";
        for (const auto& s : all) out << shape_str(s) << "\t" << count_std(o.n, s) << "\n";
    }
    return kOk;
}

int cmd_tableaux(const Options& o, std::ostream& out) {
    require_n(o);
    const Shape sh = require_shape(o.shape, o.n, "--shape");
    std::optional<ParamConfig> cfg;
    if (!o.config.empty()) cfg = load_config(o);
    const auto ts = enumerate_std(o.n, sh);
    if (o.format == "json") {
        json a = json::array();
        for (const auto& t : ts) {
            json item{{"tableau", tableau_str(t)}, {"entries", t.entries()}};
            if (cfg) {
                item["residues"] = residues_json(residue_seq(t, *cfg), *cfg);
                item["degree"] = degree_tiles(t, *cfg);
            }
            a.push_back(item);
        }
        out << json{{"n", o.n}, {"shape", shape_str(sh)}, {"count", ts.size()}, {"tableaux", a}}.dump(2) << "\n";
    } else {
        out << "tableau" << (cfg ? "\tdegree\tresidues" : "") << "\n";
        for (const auto& t : ts) {
            out << tableau_str(t);
            if (cfg) {
                std::vector<std::string> rs;
                for (const auto& r : residue_seq(t, *cfg)) rs.push_back(cfg->residue_str(r));
                out << "\t" << degree_tiles(t, *cfg) << "\t" << join(rs, ",");
            }
            out << "\n";
        }
    }
    return kOk;
}

GradedMatrix maybe_block(const GradedMatrix& m, const GradedMatrix& delta, const Options& o) {
    if (o.block_of.empty()) return m;
    const Shape sh = require_shape(o.block_of, o.n, "--block-of");
    return m.restrict_to(block_of(delta, sh));
}

void print_matrix(const GradedMatrix& m, const Options& o, std::ostream& out, const json& extra = json::object()) {
    if (o.format == "json") {
        json j = m.to_json();
        j["n"] = o.n;
        for (const auto& [k, v] : extra.items()) j[k] = v;
        out << j.dump(2) << "\n";
    } else {
        out << m.to_tsv();
    }
}

int cmd_delta(const Options& o, std::ostream& out) {
    require_n(o);
    const auto cfg = load_config(o);
    const auto delta = delta_matrix(o.n, cfg, std::nullopt, o.jobs);
    print_matrix(maybe_block(delta, delta, o), o, out);
    return kOk;
}

int cmd_decomp(const Options& o, std::ostream& out, std::ostream& err) {
    require_n(o);
    const auto cfg = load_config(o);
    const auto delta = delta_matrix(o.n, cfg, std::nullopt, o.jobs);
    auto [N, A] = na_factorize_blocks(delta, o.jobs);
    N.conjectural = true;
    A.conjectural = true;
    const GradedMatrix nb = maybe_block(N, delta, o);
    const auto warnings = positivity_warnings(nb);
    for (const auto& w : warnings) err << w << "\n";
    if (o.format == "json") {
        json j{{"n", o.n}, {"N", nb.to_json()}, {"A", maybe_block(A, delta, o).to_json()}, {"warnings", warnings},
               {"conjectural", true}};
        out << j.dump(2) << "\n";
    } else {
        out << nb.to_tsv();
    }
    return kOk;
}

int cmd_blocks(const Options& o, std::ostream& out) {
    require_n(o);
    const auto cfg = load_config(o);
    const auto bs = blocks(o.n, cfg, o.jobs);
    if (o.format == "json") {
        json a = json::array();
        for (const auto& b : bs) a.push_back(shape_names(b));
        out << json{{"n", o.n}, {"blocks", a}}.dump(2) << "\n";
    } else {
        for (const auto& b : bs) out << join(shape_names(b), "\t") << "\n";
    }
    return kOk;
}

int cmd_ladders(const Options& o, std::ostream& out) {
    require_n(o);
    const auto cfg = load_config(o);
    std::optional<Shape> only;
    if (!o.shape.empty()) only = require_shape(o.shape, o.n, "--shape");
    json a = json::array();
    std::ostringstream tsv;
    tsv << "tableau\twidth\tclass_size\n";
    for (const auto& cls : residue_partition(o.n, cfg)) {
        for (const auto& t : class_ladders(cls, cfg)) {
            if (only && !(t.shape == *only)) continue;
            a.push_back({{"tableau", tableau_str(t)}, {"width", path_width(t, cfg)}, {"class_size", cls.size()}});
            tsv << tableau_str(t) << "\t" << path_width(t, cfg) << "\t" << cls.size() << "\n";
        }
    }
    if (o.format == "json")
        out << json{{"n", o.n}, {"ladders", a}}.dump(2) << "\n";
    else
        out << tsv.str();
    return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    require_n(o);
    const auto cfg = load_config(o);
    const auto lower = simple_dim_lower_bounds(o.n, cfg);
    const auto dims = simple_graded_dims(o.n, cfg, o.jobs);
    json a = json::array();
    std::ostringstream tsv;
    tsv << "# CONJECTURAL dimensions\nshape\tlower_bound\tstd_count\tdim_at_1\tgraded_dim\n";
    for (std::size_t i = 0; i < lower.size(); ++i) {
        const auto& [s, lb] = lower[i];
        const LaurentPoly& d = dims[i].second;
        const std::string at1 = lp_eval_one(d).str();
        a.push_back({{"shape", shape_str(s)},
                     {"lower_bound", lb},
                     {"std_count", count_std(o.n, s)},
                     {"dim_at_1", at1},
                     {"graded_dim", to_json(d)}});
        tsv << shape_str(s) << "\t" << lb << "\t" << count_std(o.n, s) << "\t" << at1 << "\t" << d.str() << "\n";
    }
    if (o.format == "json")
        out << json{{"n", o.n}, {"bounds", a}, {"conjectural", true}}.dump(2) << "\n";
    else
        out << tsv.str();
    return kOk;
}

int cmd_calibrated(const Options& o, std::ostream& out) {
    require_n(o);
    const auto cfg = load_config(o);
    if (o.tol <= 0) throw UsageError("--tol must be positive");
    std::vector<Shape> targets = shapes(o.n);
    if (!o.shape.empty()) targets = {require_shape(o.shape, o.n, "--shape")};
    std::mt19937_64 rng(o.seed);
    const NumericSeed seed = make_seed(cfg, rng);
    check_seed(cfg, seed);

    struct Row {
        RelationReport rep;
        double jm = 0.0;
        int dim = 0;
        std::string error;
    };
    std::vector<Row> rows(targets.size());
    parallel_for(targets.size(), o.jobs, [&](std::size_t i) {
        try {
            const auto m = build_calibrated(targets[i], o.n, cfg, seed);
            Row r;
            r.dim = m.dim();
            r.rep = check_hecke_relations(m, o.tol);
            r.rep.merge(check_tl_relations(m, o.tol));
            if (o.blob) r.rep.merge(blob_check(m, seed, o.tol));
            r.jm = jm_spectrum_residual(m, cfg, seed);
            rows[i] = std::move(r);
        } catch (const NonGenericSeed& e) {
            rows[i].error = e.what();
        }
    });
    bool ok = true;
    json a = json::array();
    std::ostringstream tsv;
    tsv << "shape\tdim\trelation\tresidual\tpass\n";
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const Row& r = rows[i];
        const std::string sh = shape_str(targets[i]);
        if (!r.error.empty()) {
            ok = false;
            a.push_back({{"shape", sh}, {"error", r.error}, {"pass", false}});
            tsv << sh << "\t-\terror\t" << r.error << "\tFAIL\n";
            continue;
        }
        const bool pass = r.rep.pass() && r.jm < o.tol;
        ok = ok && pass;
        json item{{"shape", sh}, {"dim", r.dim}, {"relations", r.rep.to_json()}, {"jm_spectrum", r.jm}, {"pass", pass}};
        a.push_back(item);
        for (const auto& [k, v] : r.rep.residuals)
            tsv << sh << "\t" << r.dim << "\t" << k << "\t" << v << "\t" << (v < o.tol ? "ok" : "FAIL") << "\n";
        tsv << sh << "\t" << r.dim << "\tjm_spectrum\t" << r.jm << "\t" << (r.jm < o.tol ? "ok" : "FAIL") << "\n";
    }
    if (o.format == "json")
        out << json{{"n", o.n}, {"seed", o.seed}, {"tol", o.tol}, {"reports", a}, {"pass", ok}}.dump(2) << "\n";
    else
        out << tsv.str() << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kOk : kCheckFailed;
}

int cmd_degree(const Options& o, std::ostream& out) {
    const auto cfg = load_config(o);
    const auto t = require_tableau(o);
    const int dt = degree_tiles(t, cfg);
    const int dk = degree_klr(t, cfg);
    if (o.format == "json") {
        const auto p = embed(t, cfg);
        json tiles = json::array();
        for (const auto& tile : tiling(t, cfg))
            tiles.push_back({{"top_x", tile.top_x},
                             {"top_y", tile.top_y},
                             {"side", tile.side == Side::L ? "L" : "R"},
                             {"degree", tile_degree(tile, p.lattice_base, cfg)}});
        out << json{{"tableau", tableau_str(t)},
                    {"degree_tiles", dt},
                    {"degree_klr", dk},
                    {"path", p.xs()},
                    {"residues", residues_json(residue_seq(t, cfg), cfg)},
                    {"tiles", tiles}}
                   .dump(2)
            << "\n";
    } else {
        out << "degree_tiles\t" << dt << "\ndegree_klr\t" << dk << "\n" << path_dump(t, cfg);
    }
    return dt == dk ? kOk : kCheckFailed;
}

int cmd_word(const Options& o, std::ostream& out) {
    const auto cfg = load_config(o);
    const auto t = require_tableau(o);
    const auto w = reduced_word(t, cfg);
    const auto perm = w_of(t);
    const int len = coxeter_length(perm);
    if (o.format == "json") {
        out << json{{"tableau", tableau_str(t)}, {"word", w}, {"length", w.size()}, {"coxeter_length", len},
                    {"signed_permutation", perm}}
                   .dump(2)
            << "\n";
    } else {
        std::vector<std::string> letters;
        for (int g : w) letters.push_back("s" + std::to_string(g));
        out << "word\t" << join(letters, " ") << "\nlength\t" << w.size() << "\ncoxeter_length\t" << len << "\n";
    }
    return static_cast<int>(w.size()) == len ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graded decomposition numbers and calibrated modules for one-boundary tableaux", "oriftl"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--jobs", o.jobs, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

    auto add_config = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--config", o.config, "parameter config (JSON)");
        if (required) opt->required();
    };
    auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "number of strands")->required(); };

    auto* validate = app.add_subcommand("validate", "check a parameter config");
    add_config(validate, true);
    validate->add_flag("--allow-self-inverse", o.allow_self_inverse, "accept self-inverse formal orbits");

    auto* shp = app.add_subcommand("shapes", "list Lambda_n with tableau counts");
    add_n(shp);

    auto* tab = app.add_subcommand("tableaux", "list standard tableaux of a shape");
    add_n(tab);
    tab->add_option("--shape", o.shape, "shape literal (k,name)")->required();
    add_config(tab, false);

    auto* delta = app.add_subcommand("delta", "graded Delta-matrix");
    auto* decomp = app.add_subcommand("decomp", "conjectural graded decomposition matrix N");
    for (auto* c : {delta, decomp}) {
        add_config(c, true);
        add_n(c);
        c->add_option("--block-of", o.block_of, "restrict to the Delta-class of this shape");
    }

    auto* blk = app.add_subcommand("blocks", "Delta-equivalence classes");
    add_config(blk, true);
    add_n(blk);

    auto* lad = app.add_subcommand("ladders", "ladder tableaux by residue class");
    add_config(lad, true);
    add_n(lad);
    lad->add_option("--shape", o.shape, "only ladders of this shape");

    auto* bnd = app.add_subcommand("bounds", "simple dimension lower bounds and conjectural dimensions");
    add_config(bnd, true);
    add_n(bnd);

    auto* cal = app.add_subcommand("calibrated-check", "numeric relation check of calibrated modules");
    add_config(cal, true);
    add_n(cal);
    cal->add_option("--shape", o.shape, "only this shape");
    cal->add_option("--seed", o.seed, "random seed");
    cal->add_option("--tol", o.tol, "residual tolerance");
    cal->add_flag("--blob", o.blob, "also check the blob quotient relations");

    auto* deg = app.add_subcommand("degree", "degree of a tableau by tiles and by generators");
    auto* wrd = app.add_subcommand("word", "reduced word of a tableau");
    for (auto* c : {deg, wrd}) {
        add_config(c, true);
        c->add_option("--tableau", o.tableau, "tableau literal (k,name):[e1,...,en]")->required();
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(o, out);
        if (shp->parsed()) return cmd_shapes(o, out);
        if (tab->parsed()) return cmd_tableaux(o, out);
        if (delta->parsed()) return cmd_delta(o, out);
        if (decomp->parsed()) return cmd_decomp(o, out, err);
        if (blk->parsed()) return cmd_blocks(o, out);
        if (lad->parsed()) return cmd_ladders(o, out);
        if (bnd->parsed()) return cmd_bounds(o, out);
        if (cal->parsed()) return cmd_calibrated(o, out);
        if (deg->parsed()) return cmd_degree(o, out);
        if (wrd->parsed()) return cmd_word(o, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace oriftl::cli
