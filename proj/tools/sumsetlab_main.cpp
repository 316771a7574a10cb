// sumsetlab: exact sumset, GAP-hull, hyperplane-cover and inequality
// verification toolkit for finite subsets of Z^k, plus batch experiments.
// One process per invocation; all output is deterministic given the flags.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sumsetlab/experiments.hpp"
#include "sumsetlab/gap.hpp"
#include "sumsetlab/geometry.hpp"
#include "sumsetlab/inequalities.hpp"
#include "sumsetlab/io.hpp"
#include "sumsetlab/transforms.hpp"

namespace ss = sumsetlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifiedFail = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitCapacity = 4;

struct GlobalOptions {
    std::string out;
    std::string format;  // "", "json", "csv", "text"
    std::uint64_t seed = 0;
    std::uint64_t cap_points = 0;
    std::uint64_t cap_enum = 0;
    std::int64_t normal_bound = 0;
    unsigned threads = 0;

    ss::Caps caps() const {
        ss::Caps caps = ss::default_caps();
        if (cap_points > 0) caps.max_points = cap_points;
        if (cap_enum > 0) caps.max_enumeration = cap_enum;
        return caps;
    }
};

void emit(const GlobalOptions& g, const std::string& payload) {
    if (g.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(g.out);
    if (!out) throw ss::ArgumentError("cannot open --out file: " + g.out);
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << "\n";
}

void emit_json(const GlobalOptions& g, const ss::Json& j) { emit(g, j.dump(2)); }

void emit_point_set(const GlobalOptions& g, const std::string& command, const ss::Json& params,
                    const ss::PointSet& set) {
    if (g.format == "json") {
        emit_json(g, ss::make_report_envelope(command, params, ss::to_json(set)));
        return;
    }
    std::ostringstream os;
    ss::write_point_set(os, set);
    emit(g, os.str());
}

int exit_code_for_report(const ss::InequalityReport& rep) {
    if (!rep.hypotheses_ok) return kExitHypothesis;
    if (!rep.pass && rep.asserted) return kExitVerifiedFail;
    return kExitOk;
}

std::vector<std::int64_t> parse_i64_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss_(s);
    std::string item;
    while (std::getline(ss_, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::vector<ss::Rational> parse_rational_list(const std::string& s) {
    std::vector<ss::Rational> out;
    std::stringstream ss_(s);
    std::string item;
    while (std::getline(ss_, item, ',')) out.push_back(ss::rational_from_string(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sumsetlab: exact additive-combinatorics computations over Z^k"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--out", g.out, "write output to this file instead of stdout");
    app.add_option("--format", g.format, "output format override (json, csv, text)");
    app.add_option("--seed", g.seed, "seed for randomized subcommands");
    app.add_option("--cap-points", g.cap_points, "max materialized points (default 5e7)");
    app.add_option("--cap-enum", g.cap_enum, "max GAP/box enumeration (default 1e7)");
    app.add_option("--normal-bound", g.normal_bound, "hyperplane normal coordinate bound (default 2*diameter)");
    app.add_option("--threads", g.threads, "worker threads (default: SUMSETLAB_THREADS or hardware)");

    // --- sumset ---
    std::string file_a, file_b;
    auto* cmd_sumset = app.add_subcommand("sumset", "Minkowski sum of two point-set files");
    cmd_sumset->add_option("a", file_a, "first point-set file")->required();
    cmd_sumset->add_option("b", file_b, "second point-set file")->required();

    // --- iterate ---
    std::string it_set;
    std::uint64_t it_h = 1;
    auto* cmd_iterate = app.add_subcommand("iterate", "h-fold iterated sumset");
    cmd_iterate->add_option("--set", it_set)->required();
    cmd_iterate->add_option("--h", it_h)->required();

    // --- cover ---
    std::string cov_set;
    auto* cmd_cover = app.add_subcommand("cover", "minimum parallel-hyperplane cover certificate");
    cmd_cover->add_option("--set", cov_set)->required();

    // --- gap-hull ---
    std::string gh_set, gh_mode = "exact";
    std::uint64_t gh_n = 1;
    int gh_k = 1;
    auto* cmd_hull = app.add_subcommand("gap-hull", "smallest X+P cover with |X| <= n, P a 1-proper k-GAP");
    cmd_hull->add_option("--set", gh_set)->required();
    cmd_hull->add_option("--n", gh_n)->required();
    cmd_hull->add_option("--k", gh_k)->required();
    cmd_hull->add_option("--mode", gh_mode, "exact or heuristic");

    // --- compress ---
    std::string cp_set;
    int cp_axis = 0;
    bool cp_full = false;
    auto* cmd_compress = app.add_subcommand("compress", "coordinate-plane compression");
    cmd_compress->add_option("--set", cp_set)->required();
    cmd_compress->add_option("--axis", cp_axis, "compress along this axis (1-based)");
    cmd_compress->add_flag("--full", cp_full, "iterate over all axes to the fixpoint");

    // --- ruzsa-cover ---
    std::string rz_a, rz_b;
    auto* cmd_ruzsa = app.add_subcommand("ruzsa-cover", "greedy X with a inside X+b-b, |X| <= |a+b|/|b|");
    cmd_ruzsa->add_option("--a", rz_a)->required();
    cmd_ruzsa->add_option("--b", rz_b)->required();

    // --- verify ---
    auto* cmd_verify = app.add_subcommand("verify", "run one inequality verifier");
    cmd_verify->require_subcommand(1);
    std::string v_a, v_b, v_set, v_gap, v_x, v_y, v_z, v_f, v_g, v_hf, v_eps = "1/2";
    std::uint64_t v_h = 1, v_ell = 1, v_n = 1, v_m = 1;
    unsigned v_d = 1;
    auto* v_bm = cmd_verify->add_subcommand("bm", "discrete Brunn-Minkowski with hyperplane hypothesis");
    v_bm->add_option("--a", v_a)->required();
    v_bm->add_option("--b", v_b)->required();
    v_bm->add_option("--n", v_n)->required();
    v_bm->add_option("--epsilon", v_eps);
    auto* v_lev = cmd_verify->add_subcommand("lev", "iterated-sumset lower bound");
    v_lev->add_option("--set", v_set)->required();
    v_lev->add_option("--h", v_h)->required();
    auto* v_ap = cmd_verify->add_subcommand("ap-containment", "long AP inside 20m.A");
    v_ap->add_option("--set", v_set)->required();
    v_ap->add_option("--m", v_m)->required();
    auto* v_shrink = cmd_verify->add_subcommand("box-shrinking", "covering B after shrinking the boxes");
    v_shrink->add_option("--gap", v_gap, "gap record string")->required();
    v_shrink->add_option("--x", v_x)->required();
    v_shrink->add_option("--set", v_set)->required();
    v_shrink->add_option("--ell", v_ell)->required();
    v_shrink->add_option("--m", v_m)->required();
    auto* v_boxes = cmd_verify->add_subcommand("bm-in-boxes", "dense subsets of unbalanced boxes");
    v_boxes->add_option("--y", v_y)->required();
    v_boxes->add_option("--z", v_z)->required();
    v_boxes->add_option("--gap", v_gap)->required();
    v_boxes->add_option("--ell", v_ell)->required();
    v_boxes->add_option("--n", v_n)->required();
    auto* v_super = cmd_verify->add_subcommand("superadditivity", "d-th-root superadditivity of sums");
    v_super->add_option("--f", v_f)->required();
    v_super->add_option("--g", v_g)->required();
    v_super->add_option("--h-file", v_hf)->required();
    v_super->add_option("--d", v_d)->required();
    auto* v_plun = cmd_verify->add_subcommand("plunnecke", "Petridis iterated-sumset growth");
    v_plun->add_option("--a", v_a)->required();
    v_plun->add_option("--b", v_b)->required();
    v_plun->add_option("--ell", v_ell)->required();
    auto* v_stab = cmd_verify->add_subcommand("stability-containment", "A, B inside translates of P");
    v_stab->add_option("--a", v_a)->required();
    v_stab->add_option("--b", v_b)->required();
    v_stab->add_option("--gap", v_gap)->required();
    auto* v_cube = cmd_verify->add_subcommand("cube-summand", "cube-padded Brunn-Minkowski");
    v_cube->add_option("--a", v_a)->required();
    v_cube->add_option("--b", v_b)->required();

    // --- simplex-table ---
    int st_kmax = 2;
    std::int64_t st_nmax = 10;
    auto* cmd_table = app.add_subcommand("simplex-table", "doubling table for discrete simplices");
    cmd_table->add_option("--k-max", st_kmax);
    cmd_table->add_option("--n-max", st_nmax);

    // --- tightness ---
    int tg_k = 2;
    std::int64_t tg_n = 4, tg_m = 6400;
    std::string tg_t = "1/64", tg_out_a, tg_out_b;
    bool tg_relax = false;
    auto* cmd_tight = app.add_subcommand("tightness", "interval-plus-points construction and measurement");
    cmd_tight->add_option("--k", tg_k);
    cmd_tight->add_option("--n", tg_n);
    cmd_tight->add_option("--t", tg_t);
    cmd_tight->add_option("--m", tg_m);
    cmd_tight->add_option("--out-a", tg_out_a, "also write A to this point-set file");
    cmd_tight->add_option("--out-b", tg_out_b, "also write B to this point-set file");
    cmd_tight->add_flag("--relax-ratios", tg_relax, "drop the m >> 1/t >> n >> k preconditions");

    // --- search ---
    int se_k = 2;
    std::int64_t se_n = 1;
    std::uint64_t se_size = 3, se_budget = 20000;
    std::string se_strategy = "exhaustive", se_frontier;
    auto* cmd_search = app.add_subcommand("search", "minimal-doubling search under the cover constraint");
    cmd_search->add_option("--k", se_k);
    cmd_search->add_option("--n", se_n);
    cmd_search->add_option("--size", se_size)->required();
    cmd_search->add_option("--strategy", se_strategy, "exhaustive or local");
    cmd_search->add_option("--budget", se_budget);
    cmd_search->add_option("--frontier", se_frontier, "append the record to this JSON-lines file");

    // --- estimate ---
    std::string es_family = "box", es_ks = "2", es_ns = "2", es_ts = "1/2";
    auto* cmd_estimate = app.add_subcommand("estimate", "empirical constant estimation over a family grid");
    cmd_estimate->add_option("--family", es_family, "box, simplex, cone, interval-plus-points, random-dense");
    cmd_estimate->add_option("--k", es_ks, "comma-separated k values");
    cmd_estimate->add_option("--n", es_ns, "comma-separated n values");
    cmd_estimate->add_option("--t", es_ts, "comma-separated rational t values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        const ss::Caps caps = g.caps();

        if (*cmd_sumset) {
            ss::PointSet a = ss::read_point_set_file(file_a);
            ss::PointSet b = ss::read_point_set_file(file_b);
            ss::PointSet result = ss::sumset(a, b, caps);
            emit_point_set(g, "sumset", ss::Json{{"a", file_a}, {"b", file_b}}, result);
            return kExitOk;
        }
        if (*cmd_iterate) {
            ss::PointSet a = ss::read_point_set_file(it_set);
            ss::PointSet result = ss::iterated_sumset(a, it_h, caps);
            emit_point_set(g, "iterate", ss::Json{{"set", it_set}, {"h", it_h}}, result);
            return kExitOk;
        }
        if (*cmd_cover) {
            ss::PointSet b = ss::read_point_set_file(cov_set);
            ss::CoverCertificate cert = ss::cover_number(b, g.normal_bound, g.threads);
            emit_json(g, ss::make_report_envelope("cover", ss::Json{{"set", cov_set}},
                                                  ss::to_json(cert)));
            return kExitOk;
        }
        if (*cmd_hull) {
            ss::PointSet b = ss::read_point_set_file(gh_set);
            ss::HullMode mode;
            if (gh_mode == "exact")
                mode = ss::HullMode::exact;
            else if (gh_mode == "heuristic")
                mode = ss::HullMode::heuristic;
            else
                throw ss::ArgumentError("gap-hull: --mode must be exact or heuristic");
            ss::GapHullResult hull = ss::gap_hull(b, gh_n, gh_k, mode, ss::HullConfig{}, caps);
            emit_json(g, ss::make_report_envelope(
                             "gap-hull", ss::Json{{"set", gh_set}, {"n", gh_n}, {"k", gh_k}, {"mode", gh_mode}},
                             ss::to_json(hull)));
            return kExitOk;
        }
        if (*cmd_compress) {
            ss::PointSet a = ss::read_point_set_file(cp_set);
            if (cp_full == (cp_axis != 0))
                throw ss::ArgumentError("compress: pass exactly one of --axis or --full");
            ss::PointSet result = cp_full ? ss::compress_fully(a) : ss::compress(a, cp_axis);
            emit_point_set(g, "compress", ss::Json{{"set", cp_set}, {"axis", cp_axis}, {"full", cp_full}},
                           result);
            return kExitOk;
        }
        if (*cmd_ruzsa) {
            ss::PointSet a = ss::read_point_set_file(rz_a);
            ss::PointSet b = ss::read_point_set_file(rz_b);
            ss::PointSet x = ss::ruzsa_cover(a, b, caps);
            emit_point_set(g, "ruzsa-cover", ss::Json{{"a", rz_a}, {"b", rz_b}}, x);
            return kExitOk;
        }
        if (*cmd_verify) {
            ss::InequalityReport rep;
            ss::Json params;
            if (*v_bm) {
                ss::BmOptions opt;
                opt.normal_bound = g.normal_bound;
                opt.threads = g.threads;
                rep = ss::verify_bm(ss::read_point_set_file(v_a), ss::read_point_set_file(v_b), v_n,
                                    ss::rational_from_string(v_eps), opt, caps);
                params = ss::Json{{"a", v_a}, {"b", v_b}, {"n", v_n}, {"epsilon", v_eps}};
            } else if (*v_lev) {
                rep = ss::verify_lev(ss::read_point_set_file(v_set), v_h, caps);
                params = ss::Json{{"set", v_set}, {"h", v_h}};
            } else if (*v_ap) {
                rep = ss::verify_ap_containment(ss::read_point_set_file(v_set),
                                                static_cast<std::int64_t>(v_m), caps);
                params = ss::Json{{"set", v_set}, {"m", v_m}};
            } else if (*v_shrink) {
                rep = ss::verify_box_shrinking(ss::Gap::parse_record(v_gap), ss::read_point_set_file(v_x),
                                               ss::read_point_set_file(v_set), v_ell, v_m, caps);
                params = ss::Json{{"gap", v_gap}, {"x", v_x}, {"set", v_set}, {"ell", v_ell}, {"m", v_m}};
            } else if (*v_boxes) {
                rep = ss::verify_bm_in_boxes(ss::read_point_set_file(v_y), ss::read_point_set_file(v_z),
                                             ss::Gap::parse_record(v_gap), v_ell,
                                             static_cast<std::int64_t>(v_n), caps);
                params = ss::Json{{"y", v_y}, {"z", v_z}, {"gap", v_gap}, {"ell", v_ell}, {"n", v_n}};
            } else if (*v_super) {
                rep = ss::verify_superadditivity(ss::read_weighted_function_file(v_f),
                                                 ss::read_weighted_function_file(v_g),
                                                 ss::read_weighted_function_file(v_hf), v_d);
                params = ss::Json{{"f", v_f}, {"g", v_g}, {"h", v_hf}, {"d", v_d}};
            } else if (*v_plun) {
                rep = ss::verify_plunnecke(ss::read_point_set_file(v_a), ss::read_point_set_file(v_b), v_ell,
                                           caps);
                params = ss::Json{{"a", v_a}, {"b", v_b}, {"ell", v_ell}};
            } else if (*v_stab) {
                rep = ss::verify_stability_containment(ss::read_point_set_file(v_a),
                                                       ss::read_point_set_file(v_b),
                                                       ss::Gap::parse_record(v_gap), caps);
                params = ss::Json{{"a", v_a}, {"b", v_b}, {"gap", v_gap}};
            } else if (*v_cube) {
                rep = ss::cube_summand_identity_check(ss::read_point_set_file(v_a),
                                                      ss::read_point_set_file(v_b), caps);
                params = ss::Json{{"a", v_a}, {"b", v_b}};
            }
            emit_json(g, ss::make_report_envelope("verify " + cmd_verify->get_subcommands().front()->get_name(),
                                                  params, ss::to_json(rep)));
            return exit_code_for_report(rep);
        }
        if (*cmd_table) {
            auto rows = ss::simplex_doubling_table(st_kmax, st_nmax, caps);
            if (g.format == "json") {
                ss::Json arr = ss::Json::array();
                for (const auto& r : rows)
                    arr.push_back(ss::Json{{"k", r.k},
                                           {"n", r.n},
                                           {"size", r.size.str()},
                                           {"doubled_size", r.doubled_size.str()},
                                           {"ratio", ss::rational_to_string(r.ratio)},
                                           {"c_hat", ss::rational_to_string(r.c_hat)},
                                           {"k_over_4", ss::rational_to_string(r.k_over_4)}});
                emit_json(g, ss::make_report_envelope(
                                 "simplex-table", ss::Json{{"k_max", st_kmax}, {"n_max", st_nmax}}, arr));
            } else {
                emit(g, ss::simplex_table_csv(rows));
            }
            return kExitOk;
        }
        if (*cmd_tight) {
            ss::TightnessConfig config;
            if (tg_relax) config = ss::TightnessConfig{0, 0, 0};
            ss::TightnessResult res = ss::tightness_example(tg_k, tg_n, ss::rational_from_string(tg_t), tg_m,
                                                            config, caps);
            if (!tg_out_a.empty()) ss::write_point_set_file(tg_out_a, res.a);
            if (!tg_out_b.empty()) ss::write_point_set_file(tg_out_b, res.b);
            emit_json(g, ss::make_report_envelope(
                             "tightness",
                             ss::Json{{"k", tg_k}, {"n", tg_n}, {"t", tg_t}, {"m", tg_m}},
                             ss::to_json(res.report)));
            return exit_code_for_report(res.report);
        }
        if (*cmd_search) {
            ss::SearchOptions opt;
            opt.seed = g.seed;
            opt.budget = se_budget;
            opt.normal_bound = g.normal_bound;
            opt.threads = g.threads;
            ss::SearchStrategy strategy;
            if (se_strategy == "exhaustive")
                strategy = ss::SearchStrategy::exhaustive;
            else if (se_strategy == "local")
                strategy = ss::SearchStrategy::local;
            else
                throw ss::ArgumentError("search: --strategy must be exhaustive or local");
            ss::FrontierRecord rec = ss::extremal_search(se_k, se_n, se_size, strategy, opt, caps);
            if (!se_frontier.empty()) ss::append_frontier_record(se_frontier, rec);
            emit_json(g, ss::make_report_envelope("search",
                                                  ss::Json{{"k", se_k},
                                                           {"n", se_n},
                                                           {"size", se_size},
                                                           {"strategy", se_strategy},
                                                           {"seed", g.seed},
                                                           {"budget", se_budget}},
                                                  ss::to_json(rec)));
            return kExitOk;
        }
        if (*cmd_estimate) {
            ss::ExperimentGrid grid;
            grid.family = es_family;
            for (auto k : parse_i64_list(es_ks)) grid.ks.push_back(static_cast<int>(k));
            grid.ns = parse_i64_list(es_ns);
            grid.ts = parse_rational_list(es_ts);
            grid.seed = g.seed;
            grid.threads = g.threads;
            auto rows = ss::constant_estimation(grid, caps);
            emit(g, ss::estimation_csv(rows));
            return kExitOk;
        }
    } catch (const ss::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ss::ErrorKind::capacity:
                return kExitCapacity;
            case ss::ErrorKind::hypothesis:
                return kExitHypothesis;
            case ss::ErrorKind::no_cover:
            case ss::ErrorKind::infeasible:
                return kExitVerifiedFail;
            default:
                return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
