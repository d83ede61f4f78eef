#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "sgl/algebra_io.hpp"
#include "sgl/corpus.hpp"
#include "sgl/decomposer.hpp"
#include "sgl/errors.hpp"
#include "sgl/ideals.hpp"
#include "sgl/maxlen.hpp"
#include "sgl/support_graph.hpp"

namespace sgl::cli {

namespace {

// Thrown by command bodies to leave with a specific exit code.
struct Abort {
    int code;
    std::string message;
};

std::string format_vector(const Algebra& alg, const Vector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i].is_zero()) continue;
        std::string c = v[i].to_string();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c.erase(0, 1);
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (c != "1") s += c + "*";
        s += alg.element(i).name;
    }
    return s.empty() ? "0" : s;
}

ojson subspace_json(const Algebra& alg, const Subspace& s) {
    ojson basis = ojson::array();
    for (const auto& r : s.rows()) basis.push_back(format_vector(alg, r));
    return ojson{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

ojson labels_json(const LabelSet& s) {
    ojson a = ojson::array();
    for (const auto& l : s) a.push_back(l);
    return a;
}

std::string endpoint_str(const Endpoint& e) { return e.label + "^" + std::to_string(to_int(e.parity)); }

ojson verdict_json(const Algebra& alg, const SimplicityVerdict& v) {
    ojson j;
    j["verdict"] = to_string(v.verdict);
    j["sampled"] = v.sampled;
    j["reason"] = v.reason;
    j["vectors_tested"] = v.vectors_tested;
    j["witness"] = v.witness ? subspace_json(alg, v.witness->total()) : ojson(nullptr);
    return j;
}

ojson classes_json(const ConnectionAnalysis& a) {
    ojson j;
    j["classes"] = ojson::array();
    for (const auto& c : a.classes) j["classes"].push_back(ojson{{"representative", c.representative}, {"members", labels_json(c.members)}});
    j["symmetric"] = a.symmetric;
    j["one_way_pairs"] = ojson::array();
    for (const auto& [x, y] : a.one_way_pairs) j["one_way_pairs"].push_back(ojson::array({x, y}));
    return j;
}

struct Context {
    std::string path;
    std::string text;
    Algebra alg;
    OracleOptions oracle;
    bool include_o = true;
    bool allow_tilde = false;
    std::string mode = "both";
    std::string sym_x, sym_y;
};

struct Outcome {
    ojson results = ojson::object();
    ojson checks = ojson::array();
    int code = kOk;

    void check(const std::string& name, bool applicable, bool passed) {
        checks.push_back(ojson{{"name", name}, {"applicable", applicable}, {"passed", passed}});
        if (applicable && !passed) code = kInconsistent;
    }
};

void require_valid_alg(const Algebra& alg) {
    auto rep = validate(alg);
    if (!rep.valid()) throw Abort{kDomainFailure, "invalid algebra: " + rep.violations.front().message};
}

void require_maxlen(const Algebra& alg) {
    if (!is_maximal_length(alg)) throw Abort{kDomainFailure, "algebra is not of maximal length"};
}

ojson validation_json(const Algebra& alg, const ValidationReport& rep) {
    ojson j;
    j["valid"] = rep.valid();
    j["violations"] = ojson::array();
    for (const auto& v : rep.violations) {
        ojson w = ojson::array();
        for (auto i : v.witness) w.push_back(alg.element(i).name);
        ojson labels = ojson::array();
        for (const auto& l : v.labels) labels.push_back(l);
        j["violations"].push_back(ojson{{"kind", to_string(v.kind)}, {"message", v.message}, {"witness", w}, {"labels", labels}});
    }
    j["warnings"] = rep.warnings;
    return j;
}

ojson support_json(const Algebra& alg) {
    auto s = support(alg);
    return ojson{{"all", labels_json(s.all)},
                 {"even", labels_json(s.even)},
                 {"odd", labels_json(s.odd)},
                 {"distinguished", alg.distinguished() ? ojson(*alg.distinguished()) : ojson(nullptr)}};
}

ojson frak_i_json(const Algebra& alg) {
    auto g = frak_I(alg);
    ojson pieces = ojson::array();
    for (const auto& [cell, piece] : g.pieces()) pieces.push_back(ojson{{"cell", to_string(cell)}, {"dim", piece.dim()}});
    return ojson{{"subspace", subspace_json(alg, g.total())}, {"pieces", pieces}};
}

ojson tight_json(const Algebra& alg) {
    ojson j;
    j["tight"] = is_tight(alg);
    j["L_o_dim"] = alg.distinguished() ? label_space(alg, *alg.distinguished()).dim() : 0;
    j["o_pair_span"] = subspace_json(alg, o_pair_span(alg));
    return j;
}

ojson maxlen_json(const Algebra& alg) {
    ojson j;
    j["maximal_length"] = is_maximal_length(alg);
    if (!is_maximal_length(alg)) return j;
    auto p = frakI_partition(alg);
    j["partition"] = ojson{{"S_I_0", labels_json(p.S_I[0])},
                           {"S_I_1", labels_json(p.S_I[1])},
                           {"S_notI_0", labels_json(p.S_notI[0])},
                           {"S_notI_1", labels_json(p.S_notI[1])}};
    auto eq = check_o_pair_split(alg);
    j["o_pair_split"] = ojson{{"applicable", eq.applicable}, {"even_matches", eq.even_matches}, {"odd_matches", eq.odd_matches}};
    return j;
}

ojson smult_json(const Algebra& alg) {
    auto r = is_S_multiplicative(alg);
    ojson j;
    j["S_multiplicative"] = r.multiplicative;
    j["tuples_checked"] = r.tuples_checked;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        j["counterexample"] = ojson{{"condition", c.condition},
                                    {"target", endpoint_str(c.target)},
                                    {"source", endpoint_str(c.source)},
                                    {"r", to_string(c.r)},
                                    {"r_parity", to_int(c.r_parity)}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

ojson theorem_json(const Algebra& alg, const TheoremReport& rep) {
    ojson j;
    ojson hyp = ojson::object();
    for (const auto& [name, ok] : rep.hypotheses) hyp[name] = ok;
    j["hypotheses"] = hyp;
    j["oracle"] = verdict_json(alg, rep.verdict);
    j["lhs_simple"] = rep.lhs;
    j["rows"] = ojson::array();
    for (const auto& r : rep.rows) {
        ojson row;
        row["include_o"] = r.include_o;
        row["allow_tilde"] = r.allow_tilde;
        row["Z_Lie_zero"] = r.z_lie_zero;
        row["hypotheses_hold"] = r.hypotheses_hold;
        row["S_I_connected"] = r.I_connected;
        row["S_notI_connected"] = r.notI_connected;
        row["rhs"] = r.rhs;
        row["consistent"] = r.consistent;
        row["disconnected"] =
            r.disconnected ? ojson::array({endpoint_str(r.disconnected->first), endpoint_str(r.disconnected->second)}) : ojson(nullptr);
        j["rows"].push_back(row);
    }
    j["consistent"] = rep.consistent();
    return j;
}

void add_theorem_checks(Outcome& o, const TheoremReport& rep) {
    for (const auto& r : rep.rows)
        o.check(std::string("theorem_biconditional[include_o=") + (r.include_o ? "1" : "0") + ",allow_tilde=" + (r.allow_tilde ? "1" : "0") + "]",
                r.hypotheses_hold, r.consistent);
}

ojson decompose_json(const Algebra& alg, const DecompositionReport& rep, Outcome& o) {
    ojson j;
    j["o_pairs_connected"] = rep.o_pairs_connected;
    j["L_S_o"] = subspace_json(alg, rep.L_S_o);
    j["U"] = subspace_json(alg, rep.U);
    j["ideals"] = ojson::array();
    for (const auto& ci : rep.ideals)
        j["ideals"].push_back(ojson{{"class", labels_json(ci.cls.members)},
                                    {"head", subspace_json(alg, ci.head)},
                                    {"body_dim", ci.body.dim()},
                                    {"total_dim", ci.total.dim()},
                                    {"is_subalgebra", ci.is_subalgebra},
                                    {"is_ideal", ci.is_ideal}});
    j["direct"] = rep.direct;
    for (const auto& c : rep.checks) o.check(c.name, c.applicable, c.passed);
    return j;
}

void cmd_simplicity(Context& c, Outcome& o) {
    if (c.mode != "oracle" && c.mode != "theorem" && c.mode != "both") throw Abort{kParseFailure, "unknown --mode " + c.mode};
    if (c.mode == "theorem") require_maxlen(c.alg);
    if (c.mode == "oracle" || !is_maximal_length(c.alg)) {
        o.results["oracle"] = verdict_json(c.alg, simplicity_oracle(c.alg, c.oracle));
        if (c.mode == "both") o.results["theorem"] = ojson{{"applicable", false}, {"reason", "not of maximal length"}};
    } else {
        auto rep = theorem_simplicity_check(c.alg, c.oracle);
        o.results["oracle"] = verdict_json(c.alg, rep.verdict);
        o.results["theorem"] = theorem_json(c.alg, rep);
        add_theorem_checks(o, rep);
    }
    if (c.mode == "both") o.results["connections"] = classes_json(analyze_connections(c.alg));
}

void cmd_report(Context& c, Outcome& o) {
    const Algebra& alg = c.alg;
    o.results["algebra"] = ojson{{"field", alg.field().name()}, {"dim", alg.dim()}};
    o.results["support"] = support_json(alg);
    o.results["connections"] = classes_json(analyze_connections(alg));
    o.results["frak_I"] = frak_i_json(alg);
    o.results["center"] = subspace_json(alg, center(alg));
    o.results["lie_annihilator"] = ojson{{"include_o", subspace_json(alg, lie_annihilator(alg, true))},
                                         {"exclude_o", subspace_json(alg, lie_annihilator(alg, false))}};
    o.results["tightness"] = tight_json(alg);
    o.results["maximal_length"] = maxlen_json(alg);
    if (is_maximal_length(alg)) o.results["S_multiplicativity"] = smult_json(alg);
    o.results["decomposition"] = decompose_json(alg, decompose(alg), o);
    Context sub = c;
    sub.mode = "both";
    Outcome so;
    cmd_simplicity(sub, so);
    o.results["simplicity"] = so.results;
    for (const auto& ch : so.checks) o.check(ch["name"], ch["applicable"], ch["passed"]);
}

void cmd_star(Context& c, Outcome& o) {
    StarTable table(c.alg);
    Symbol x = parse_symbol(c.sym_x), y = parse_symbol(c.sym_y);
    for (const auto& s : {x, y})
        if (!table.labels().contains(s.base)) throw Abort{kDomainFailure, "symbol " + to_string(s) + " is not in the support"};
    o.results["x"] = to_string(x);
    o.results["y"] = to_string(y);
    o.results["star"] = labels_json(table.star(x, y));
    if (table.distinguished() && *table.distinguished() == x.base) {
        o.results["phi"] = nullptr;
    } else {
        ojson phi = ojson::array();
        for (const auto& s : table.phi({x}, y)) phi.push_back(to_string(s));
        o.results["phi"] = phi;
    }
}

// Generic indented rendering of a JSON report for terminals.
void render_text(const ojson& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const ojson& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [&](const ojson& v) {
        if (!v.is_array()) return false;
        for (const auto& e : v)
            if (e.is_structured()) return false;
        return true;
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const ojson& v = it.value();
        const std::string key = j.is_array() ? "-" : it.key() + ":";
        if (flat(v)) {
            std::string s;
            for (const auto& e : v) s += (s.empty() ? "" : ", ") + scalar(e);
            out << pad << key << " [" << s << "]\n";
        } else if (v.is_structured()) {
            out << pad << key << "\n";
            render_text(v, out, indent + 2);
        } else {
            out << pad << key << " " << scalar(v) << "\n";
        }
    }
}

int write_generated(const std::string& family, std::size_t k, std::uint64_t gf, bool odd, std::uint64_t seed,
                    const std::string& out_dir, std::ostream& out) {
    Field f = gf ? Field::prime(gf) : Field::rationals();
    auto emit_to = [&](const std::string& name, const Algebra& alg) {
        std::ofstream file(std::filesystem::path(out_dir) / (name + ".json"), std::ios::binary);
        if (!file) throw Abort{kDomainFailure, "cannot write into " + out_dir};
        file << emit_algebra(alg);
    };
    if (family == "corpus" || family == "perturbed") {
        if (out_dir.empty()) throw Abort{kParseFailure, "--out is required for family " + family};
        std::filesystem::create_directories(out_dir);
        std::size_t n = 0;
        if (family == "corpus") {
            for (const auto& e : standard_corpus(seed)) emit_to(e.name, e.algebra), ++n;
        } else {
            for (const auto& e : perturbed_corpus(seed)) emit_to(e.name, e.perturbed.algebra), ++n;
        }
        out << "wrote " << n << " files to " << out_dir << "\n";
        return kOk;
    }
    Algebra alg;
    if (family == "n2") {
        alg = gen_n2_family(k, f);
    } else if (family == "abelian") {
        std::vector<std::pair<std::string, std::vector<Parity>>> layout;
        for (std::size_t i = 0; i < k; ++i) layout.push_back({std::string(1, static_cast<char>('a' + i % 26)) + (i >= 26 ? std::to_string(i) : ""), {Parity::Even}});
        alg = gen_abelian(f, layout);
    } else if (family == "so3-adjoint") {
        Algebra g = lie_so3(f);
        alg = gen_hemisemidirect(g, adjoint_action(g), odd ? Parity::Odd : Parity::Even, {"m:x", "m:y", "m:z"});
    } else if (family == "sl2") {
        alg = lie_sl2(f);
    } else if (family == "heisenberg") {
        alg = lie_heisenberg(f);
    } else {
        throw Abort{kParseFailure, "unknown family " + family};
    }
    if (seed) alg = random_rescale(alg, seed);
    if (out_dir.empty()) {
        out << emit_algebra(alg);
        return kOk;
    }
    std::ofstream file(out_dir, std::ios::binary);
    if (!file) throw Abort{kDomainFailure, "cannot write " + out_dir};
    file << emit_algebra(alg);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Analysis of set-graded Leibniz superalgebras given by structure constants", "sgl"};
    app.require_subcommand(1);
    bool json = false;
    std::uint64_t seed = OracleOptions{}.seed;
    std::string field_override;
    app.add_flag("--json", json, "Machine-readable output");
    app.add_option("--seed", seed, "Seed for oracle sampling and generation");
    app.add_option("--field", field_override, "Rejected: the field is part of the algebra file");

    Context ctx;
    const std::vector<std::pair<std::string, std::string>> file_commands = {
        {"validate", "Check the algebra axioms"},
        {"support", "Support of the grading"},
        {"star", "Star product and phi of two symbols"},
        {"classes", "Connection classes"},
        {"decompose", "Class ideals and the global decomposition"},
        {"frak-i", "The ideal generated by symmetrized brackets"},
        {"center", "Center"},
        {"lie-annihilator", "Lie-annihilator"},
        {"tight", "Tightness of the distinguished component"},
        {"maxlen", "Maximal length and the frak_I partition"},
        {"s-mult", "S-multiplicativity"},
        {"simplicity", "Simplicity oracle and criterion"},
        {"report", "Every analysis in one report"}};
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, desc] : file_commands) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("file", ctx.path, "Algebra file")->required();
        sub->fallthrough();
        subs[name] = sub;
    }
    subs["star"]->add_option("x", ctx.sym_x, "Left symbol (a or ~a)")->required();
    subs["star"]->add_option("y", ctx.sym_y, "Right symbol (a or ~a)")->required();
    subs["lie-annihilator"]->add_option("--include-o", ctx.include_o, "Quantify over the distinguished label too");
    subs["simplicity"]->add_option("--mode", ctx.mode, "oracle, theorem or both");
    for (const auto& name : {"maxlen", "simplicity"}) subs[name]->add_flag("--allow-tilde", ctx.allow_tilde, "Admit tilde symbols in not-I connections");
    subs["maxlen"]->add_option("--include-o", ctx.include_o, "Quantify Z_Lie over the distinguished label too");

    std::string family, out_dir;
    std::size_t k = 1;
    std::uint64_t gf = 0;
    bool odd = false;
    auto* gen = app.add_subcommand("generate", "Emit generated algebras");
    gen->add_option("family", family, "corpus, perturbed, n2, abelian, so3-adjoint, sl2, heisenberg")->required();
    gen->add_option("--k", k, "Copies or labels");
    gen->add_option("--gf", gf, "Prime field characteristic (default Q)");
    gen->add_flag("--odd", odd, "Odd module");
    gen->add_option("--out", out_dir, "Output directory (corpus, perturbed) or file (single algebra)");
    gen->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseFailure;
    }
    if (!field_override.empty()) {
        err << "error: --field is not accepted; the field is declared in the algebra file\n";
        return kParseFailure;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (gen->parsed()) return write_generated(family, k, gf, odd, app.count("--seed") ? seed : 0, out_dir, out);

        std::string command;
        for (const auto& [name, sub] : subs)
            if (sub->parsed()) command = name;
        ctx.oracle.seed = seed;

        {
            std::ifstream in(ctx.path, std::ios::binary);
            if (!in) throw ParseError(ctx.path, "cannot open file");
            std::stringstream ss;
            ss << in.rdbuf();
            ctx.text = ss.str();
        }
        ctx.alg = parse_algebra(ctx.text);

        Outcome o;
        const Algebra& alg = ctx.alg;
        if (command == "validate") {
            auto rep = validate(alg);
            o.results = validation_json(alg, rep);
            if (!rep.valid()) o.code = kDomainFailure;
        } else {
            require_valid_alg(alg);
            if (command == "support") {
                o.results = support_json(alg);
            } else if (command == "star") {
                cmd_star(ctx, o);
            } else if (command == "classes") {
                o.results = classes_json(analyze_connections(alg));
            } else if (command == "decompose") {
                auto rep = decompose(alg);
                o.results = decompose_json(alg, rep, o);
                o.results["classes"] = classes_json(analyze_connections(alg))["classes"];
            } else if (command == "frak-i") {
                o.results = frak_i_json(alg);
            } else if (command == "center") {
                o.results["center"] = subspace_json(alg, center(alg));
            } else if (command == "lie-annihilator") {
                o.results["include_o"] = ctx.include_o;
                o.results["lie_annihilator"] = subspace_json(alg, lie_annihilator(alg, ctx.include_o));
            } else if (command == "tight") {
                o.results = tight_json(alg);
            } else if (command == "maxlen") {
                o.results = maxlen_json(alg);
                if (is_maximal_length(alg)) {
                    for (Side side : {Side::I, Side::NotI}) {
                        auto r = all_neg_I_connected(alg, side, ctx.allow_tilde);
                        o.results["S_" + to_string(side) + "_connected"] = r.all_connected;
                    }
                    o.results["Z_Lie_zero"] = lie_annihilator(alg, ctx.include_o).is_zero();
                }
            } else if (command == "s-mult") {
                require_maxlen(alg);
                o.results = smult_json(alg);
            } else if (command == "simplicity") {
                cmd_simplicity(ctx, o);
            } else if (command == "report") {
                cmd_report(ctx, o);
            }
        }

        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        ojson report;
        report["command"] = command;
        report["input"] = ctx.path;
        report["input_digest"] = fnv1a_hex(ctx.text);
        report["results"] = o.results;
        report["checks"] = o.checks;
        report["exit_code"] = o.code;
        report["wall_time_ms"] = std::round(ms * 1000.0) / 1000.0;
        if (json) {
            out << report.dump(2) << "\n";
        } else {
            render_text(report, out, 0);
        }
        return o.code;
    } catch (const Abort& a) {
        err << "error: " << a.message << "\n";
        return a.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const InternalError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return kInconsistent;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainFailure;
    }
}

}  // namespace sgl::cli
