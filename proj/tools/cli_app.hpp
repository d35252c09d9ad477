#ifndef ARBOREAL_TOOLS_CLI_APP_HPP
#define ARBOREAL_TOOLS_CLI_APP_HPP

// The `arboreal` command line.  run_command() is separate from main() so the
// test suite can drive it in-process.

#include "arboreal/arboreal.hpp"
#include "arboreal/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace arboreal::cli {

enum ExitCode : int { ok = 0, input_error = 1, unknown_verdict = 2 };

struct InputOptions {
    std::string poly;
    std::string coeffs;
    std::string file;
    std::string kind = "lambda-squared";
};

struct BudgetOptions {
    std::int64_t max_k = 0;
    std::size_t max_sets = 5000;
    std::int64_t max_mult = 50;
    std::int64_t max_vertices = 110;
    double time_limit = 0;

    SearchBudget search() const {
        SearchBudget b;
        b.max_k = max_k;
        b.max_sets = max_sets;
        b.max_multiplier = max_mult;
        b.time_limit_seconds = time_limit;
        return b;
    }
};

struct OutputOptions {
    bool json = false;
    bool timing = false;
    std::string out;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void add_input(CLI::App& app, InputOptions& in) {
    auto* p = app.add_option("--poly", in.poly, "polynomial: expression or ascending coefficient list");
    auto* c = app.add_option("--coeffs", in.coeffs, "ascending coefficient list, e.g. 1,-3,1");
    auto* f = app.add_option("--file", in.file, "file holding the polynomial text");
    p->excludes(c)->excludes(f);
    c->excludes(f);
    app.add_option("--kind", in.kind, "whether the input is the polynomial of lambda or of lambda^2")
        ->check(CLI::IsMember({"lambda", "lambda-squared"}))
        ->capture_default_str();
}

inline void add_budget(CLI::App& app, BudgetOptions& b) {
    app.add_option("--max-k", b.max_k, "largest k in enumerated interlacing sets (0: automatic)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--max-sets", b.max_sets, "interlacing sets per side")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--max-mult", b.max_mult, "largest multiplier in combinations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--time-limit", b.time_limit, "seconds for the monoid search (0: none)")->check(CLI::NonNegativeNumber);
}

inline void add_output(CLI::App& app, OutputOptions& o) {
    app.add_flag("--json", o.json, "emit one JSON object");
    app.add_flag("--timing", o.timing, "include elapsed time (makes output run-dependent)");
    app.add_option("--out", o.out, "write output to this file instead of stdout");
}

inline IntPolynomial read_polynomial(const InputOptions& in) {
    std::string text;
    if (!in.poly.empty()) text = in.poly;
    else if (!in.coeffs.empty()) text = in.coeffs;
    else if (!in.file.empty()) text = read_file(in.file);
    else throw std::invalid_argument("no polynomial given (use --poly, --coeffs or --file)");
    if (!in.coeffs.empty()) return detail::parse_coefficient_list(text);
    return parse_polynomial(text);
}

inline IntPolynomial read_F(const InputOptions& in) {
    return squares_polynomial(read_polynomial(in), in.kind == "lambda" ? InputKind::lambda : InputKind::lambda_squared);
}

inline std::string join_ks(const std::vector<std::int64_t>& ks) {
    std::string s = "{";
    for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? ", " : "") + std::to_string(ks[i]);
    return s + "}";
}

inline std::string approx(const RationalInterval& iv, int digits = 6) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(digits) << Rational((iv.lo + iv.hi) / 2).get_d();
    return o.str();
}

inline std::string describe(const Obstruction& o) {
    if (const auto* ni = std::get_if<NoInterlacing>(&o.kind)) return "no interlacing set (gap " + std::to_string(ni->gap) + ")";
    if (const auto* mp = std::get_if<ModP>(&o.kind))
        return "mod " + std::to_string(mp->p) + " factor of degree " + std::to_string(mp->degree);
    return "three-adic (zeta_48)";
}

inline std::string summary_line(const AnalysisReport& r) {
    if (const auto* c = r.certificate())
        return "certificate " + format_coefficient_map(c->a) + " (" + c->vertex_count().get_str() + " vertices)";
    if (const auto* obs = r.obstructions()) {
        std::string s;
        for (const auto& o : *obs) s += (s.empty() ? "" : "; ") + describe(o);
        return s;
    }
    if (const auto* u = std::get_if<Unknown>(&r.verdict)) return u->summary;
    return "lambda^2 is rational";
}

inline void render_text(std::ostream& os, const AnalysisReport& r, bool timing) {
    os << "F = " << format_polynomial(r.F) << "\n";
    os << "n = " << r.F.degree() << "\n";
    for (std::size_t i = 0; i < r.roots.size(); ++i)
        os << "lambda_" << i + 1 << "^2 ~ " << approx(r.roots[i]) << "\n";
    if (r.left) os << "left set: " << join_ks(r.left->ks) << "\n";
    if (r.right) os << "right set: " << join_ks(r.right->ks) << "\n";
    os << "verdict: " << verdict_tag(r.verdict) << "\n";
    if (const auto* c = r.certificate()) {
        os << "certificate: " << format_coefficient_map(c->a) << "\n";
        os << "tree: " << format_tree_name(c->a) << " on " << c->vertex_count() << " vertices\n";
        os << "verified: " << (c->verified ? "yes" : "no") << "\n";
    }
    if (const auto* obs = r.obstructions())
        for (const auto& o : *obs) os << "obstruction: " << o.detail << "\n";
    if (const auto* u = std::get_if<Unknown>(&r.verdict)) os << "summary: " << u->summary << "\n";
    const auto& d = r.diagnostics;
    os << "path: " << d.path << "\n";
    os << "irreducibility: " << d.irreducibility << "\n";
    if (d.sets_tried > 0) {
        os << "sets tried: " << d.sets_tried << "\n";
        os << "gcd trajectory:";
        for (const auto& g : d.gcd_trajectory) os << " " << g;
        os << "\n";
    }
    if (timing) os << "elapsed: " << d.elapsed_seconds << " s\n";
}

inline int verdict_exit(const Verdict& v) { return std::holds_alternative<Unknown>(v) ? unknown_verdict : ok; }

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv) {
        CLI::App app{"Arboreal height <= 2: certificates, obstructions and witness trees", "arboreal"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all", "show help for every subcommand");
        int status = ok;

        InputOptions in;
        BudgetOptions budget;
        OutputOptions output;

        auto* analyze_cmd = app.add_subcommand("analyze", "full verdict for lambda");
        add_input(*analyze_cmd, in);
        add_budget(*analyze_cmd, budget);
        add_output(*analyze_cmd, output);
        analyze_cmd->callback([&] { status = cmd_analyze(in, budget, output, false); });

        auto* certify_cmd = app.add_subcommand("certify", "print a certificate when one is found");
        add_input(*certify_cmd, in);
        add_budget(*certify_cmd, budget);
        add_output(*certify_cmd, output);
        certify_cmd->callback([&] { status = cmd_analyze(in, budget, output, true); });

        std::string cert_text, cert_file;
        auto* verify_cmd = app.add_subcommand("verify-cert", "check sum a_k / (lambda^2 - k) = 1 exactly");
        add_input(*verify_cmd, in);
        add_output(*verify_cmd, output);
        auto* ct = verify_cmd->add_option("--cert", cert_text, "branch map \"0:2,4:4\" or a JSON certificate");
        auto* cf = verify_cmd->add_option("--cert-file", cert_file, "file with a JSON certificate or a branch map");
        ct->excludes(cf);
        verify_cmd->callback([&] { status = cmd_verify(in, cert_text, cert_file, output); });

        auto* obstruct_cmd = app.add_subcommand("obstruct", "list refutation evidence");
        add_input(*obstruct_cmd, in);
        add_output(*obstruct_cmd, output);
        obstruct_cmd->callback([&] { status = cmd_obstruct(in, output); });

        auto* scale_cmd = app.add_subcommand("scale", "least D found with D lambda of height <= 2");
        add_input(*scale_cmd, in);
        add_budget(*scale_cmd, budget);
        add_output(*scale_cmd, output);
        scale_cmd->callback([&] { status = cmd_scale(in, budget, output); });

        long m = 0;
        std::string range;
        auto* cyclo_cmd = app.add_subcommand("cyclo", "classify 2 cos(2 pi / m)");
        auto* mo = cyclo_cmd->add_option("--m", m, "single m")->check(CLI::PositiveNumber);
        auto* ro = cyclo_cmd->add_option("--range", range, "table for m in A-B");
        mo->excludes(ro);
        add_budget(*cyclo_cmd, budget);
        add_output(*cyclo_cmd, output);
        cyclo_cmd->callback([&] { status = cmd_cyclo(m, range, budget, output); });

        std::int64_t k_max = 100;
        auto* zeta_cmd = app.add_subcommand("zeta48", "three-adic computation for 2 cos(2 pi / 48)");
        zeta_cmd->add_option("--k-max", k_max, "last k for b_k^(0)")->check(CLI::Range(std::int64_t{4}, std::int64_t{100000}));
        add_output(*zeta_cmd, output);
        zeta_cmd->callback([&] { status = cmd_zeta48(k_max, output); });

        auto* tree_cmd = app.add_subcommand("tree", "witness trees <prod k^a_k>");
        tree_cmd->require_subcommand(1);
        std::string branches, format = "edgelist";
        unsigned long cap = default_export_cap;
        bool brute = false;
        std::int64_t search_max_k = 30, excess = 1;

        auto* build_cmd = tree_cmd->add_subcommand("build", "describe the tree for a branch map");
        build_cmd->add_option("--branches", branches, "branch map, e.g. 0:2,4:4,8:2")->required();
        add_output(*build_cmd, output);
        build_cmd->callback([&] { status = cmd_tree_build(branches, output); });

        auto* charpoly_cmd = tree_cmd->add_subcommand("charpoly", "characteristic polynomial of the tree");
        charpoly_cmd->add_option("--branches", branches, "branch map")->required();
        charpoly_cmd->add_flag("--bruteforce", brute, "expand det(xI - A) instead of the closed form");
        add_output(*charpoly_cmd, output);
        charpoly_cmd->callback([&] { status = cmd_tree_charpoly(branches, brute, output); });

        auto* search_cmd = tree_cmd->add_subcommand("search", "smallest witness tree within bounds");
        add_input(*search_cmd, in);
        search_cmd->add_option("--max-vertices", budget.max_vertices, "vertex bound")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        search_cmd->add_option("--max-k", search_max_k, "largest star size")->check(CLI::NonNegativeNumber)->capture_default_str();
        search_cmd->add_option("--excess", excess, "support size beyond n")->check(CLI::Range(0, 4))->capture_default_str();
        add_output(*search_cmd, output);
        search_cmd->callback([&] { status = cmd_tree_search(in, budget.max_vertices, search_max_k, excess, output); });

        auto* export_cmd = tree_cmd->add_subcommand("export", "edge list or DOT for the tree");
        export_cmd->add_option("--branches", branches, "branch map")->required();
        export_cmd->add_option("--format", format, "edgelist or dot")
            ->check(CLI::IsMember({"edgelist", "dot"}))
            ->capture_default_str();
        export_cmd->add_option("--cap", cap, "largest vertex count to materialize")->capture_default_str();
        add_output(*export_cmd, output);
        export_cmd->callback([&] { status = cmd_tree_export(branches, format, cap, output); });

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out_, err_);
            return code == 0 ? ok : input_error;
        } catch (const std::invalid_argument& e) {
            err_ << "error: " << e.what() << "\n";
            return input_error;
        } catch (const std::length_error& e) {
            err_ << "error: " << e.what() << "\n";
            return input_error;
        } catch (const std::exception& e) {
            err_ << "internal error: " << e.what() << "\n";
            return input_error;
        }
        return status;
    }

private:
    std::ostream& out_;
    std::ostream& err_;

    void emit(const OutputOptions& o, const std::string& text) {
        if (o.out.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(o.out);
        if (!f) throw std::invalid_argument("cannot write " + o.out);
        f << text;
    }

    void emit_json(const OutputOptions& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

    int cmd_analyze(const InputOptions& in, const BudgetOptions& b, const OutputOptions& o, bool certificate_only) {
        const IntPolynomial F = read_F(in);
        const AnalysisReport r = analyze(F, b.search());
        if (certificate_only) {
            if (const auto* c = r.certificate()) {
                if (o.json) emit_json(o, to_json(*c));
                else emit(o, format_coefficient_map(c->a) + "\n");
            } else if (o.json) {
                emit_json(o, Json{{"verdict", verdict_tag(r.verdict)}, {"certificate", nullptr}, {"summary", summary_line(r)}});
            } else {
                emit(o, std::string("no certificate: ") + verdict_tag(r.verdict) + ": " + summary_line(r) + "\n");
            }
            return verdict_exit(r.verdict);
        }
        if (o.json) {
            emit_json(o, to_json(r, o.timing));
        } else {
            std::ostringstream ss;
            render_text(ss, r, o.timing);
            emit(o, ss.str());
        }
        return verdict_exit(r.verdict);
    }

    int cmd_verify(InputOptions in, const std::string& cert_text, const std::string& cert_file, const OutputOptions& o) {
        std::string text = !cert_file.empty() ? read_file(cert_file) : cert_text;
        if (text.empty()) throw std::invalid_argument("no certificate given (use --cert or --cert-file)");
        CoefficientMap a;
        std::optional<IntPolynomial> F_from_cert;
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            Json j;
            try {
                j = Json::parse(text);
            } catch (const Json::parse_error& e) {
                throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
            }
            if (j.contains("a")) {
                a = coefficient_map_from_json(j.at("a"));
                if (j.contains("F") && j.at("F").is_string()) F_from_cert = parse_polynomial(j.at("F").get<std::string>());
            } else {
                a = coefficient_map_from_json(j);
            }
        } else {
            a = parse_coefficient_map(text);
        }
        IntPolynomial F;
        if (!in.poly.empty() || !in.coeffs.empty() || !in.file.empty()) {
            F = read_F(in);
            if (F_from_cert && !(*F_from_cert == F))
                throw std::invalid_argument("certificate is for " + format_polynomial(*F_from_cert) + ", not " +
                                            format_polynomial(F));
        } else if (F_from_cert) {
            F = *F_from_cert;
        } else {
            throw std::invalid_argument("no polynomial given and the certificate does not name one");
        }
        if (!F.is_monic()) throw std::invalid_argument("F must be monic");
        const bool good = verify_certificate(F, a);
        if (o.json) {
            emit_json(o, Json{{"F", to_json(F)}, {"a", to_json(a)}, {"verified", good}, {"vertex_count", to_json(vertex_count(a))}});
        } else {
            emit(o, std::string("verified: ") + (good ? "true" : "false") + "\n");
        }
        return ok;
    }

    int cmd_obstruct(const InputOptions& in, const OutputOptions& o) {
        const IntPolynomial F = read_F(in);
        std::vector<Obstruction> obs;
        if (F.degree() >= 2) {
            const SquaresSpectrum spec = squared_spectrum(F);
            detail::check_no_integer_root(spec);
            obs = detail::collect_obstructions(spec);
            if (F == zeta48_squares_polynomial()) {
                auto rep = zeta48_three_adic_report(100);
                if (refutes(rep)) obs.push_back(make_obstruction(std::move(rep)));
            }
        }
        if (o.json) {
            Json arr = Json::array();
            for (const auto& ob : obs) arr.push_back(to_json(ob));
            emit_json(o, Json{{"F", to_json(F)}, {"obstructions", arr}});
        } else {
            std::string s;
            for (const auto& ob : obs) s += ob.detail + "\n";
            if (obs.empty()) s = "no obstruction found\n";
            emit(o, s);
        }
        return ok;
    }

    int cmd_scale(const InputOptions& in, const BudgetOptions& b, const OutputOptions& o) {
        const IntPolynomial F = read_F(in);
        const ScaledResult r = scale_to_A2(F, b.search());
        if (o.json) {
            Json j{{"D", to_json(r.D)},
                   {"scaled_F", to_json(r.scaled)},
                   {"certificate", to_json(r.certificate)},
                   {"route", r.via_engine ? "engine" : "scaling"},
                   {"minimal_D", r.via_engine ? "D = 1" : "least D for the canonical left set"}};
            if (r.set) j["set"] = to_json(*r.set);
            emit_json(o, j);
        } else {
            std::ostringstream ss;
            ss << "D = " << r.D << "\n";
            ss << "scaled F = " << format_polynomial(r.scaled) << "\n";
            if (r.set) ss << "left set: " << join_ks(r.set->ks) << "\n";
            ss << "certificate: " << format_coefficient_map(r.certificate.a) << "\n";
            ss << "tree: " << format_tree_name(r.certificate.a) << " on " << r.certificate.vertex_count() << " vertices\n";
            emit(o, ss.str());
        }
        return ok;
    }

    int cmd_cyclo(long m, const std::string& range, const BudgetOptions& b, const OutputOptions& o) {
        long lo = m, hi = m;
        if (!range.empty()) {
            const auto dash = range.find('-');
            try {
                if (dash == std::string::npos) throw std::invalid_argument("");
                lo = std::stol(range.substr(0, dash));
                hi = std::stol(range.substr(dash + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("--range must look like A-B");
            }
        }
        if (lo < 1 || hi < lo) throw std::invalid_argument("cyclo needs --m M or --range A-B with 1 <= A <= B");
        std::vector<CycloReport> rows;
        for (long i = lo; i <= hi; ++i) rows.push_back(classify_cyclotomic(i, b.search()));
        int status = ok;
        for (const auto& r : rows)
            if (r.analysis.unknown()) status = unknown_verdict;
        if (o.json) {
            if (rows.size() == 1) {
                emit_json(o, to_json(rows.front(), o.timing));
            } else {
                Json arr = Json::array();
                for (const auto& r : rows) arr.push_back(to_json(r, o.timing));
                emit_json(o, Json{{"rows", arr}});
            }
            return status;
        }
        std::ostringstream ss;
        ss << std::left << std::setw(6) << "m" << std::setw(5) << "n" << std::setw(18) << "verdict" << "detail\n";
        for (const auto& r : rows)
            ss << std::setw(6) << r.m << std::setw(5) << r.n << std::setw(18) << verdict_tag(r.analysis.verdict)
               << summary_line(r.analysis) << "\n";
        emit(o, ss.str());
        return status;
    }

    int cmd_zeta48(std::int64_t k_max, const OutputOptions& o) {
        const Zeta48Report r = zeta48_three_adic_report(k_max);
        if (o.json) {
            emit_json(o, to_json(r));
        } else {
            std::ostringstream ss;
            ss << "F = " << format_polynomial(zeta48_squares_polynomial()) << "\n";
            ss << "y0 = " << r.y0 << "\n";
            ss << "det M = " << r.detM << "\n";
            ss << "b_k^(0) 3-integral for k = 4.." << r.k_max << ": " << (r.all_three_integral ? "yes" : "no") << "\n";
            ss << "F(k) = 1 (mod 3) for k = 0.." << r.k_max << ": " << (r.fk_one_mod_three ? "yes" : "no") << "\n";
            ss << "refutes: " << (refutes(r) ? "yes" : "no") << "\n";
            emit(o, ss.str());
        }
        return ok;
    }

    int cmd_tree_build(const std::string& branches, const OutputOptions& o) {
        const RootedStarTree t = build_tree(parse_coefficient_map(branches));
        if (o.json) {
            emit_json(o, to_json(t));
        } else {
            emit(o, format_tree_name(t.branches()) + ": " + t.vertex_count().get_str() + " vertices, root degree " +
                        t.root_degree().get_str() + ", height " + std::to_string(t.height()) + "\n");
        }
        return ok;
    }

    int cmd_tree_charpoly(const std::string& branches, bool brute, const OutputOptions& o) {
        const RootedStarTree t = build_tree(parse_coefficient_map(branches));
        if (t.vertex_count() > 5000) throw std::length_error("tree too large for an explicit characteristic polynomial");
        const IntPolynomial p = brute ? char_poly_bruteforce(t) : char_poly_closed_form(t);
        if (o.json) emit_json(o, Json{{"tree", to_json(t)}, {"charpoly", to_json(p)}, {"method", brute ? "bruteforce" : "closed_form"}});
        else emit(o, format_polynomial(p) + "\n");
        return ok;
    }

    int cmd_tree_search(const InputOptions& in, std::int64_t max_vertices, std::int64_t max_k, std::int64_t excess,
                        const OutputOptions& o) {
        const IntPolynomial F = read_F(in);
        squared_spectrum(F);
        const auto r = search_min_tree(F, max_vertices, max_k, excess);
        if (o.json) {
            Json j{{"F", to_json(F)}, {"bounds", {{"max_vertices", max_vertices}, {"max_k", max_k}, {"excess", excess}}}};
            j["certificate"] = r ? to_json(r->certificate) : Json();
            j["tree"] = r ? to_json(r->tree) : Json();
            emit_json(o, j);
        } else if (r) {
            emit(o, "certificate: " + format_coefficient_map(r->certificate.a) + "\ntree: " +
                        format_tree_name(r->certificate.a) + " on " + r->tree.vertex_count().get_str() + " vertices\n");
        } else {
            emit(o, "no witness tree within bounds\n");
        }
        return ok;
    }

    int cmd_tree_export(const std::string& branches, const std::string& format, unsigned long cap, const OutputOptions& o) {
        const RootedStarTree t = build_tree(parse_coefficient_map(branches));
        const std::string text = export_tree(t, format == "dot" ? ExportFormat::dot : ExportFormat::edgelist, cap);
        if (o.json) emit_json(o, Json{{"tree", to_json(t)}, {"format", format}, {"text", text}});
        else emit(o, text);
        return ok;
    }
};

inline int run_command(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return Runner(out, err).run(argc, argv);
}

}  // namespace arboreal::cli

#endif
