// Command-line front end: q-deformed rationals and Pythagorean triples,
// tree generation, equation verification and bounded solution search.
//
// Exit codes: 0 success, 1 usage or domain error, 2 failed verification
// (verify), 3 counterexample found (scan-unimodal).

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "qpyth/qtriples.hpp"
#include "qpyth/search.hpp"
#include "qpyth/serialize.hpp"

namespace {

using namespace qpyth;

struct Options {
    bool json = false;
    std::string fraction;
    std::string series_n;
    std::string coeffs_a, coeffs_b, coeffs_c;
    std::string target_a, target_b, target_c;
    int max_depth = 3;
    int max_deg = 7;
    std::string max_coeff;
    bool require_unimodal = false;
    long long max_m = 40;
};

void emit(const std::string& text) { std::cout << text << "\n"; }
void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string describe_conditions(const ConditionsReport& r) {
    std::ostringstream out;
    out << "positive=" << (r.positive_a && r.positive_b && r.positive_c ? "yes" : "no")
        << " palindromic=" << (r.palindromic_a && r.palindromic_b ? "yes" : "no")
        << " monic=" << (r.monic_a && r.monic_b && r.monic_c && r.monic_cstar ? "yes" : "no")
        << " unimodal=" << (r.unimodal_all() ? "yes" : "no");
    return out.str();
}

std::string describe(const QPythTriple& t) {
    std::ostringstream out;
    out << "base " << t.base.str() << " -> " << t.classical().str() << "\n";
    out << "  A:  " << t.A.str() << "\n";
    out << "  B:  " << t.B.str() << "\n";
    out << "  C:  " << t.C.str() << "\n";
    out << "  C*: " << t.c_star().str() << "\n";
    out << "  conditions: " << describe_conditions(check_conditions(t));
    return out.str();
}

int cmd_qrat(const Options& opt) {
    const Fraction f = Fraction::parse(opt.fraction);
    const QRational r =
        f.at_least_one() ? q_rational(f) : q_rational_inverse(q_rational(f.inverse()));
    if (opt.json) {
        emit(to_json(r));
    } else {
        std::ostringstream out;
        out << "[" << r.base.str() << "]_q\n";
        out << "  num: " << r.num.str() << "\n";
        out << "  den: " << r.den.str();
        emit(out.str());
    }
    return 0;
}

int cmd_cf(const Options& opt) {
    const Fraction f = Fraction::parse(opt.fraction);
    const ContinuedFraction cf = cf_expand(f);
    if (opt.json) {
        emit(json{{"fraction", f.str()}, {"cf", to_json(cf)}});
    } else {
        emit(f.str() + " = " + cf.str());
    }
    return 0;
}

int cmd_triple(const Options& opt) {
    const Fraction f = Fraction::parse(opt.fraction);
    const ClassicalTriple t = euclid_triple(f.num(), f.den());
    if (opt.json) {
        emit(json{{"fraction", f.str()},
                  {"triple", {json_int(t.a()), json_int(t.b()), json_int(t.c())}},
                  {"standard", is_standard(t)},
                  {"primitive", is_primitive(t)}});
    } else {
        std::ostringstream out;
        out << f.str() << " -> " << t.str();
        if (is_standard(t)) out << "  standard";
        if (is_primitive(t)) out << "  primitive";
        emit(out.str());
    }
    return 0;
}

int cmd_qtriple(const Options& opt) {
    const QPythTriple t = q_triple(Fraction::parse(opt.fraction));
    if (opt.json) {
        emit(to_json(t));
    } else {
        emit(describe(t));
    }
    return 0;
}

int cmd_series(const Options& opt) {
    const QPythTriple t = series_solution(Int(opt.series_n));
    if (opt.json) {
        emit(to_json(t));
    } else {
        emit(describe(t));
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    const Poly a = parse_coeff_list(opt.coeffs_a);
    const Poly b = parse_coeff_list(opt.coeffs_b);
    const Poly c = parse_coeff_list(opt.coeffs_c);
    const bool ok = verify_pythagoras(a, b, c);
    if (opt.json) {
        emit(json{{"A", to_json(a)},
                  {"B", to_json(b)},
                  {"C", to_json(c)},
                  {"satisfied", ok}});
    } else {
        std::ostringstream out;
        out << "A^2 + q B^2 " << (ok ? "= " : "!= ") << "C C*";
        if (!ok) {
            out << "\n  lhs: " << (a * a + (b * b).shifted(1)).str();
            out << "\n  rhs: " << (c * reciprocal(c)).str();
        }
        emit(out.str());
    }
    return ok ? 0 : 2;
}

void render_tree(std::ostream& out, const TreeNode& n, int indent) {
    out << std::string(static_cast<std::size_t>(indent) * 2, ' ')
        << n.triple.displayed().str();
    if (n.fraction) out << "  " << n.fraction->str();
    if (!n.word.empty()) out << "  " << n.word;
    out << "\n";
    for (const TreeNode& child : n.children) render_tree(out, child, indent + 1);
}

int cmd_tree(const Options& opt) {
    const TreeNode root = pythagorean_tree(opt.max_depth);
    if (opt.json) {
        emit(to_json(root));
    } else {
        std::ostringstream out;
        render_tree(out, root, 0);
        std::string text = out.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        emit(text);
    }
    return 0;
}

void render_qtree(std::ostream& out, const QTreeNode& n, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    out << pad << n.node.triple.displayed().str();
    if (n.node.fraction) out << "  " << n.node.fraction->str();
    out << "\n";
    if (n.deformation) {
        out << pad << "  A: " << n.deformation->A.str() << "\n";
        out << pad << "  B: " << n.deformation->B.str() << "\n";
        out << pad << "  C: " << n.deformation->C.str() << "\n";
    }
    for (const QTreeNode& child : n.children) render_qtree(out, child, indent + 1);
}

int cmd_qtree(const Options& opt) {
    const QTreeNode root = q_pythagorean_tree(opt.max_depth);
    if (opt.json) {
        emit(to_json(root));
    } else {
        std::ostringstream out;
        render_qtree(out, root, 0);
        std::string text = out.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        emit(text);
    }
    return 0;
}

int cmd_search(const Options& opt) {
    const ClassicalTriple target(Int(opt.target_a), Int(opt.target_b), Int(opt.target_c));
    SearchBounds bounds;
    bounds.max_deg_c = opt.max_deg;
    bounds.max_coeff = opt.max_coeff.empty() ? target.c() : Int(opt.max_coeff);
    bounds.require_unimodal = opt.require_unimodal;
    SearchProgress progress;
    bool progress_shown = false;
    if (!opt.json) {
        progress = [&progress_shown](std::uint64_t examined, std::uint64_t found) {
            std::cerr << "\r" << examined << " candidate pairs examined, " << found
                      << " solutions" << std::flush;
            progress_shown = true;
        };
    }
    const SolutionSet set = search_solutions(target, bounds, progress);
    if (progress_shown) std::cerr << "\n";
    if (opt.json) {
        emit(to_json(set));
        return 0;
    }
    std::ostringstream out;
    out << "target " << target.str() << ", deg C <= " << bounds.max_deg_c << ", coefficients <= "
        << bounds.max_coeff.str() << (bounds.require_unimodal ? ", unimodal only" : "") << "\n";
    out << set.candidates_examined << " candidate pairs examined, " << set.solutions.size()
        << " solution" << (set.solutions.size() == 1 ? "" : "s") << "\n";
    for (const Solution& sol : set.solutions) {
        out << "  A: " << sol.A.str() << "\n";
        out << "  B: " << sol.B.str() << "\n";
        out << "  C: " << sol.C.str() << "\n";
        out << "  (" << solution_terms(sol) << " terms)\n";
    }
    std::string text = out.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    emit(text);
    return 0;
}

int cmd_scan_unimodal(const Options& opt) {
    if (opt.max_m < 2) throw std::domain_error("--max-m must be at least 2");
    json failures = json::array();
    std::uint64_t checked = 0;
    for (long long m = 2; m <= opt.max_m; ++m) {
        for (long long n = 1; n < m; ++n) {
            if (gcd(Int(m), Int(n)) != 1) continue;
            const QPythTriple t = q_triple(Fraction(m, n));
            ++checked;
            const ConditionsReport rep = check_conditions(t);
            if (!rep.unimodal_all()) {
                failures.push_back(json{{"base", t.base.str()},
                                        {"A_unimodal", rep.unimodal_a},
                                        {"B_unimodal", rep.unimodal_b},
                                        {"C_unimodal", rep.unimodal_c}});
            }
        }
    }
    if (opt.json) {
        emit(json{{"max_m", opt.max_m},
                  {"checked", checked},
                  {"counterexamples", failures}});
    } else {
        std::ostringstream out;
        out << "checked " << checked << " triples (m <= " << opt.max_m << "): "
            << failures.size() << " counterexample" << (failures.size() == 1 ? "" : "s");
        for (const json& f : failures) out << "\n  base " << f.at("base").get<std::string>();
        emit(out.str());
    }
    return failures.empty() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-deformed rationals and Pythagorean triples"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit JSON instead of text");

    auto add_fraction = [&](CLI::App* sub) {
        sub->add_option("fraction", opt.fraction, "fraction m/n (or a bare integer m)")
            ->required();
        sub->fallthrough();
    };

    auto* qrat = app.add_subcommand("qrat", "q-deformation of a rational number");
    add_fraction(qrat);
    auto* cf = app.add_subcommand("cf", "odd-length continued-fraction expansion");
    add_fraction(cf);
    auto* triple = app.add_subcommand("triple", "Euclid triple of a fraction m/n >= 1");
    add_fraction(triple);
    auto* qtriple = app.add_subcommand("qtriple", "q-deformed triple of a fraction m/n > 1");
    add_fraction(qtriple);

    auto* series = app.add_subcommand("series", "closed-form solution for an integer base n >= 2");
    series->add_option("n", opt.series_n, "integer base")->required();
    series->fallthrough();

    auto* verify = app.add_subcommand("verify", "check A^2 + q B^2 = C C* for coefficient lists");
    verify->add_option("A", opt.coeffs_a, "ascending coefficients, e.g. 1,1,1,1")->required();
    verify->add_option("B", opt.coeffs_b, "ascending coefficients")->required();
    verify->add_option("C", opt.coeffs_c, "ascending coefficients")->required();
    verify->fallthrough();

    auto* tree = app.add_subcommand("tree", "Pythagorean tree");
    tree->add_option("--max-depth", opt.max_depth, "branching levels below (4,3,5)")
        ->check(CLI::Range(0, kMaxTreeDepth));
    tree->fallthrough();
    auto* qtree = app.add_subcommand("qtree", "Pythagorean tree with q-deformed annotations");
    qtree->add_option("--max-depth", opt.max_depth, "branching levels below (4,3,5)")
        ->check(CLI::Range(0, kMaxTreeDepth));
    qtree->fallthrough();

    auto* search = app.add_subcommand("search", "all bounded solutions for a standard triple");
    search->add_option("a", opt.target_a, "even leg")->required();
    search->add_option("b", opt.target_b, "odd leg")->required();
    search->add_option("c", opt.target_c, "hypotenuse")->required();
    search->add_option("--max-deg", opt.max_deg, "bound on deg C (default 7)");
    search->add_option("--max-coeff", opt.max_coeff, "coefficient cap (default c)");
    search->add_flag("--require-unimodal", opt.require_unimodal, "keep unimodal solutions only");
    search->fallthrough();

    auto* scan = app.add_subcommand("scan-unimodal",
                                    "scan deformed triples for unimodality counterexamples");
    scan->add_option("--max-m", opt.max_m, "largest numerator to scan (default 40)");
    scan->fallthrough();

    try {
        app.parse(argc, argv);
        if (qrat->parsed()) return cmd_qrat(opt);
        if (cf->parsed()) return cmd_cf(opt);
        if (triple->parsed()) return cmd_triple(opt);
        if (qtriple->parsed()) return cmd_qtriple(opt);
        if (series->parsed()) return cmd_series(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (tree->parsed()) return cmd_tree(opt);
        if (qtree->parsed()) return cmd_qtree(opt);
        if (search->parsed()) return cmd_search(opt);
        if (scan->parsed()) return cmd_scan_unimodal(opt);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
