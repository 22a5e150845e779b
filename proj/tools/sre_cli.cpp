// sre — partial derivative automata for regular expressions with shuffle.
//
// Every subcommand writes data to stdout and diagnostics to stderr.
// Exit codes: 0 success, 1 domain error (parse, budget), 2 usage error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sre/derive.hpp"
#include "sre/errors.hpp"
#include "sre/expr.hpp"
#include "sre/lang.hpp"
#include "sre/nfa.hpp"
#include "sre/parse.hpp"
#include "sre/sample.hpp"
#include "sre/series.hpp"

namespace {

// `@file` indirection: when the argument starts with '@' and the remainder
// names a readable file, the expression is read from that file.
std::string load_expr_text(const std::string& arg) {
    if (arg.size() > 1 && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (in) {
            std::ostringstream buffer;
            buffer << in.rdbuf();
            std::string text = buffer.str();
            while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
            return text;
        }
    }
    return arg;
}

// The working alphabet is every symbol mentioned in the given texts,
// sorted by name.
sre::Alphabet infer_alphabet(const std::vector<std::string>& texts) {
    std::vector<std::string> names;
    for (const auto& text : texts) {
        for (auto& name : sre::scan_symbol_names(text)) names.push_back(std::move(name));
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return sre::Alphabet(std::move(names));
}

void emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << data;
}

int run(int argc, char** argv) {
    CLI::App app{"partial derivative automata for regular expressions with shuffle"};
    app.require_subcommand(1);

    std::string expr_text, expr2_text, word_text, format, out_path;
    long long k = 1;
    int n = 1, maxlen = 4;
    long long samples = 1000;
    std::uint64_t seed = 0;
    bool csv = false;

    auto* cmd_parse = app.add_subcommand("parse", "parse an expression and report its metrics");
    cmd_parse->add_option("-e", expr_text, "expression (or @file)")->required();

    auto* cmd_pi = app.add_subcommand("pi", "list the support of an expression");
    cmd_pi->add_option("-e", expr_text, "expression (or @file)")->required();

    auto* cmd_derive = app.add_subcommand("derive", "partial derivatives by a word");
    cmd_derive->add_option("-e", expr_text, "expression (or @file)")->required();
    cmd_derive->add_option("-w", word_text, "word, e.g. ab or a1a2 (@ = empty word)")->required();

    auto* cmd_nfa = app.add_subcommand("nfa", "build the partial derivative automaton");
    cmd_nfa->add_option("-e", expr_text, "expression (or @file)")->required();
    cmd_nfa->add_option("--format", format, "dot or json")
        ->required()
        ->check(CLI::IsMember({"dot", "json"}));
    cmd_nfa->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_member = app.add_subcommand("member", "word membership via the automaton");
    cmd_member->add_option("-e", expr_text, "expression (or @file)")->required();
    cmd_member->add_option("-w", word_text, "word to test (@ = empty word)")->required();

    auto* cmd_equiv = app.add_subcommand("equiv", "bounded language equivalence");
    cmd_equiv->add_option("-e", expr_text, "first expression (or @file)")->required();
    cmd_equiv->add_option("--e2", expr2_text, "second expression, also as -e2 (or @file)")
        ->required();
    cmd_equiv->add_option("--maxlen", maxlen, "word length bound")->required();

    auto* cmd_support = app.add_subcommand("support", "verify the support equation system");
    cmd_support->add_option("-e", expr_text, "expression (or @file)")->required();
    cmd_support->add_option("--maxlen", maxlen, "word length bound")->required();

    auto* cmd_enum = app.add_subcommand("enumerate", "all expressions of one size");
    cmd_enum->add_option("-k", k, "alphabet size")->required();
    cmd_enum->add_option("-n", n, "expression size")->required();

    auto* cmd_series = app.add_subcommand("series", "exact coefficient sequences r, l, p");
    cmd_series->add_option("-k", k, "alphabet size")->required();
    cmd_series->add_option("-n", n, "maximum size")->required();
    cmd_series->add_flag("--csv", csv, "CSV output");

    auto* cmd_asympt = app.add_subcommand("asympt", "closed-form asymptotics at (k, n)");
    cmd_asympt->add_option("-k", k, "alphabet size")->required();
    long long asympt_n = 1;
    cmd_asympt->add_option("-n", asympt_n, "expression size")->required();

    auto* cmd_stats = app.add_subcommand("stats", "sampled support and automaton statistics");
    cmd_stats->add_option("-k", k, "alphabet size")->required();
    cmd_stats->add_option("-n", n, "expression size")->required();
    cmd_stats->add_option("--samples", samples, "number of samples")->required();
    cmd_stats->add_option("--seed", seed, "random seed")->required();
    cmd_stats->add_flag("--csv", csv, "CSV output");

    // CLI11 requires two dashes for multi-character names; keep the short
    // spelling -e2 working by rewriting it.
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) {
        std::string arg = argv[i];
        if (arg == "-e2") arg = "--e2";
        else if (arg.rfind("-e2=", 0) == 0) arg = "-" + arg;
        args.push_back(std::move(arg));
    }
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_parse->parsed()) {
        std::string text = load_expr_text(expr_text);
        sre::ExprPool pool(infer_alphabet({text}));
        sre::Expr e = sre::parse(pool, text);
        std::cout << "expr: " << sre::pretty_print(e) << "\n"
                  << "tree: " << sre::tree_string(e) << "\n"
                  << "size: " << e.size() << "\n"
                  << "width: " << e.alphabetic_width() << "\n"
                  << "nullable: " << (e.nullable() ? "true" : "false") << "\n";
    } else if (cmd_pi->parsed()) {
        std::string text = load_expr_text(expr_text);
        sre::ExprPool pool(infer_alphabet({text}));
        sre::Expr e = sre::parse(pool, text);
        for (sre::Expr g : sre::pi(pool, e)) std::cout << sre::pretty_print(g) << "\n";
    } else if (cmd_derive->parsed()) {
        std::string text = load_expr_text(expr_text);
        sre::ExprPool pool(infer_alphabet({text, word_text}));
        sre::Expr e = sre::parse(pool, text);
        sre::Word w = sre::parse_word(pool.alphabet(), word_text);
        for (sre::Expr g : sre::derivative_by_word(pool, e, w)) {
            std::cout << sre::pretty_print(g) << "\n";
        }
    } else if (cmd_nfa->parsed()) {
        std::string text = load_expr_text(expr_text);
        sre::ExprPool pool(infer_alphabet({text}));
        sre::Nfa nfa = sre::build_apd(pool, sre::parse(pool, text));
        emit(format == "dot" ? sre::export_dot(nfa) : sre::export_json(nfa), out_path);
    } else if (cmd_member->parsed()) {
        std::string text = load_expr_text(expr_text);
        sre::ExprPool pool(infer_alphabet({text, word_text}));
        sre::Nfa nfa = sre::build_apd(pool, sre::parse(pool, text));
        sre::Word w = sre::parse_word(pool.alphabet(), word_text);
        std::cout << (sre::nfa_member(nfa, w) ? "true" : "false") << "\n";
    } else if (cmd_equiv->parsed()) {
        std::string text1 = load_expr_text(expr_text);
        std::string text2 = load_expr_text(expr2_text);
        sre::ExprPool pool(infer_alphabet({text1, text2}));
        sre::Expr e1 = sre::parse(pool, text1);
        sre::Expr e2 = sre::parse(pool, text2);
        sre::EquivResult result = sre::bounded_equiv(pool, e1, e2, maxlen);
        if (result.equivalent) {
            std::cout << "true\n";
        } else {
            std::cout << "false\n"
                      << "witness: " << sre::format_word(pool.alphabet(), result.witness) << "\n";
        }
    } else if (cmd_support->parsed()) {
        std::string text = load_expr_text(expr_text);
        sre::ExprPool pool(infer_alphabet({text}));
        sre::Expr e = sre::parse(pool, text);
        std::cout << (sre::check_support(pool, e, maxlen) ? "true" : "false") << "\n";
    } else if (cmd_enum->parsed()) {
        sre::ExprPool pool(sre::Alphabet::prefix(static_cast<int>(k)));
        sre::enumerate_exprs(pool, n, [](sre::Expr e) {
            std::cout << sre::pretty_print(e) << "\n";
        });
    } else if (cmd_series->parsed()) {
        sre::CoeffTable table = sre::coefficients(k, n);
        if (csv) {
            std::cout << sre::series_csv(table);
        } else {
            for (int i = 1; i <= table.n_max; ++i) {
                auto idx = static_cast<std::size_t>(i);
                std::cout << "n=" << i << " r=" << table.r[idx].str()
                          << " l=" << table.l[idx].str() << " p=" << table.p[idx].str() << "\n";
            }
        }
    } else if (cmd_asympt->parsed()) {
        std::cout << sre::asymptotics_csv(sre::asymptotics(k, asympt_n));
    } else if (cmd_stats->parsed()) {
        sre::SampleStats stats = sre::run_stats(k, n, samples, seed);
        if (csv) {
            std::cout << sre::stats_csv(stats);
        } else {
            std::cout << "k: " << stats.k << "\nn: " << stats.n
                      << "\nsamples: " << stats.samples << "\nseed: " << stats.seed
                      << std::setprecision(12) << "\nmean_width: " << stats.mean_width
                      << "\nmean_pi: " << stats.mean_pi << "\nmax_pi: " << stats.max_pi
                      << "\nmean_states: " << stats.mean_states
                      << "\nbound_worst: " << stats.bound_worst
                      << "\nbound_avg: " << stats.bound_avg << "\ncensored: " << stats.censored
                      << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sre::ParseError& e) {
        std::cerr << "error: " << e.what() << " (at position " << e.position() << ")\n";
        return 1;
    } catch (const sre::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
