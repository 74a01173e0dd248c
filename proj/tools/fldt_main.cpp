#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fldt/counter.hpp"
#include "fldt/decisions.hpp"
#include "fldt/oracle.hpp"
#include "fldt/pcp.hpp"

using namespace fldt;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Autodetect by the first directive: automata start with "alphabet:",
// grammars with "start:".
LangHandle load_language(const std::string& path) {
    std::string text = slurp(path);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "alphabet:") {
            try {
                return parse_nfa(text);
            } catch (const ParseError&) {
                // word-labeled transitions: a generalized automaton file
                return parse_gnfa(text).expand();
            }
        }
        if (tok == "start:") return parse_cfg(text);
    }
    throw ParseError("unrecognized language file (no alphabet:/start: line): " +
                     path);
}

Nfa load_nfa(const std::string& path) {
    LangHandle h = load_language(path);
    if (const Nfa* a = std::get_if<Nfa>(&h)) return *a;
    throw ParseError("expected an automaton file: " + path);
}

struct Output {
    bool as_json = false;
    json j;
    std::ostringstream text;

    void field(const std::string& key, const std::string& value) {
        j[key] = value;
        text << key << ": " << value << "\n";
    }
    void field(const std::string& key, const char* value) {
        field(key, std::string(value));
    }
    void field(const std::string& key, bool value) {
        j[key] = value;
        text << key << ": " << (value ? "true" : "false") << "\n";
    }
    void field(const std::string& key, std::size_t value) {
        j[key] = value;
        text << key << ": " << value << "\n";
    }
    void emit(std::ostream& os) const {
        if (as_json) os << j.dump(2) << "\n";
        else os << text.str();
    }
};

std::size_t default_max_len() {
    if (const char* env = std::getenv("FLDT_MAX_LEN")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) return static_cast<std::size_t>(v);
        throw ParseError("FLDT_MAX_LEN is not a nonnegative integer");
    }
    return 10;
}

void report(Output& out, const DecisionReport& r) {
    out.field("answer", r.answer);
    if (r.witness) out.field("witness", to_string(*r.witness));
    if (r.member) out.field("member", to_string(*r.member));
    out.field("method", r.method);
    out.field("capacity", kDefaultSubsetCap);
}

Form form_by_name(const std::string& name, int n, int k) {
    if (name == "square") return Form::square();
    if (name == "power") return Form::power(n);
    if (name == "marked-copy") return Form::marked_copy();
    if (name == "reverse-copy") return Form::reverse_copy();
    if (name == "mirror-k") return Form::mirror_product(k);
    if (name == "self-shuffle") return Form::self_shuffle();
    if (name == "reverse-shuffle") return Form::reverse_shuffle();
    if (name == "marked-shuffle") return Form::marked_shuffle();
    if (name == "palindrome") return Form::palindrome();
    throw ParseError("unknown form: " + name);
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path);
    if (!os) throw ParseError("cannot open output file: " + path);
    os << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"formal-language decision toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object instead of key: value lines");

    // decide
    auto* decide = app.add_subcommand("decide", "run a decision procedure");
    std::string d_kind, d_r, d_p;
    int d_n = 2, d_k = 1;
    bool d_allow_empty = false;
    decide->add_option("kind", d_kind,
                       "square|power|marked-copy|reverse-copy|mirror-k|"
                       "mirror-star|squares-subset")->required();
    decide->add_option("r", d_r, "automaton file for R")->required();
    decide->add_option("p", d_p, "automaton file for P (power, squares-subset)");
    decide->add_option("--n", d_n, "power exponent");
    decide->add_option("--k", d_k, "mirror block count");
    decide->add_flag("--allow-empty", d_allow_empty, "allow the empty witness");

    // scan
    auto* scan = app.add_subcommand("scan", "bounded brute-force search");
    std::string s_form, s_input;
    int s_n = 2, s_k = 1;
    std::size_t s_max_len = default_max_len(), s_max_candidates = 200000;
    scan->add_option("form", s_form,
                     "square|power|marked-copy|reverse-copy|mirror-k|"
                     "self-shuffle|reverse-shuffle|marked-shuffle|palindrome")
        ->required();
    scan->add_option("input", s_input, "automaton or grammar file")->required();
    scan->add_option("--n", s_n, "power exponent");
    scan->add_option("--k", s_k, "mirror block count");
    scan->add_option("--max-len", s_max_len, "member length bound");
    scan->add_option("--max-candidates", s_max_candidates, "candidate cap");

    // build
    auto* build = app.add_subcommand("build", "emit a constructed object");
    std::string b_what, b_input, b_out;
    int b_n = 2, b_k = 1;
    bool b_no_sep = false, b_with_empty = false;
    build->add_option("construction", b_what,
                      "L2|L2-marked|Ln|Lomega|Lsharp|L1|Lk|overflow-automaton|"
                      "mc-complement-machine|counter-inclusion-machine|"
                      "nth-root|star-root|mirror-grammar")->required();
    build->add_option("input", b_input, "PCP or automaton file")->required();
    build->add_option("-o,--out", b_out, "output file (default stdout)");
    build->add_option("--n", b_n, "exponent for Ln / nth-root");
    build->add_option("--k", b_k, "block count for Lk / mirror-grammar (0 = star)");
    build->add_flag("--no-separators", b_no_sep,
                    "omit the # block separators in Ln");
    build->add_flag("--with-empty", b_with_empty,
                    "include the fully empty member in Lsharp");

    // pcp
    auto* pcp = app.add_subcommand("pcp", "bounded solution search");
    std::string p_input;
    std::size_t p_max_len = default_max_len();
    pcp->add_option("input", p_input, "PCP file")->required();
    pcp->add_option("--max-len", p_max_len, "solution length bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        Output out;
        out.as_json = as_json;
        if (*decide) {
            DecisionReport r;
            if (d_kind == "square") {
                r = has_square(load_nfa(d_r));
            } else if (d_kind == "power") {
                Nfa rr = load_nfa(d_r);
                Nfa pp = d_p.empty() ? sigma_star(rr.alphabet) : load_nfa(d_p);
                r = has_power(rr, d_n, pp, d_allow_empty);
            } else if (d_kind == "marked-copy") {
                r = has_marked_copy(load_nfa(d_r), d_allow_empty);
            } else if (d_kind == "reverse-copy") {
                r = has_reverse_copy(load_nfa(d_r), d_allow_empty);
            } else if (d_kind == "mirror-k") {
                r = has_mirror_product(load_nfa(d_r),
                                       static_cast<std::size_t>(d_k));
            } else if (d_kind == "mirror-star") {
                r = has_mirror_star(load_nfa(d_r));
            } else if (d_kind == "squares-subset") {
                if (d_p.empty())
                    throw ParseError("squares-subset needs P and R files");
                r = squares_subset(load_nfa(d_r), load_nfa(d_p));
            } else {
                throw ParseError("unknown decide kind: " + d_kind);
            }
            out.field("kind", d_kind);
            report(out, r);
            out.emit(std::cout);
        } else if (*scan) {
            LangHandle lang = load_language(s_input);
            SearchBudget budget{s_max_len, s_max_candidates};
            ScanResult r = scan_for_form(lang, form_by_name(s_form, s_n, s_k),
                                         budget);
            out.field("form", s_form);
            out.field("verdict", r.verdict == Verdict::yes ? "yes"
                      : r.verdict == Verdict::no_up_to_bound ? "no_up_to_bound"
                                                             : "unknown");
            if (r.witness) out.field("witness", to_string(*r.witness));
            if (r.member) out.field("member", to_string(*r.member));
            out.field("max-len", budget.max_word_len);
            out.field("max-candidates", budget.max_candidates);
            out.emit(std::cout);
        } else if (*build) {
            std::string emitted;
            if (b_what == "L2" || b_what == "L2-marked" || b_what == "Ln" ||
                b_what == "Lomega" || b_what == "Lsharp" || b_what == "L1" ||
                b_what == "Lk" || b_what == "overflow-automaton" ||
                b_what == "counter-inclusion-machine") {
                PcpInstance inst = parse_pcp(slurp(b_input));
                if (b_what == "L2") emitted = to_string(build_L2(inst));
                else if (b_what == "L2-marked")
                    emitted = to_string(build_L2_marked(inst));
                else if (b_what == "Ln")
                    emitted = to_string(build_Ln(inst, b_n, !b_no_sep));
                else if (b_what == "Lomega")
                    emitted = to_string(build_Lomega(inst));
                else if (b_what == "Lsharp")
                    emitted = to_string(build_Lsharp(inst, b_with_empty));
                else if (b_what == "L1") emitted = to_string(build_L1(inst));
                else if (b_what == "Lk")
                    emitted = to_string(build_Lk(inst,
                                                 static_cast<std::size_t>(b_k)));
                else if (b_what == "overflow-automaton")
                    emitted = to_string(marked_shuffle_automaton(inst));
                else
                    emitted = to_string(counter_inclusion_machine(inst.g, inst.h));
            } else if (b_what == "mc-complement-machine") {
                emitted = to_string(complement_marked_copy_machine(load_nfa(b_input)));
            } else if (b_what == "nth-root") {
                emitted = to_string(nth_root(load_nfa(b_input), b_n));
            } else if (b_what == "star-root") {
                emitted = to_string(star_root(load_nfa(b_input)));
            } else if (b_what == "mirror-grammar") {
                Alphabet sigma = load_nfa(b_input).alphabet;
                Cfg g = b_k == 0 ? mirror_star_grammar(sigma)
                                 : mirror_k_grammar(sigma,
                                                    static_cast<std::size_t>(b_k));
                emitted = to_string(g);
            } else {
                throw ParseError("unknown construction: " + b_what);
            }
            write_out(b_out, emitted);
        } else if (*pcp) {
            PcpInstance inst = parse_pcp(slurp(p_input));
            std::optional<Word> sol = solve_bounded(inst, p_max_len);
            if (sol) out.field("solution", to_string(*sol));
            else out.field("solution", std::string("none-up-to-bound"));
            out.field("max-len", p_max_len);
            out.emit(std::cout);
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const IndeterminateError& e) {
        std::cerr << "indeterminate: " << e.what() << "\n";
        return 3;
    }
}
