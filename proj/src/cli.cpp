#include <braidtrees/cli.hpp>

#include <braidtrees/binary_algebra.hpp>
#include <braidtrees/checks.hpp>
#include <braidtrees/forest_algebra.hpp>
#include <braidtrees/sequences.hpp>
#include <braidtrees/trees.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace braidtrees {

namespace {

// ------------------------------------------------------------------
// Expression evaluation.  Expressions are decorated trees in the
// canonical notation of each algebra, combined with the infix operators
// `<:` (prec), `:>` (succ) and `*` (star/concatenation).  Chains of one
// operator associate to the left; mixing operators requires parentheses.

template <class E>
struct ExprAlgebra {
    std::function<E(const std::string&)> literal;
    std::function<E(const E&, const E&)> prec;  // empty when unsupported
    std::function<E(const E&, const E&)> succ;
    std::function<E(const E&, const E&)> star;
    const char* name;
};

std::string trim_copy(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// True when the '(' at position 0 closes exactly at the last character.
bool whole_group(const std::string& text) {
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') {
            --depth;
            if (depth == 0) return i + 1 == text.size();
            if (depth < 0) return false;
        }
    }
    return false;
}

struct OpSplit {
    std::vector<std::string> operands;
    std::string op;  // empty when the text has no top-level operator
};

OpSplit split_top_level(const std::string& text) {
    OpSplit out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(' || c == '[') {
            ++depth;
            continue;
        }
        if (c == ')' || c == ']') {
            --depth;
            if (depth < 0)
                throw DomainError("unbalanced brackets in expression: " +
                                  text);
            continue;
        }
        if (depth != 0) continue;
        std::string token;
        if (text.compare(i, 2, "<:") == 0)
            token = "<:";
        else if (text.compare(i, 2, ":>") == 0)
            token = ":>";
        else if (c == '*')
            token = "*";
        if (token.empty()) continue;
        if (!out.op.empty() && out.op != token)
            throw DomainError(
                "mixed operators need parentheses in expression: " + text);
        out.op = token;
        out.operands.push_back(text.substr(start, i - start));
        i += token.size() - 1;
        start = i + 1;
    }
    if (depth != 0)
        throw DomainError("unbalanced brackets in expression: " + text);
    out.operands.push_back(text.substr(start));
    return out;
}

template <class E>
E eval_expression(const std::string& raw, const ExprAlgebra<E>& alg) {
    const std::string text = trim_copy(raw);
    if (text.empty()) throw DomainError("empty expression");
    const OpSplit split = split_top_level(text);
    if (split.op.empty()) {
        // A single operand: a tree literal, or a parenthesized group.
        // Literals win; only strings that fail to parse as a tree are
        // unwrapped as grouping.
        try {
            return alg.literal(text);
        } catch (const DomainError&) {
            if (!text.empty() && text.front() == '(' && whole_group(text))
                return eval_expression(text.substr(1, text.size() - 2), alg);
            throw;
        }
    }
    const std::function<E(const E&, const E&)>& op =
        split.op == "<:" ? alg.prec : split.op == ":>" ? alg.succ : alg.star;
    if (!op)
        throw DomainError("operator " + split.op +
                          " is not defined in the " + std::string(alg.name) +
                          " algebra");
    E acc = eval_expression(split.operands.front(), alg);
    for (std::size_t k = 1; k < split.operands.size(); ++k)
        acc = op(acc, eval_expression(split.operands[k], alg));
    return acc;
}

ExprAlgebra<BinElem> binary_expr() {
    return {[](const std::string& t) {
                return BinElem::single(parse_decorated_binary(t));
            },
            [](const BinElem& a, const BinElem& b) { return bt_prec(a, b); },
            [](const BinElem& a, const BinElem& b) { return bt_succ(a, b); },
            [](const BinElem& a, const BinElem& b) { return bt_star(a, b); },
            "binary-tree"};
}

ExprAlgebra<ForestElem> forest_expr() {
    return {[](const std::string& t) {
                return ForestElem::single(parse_decorated_forest(t));
            },
            {},
            {},
            [](const ForestElem& a, const ForestElem& b) {
                return forest_concat(a, b);
            },
            "forest"};
}

ExprAlgebra<AngElem> angular_expr() {
    return {[](const std::string& t) {
                return AngElem::single(parse_decorated_angular(t));
            },
            [](const AngElem& a, const AngElem& b) { return at_prec(a, b); },
            [](const AngElem& a, const AngElem& b) { return at_succ(a, b); },
            [](const AngElem& a, const AngElem& b) { return at_star(a, b); },
            "angular-tree"};
}

template <class B>
int max_letter(const LinComb<B>& e) {
    int m = 0;
    for (const auto& t : e.terms())
        for (const std::int32_t l : t.elem.word)
            m = std::max(m, static_cast<int>(l));
    return m;
}

// ------------------------------------------------------------------
// Braiding and finite-algebra loading.

Braiding braiding_for(const std::string& spec, int dim_flag, int letters) {
    const int dim = dim_flag > 0 ? dim_flag : std::max(letters, 1);
    Braiding sigma = Braiding::from_spec(spec, dim);
    if (letters > sigma.dim())
        throw DomainError("expression letter e" + std::to_string(letters) +
                          " exceeds the braiding dimension " +
                          std::to_string(sigma.dim()));
    return sigma;
}

std::vector<AlgebraEntry> componentwise_entries(int dim) {
    std::vector<AlgebraEntry> entries;
    for (std::int32_t i = 1; i <= dim; ++i)
        entries.push_back({i, i, i, Rational(1)});
    return entries;
}

struct AlgebraSpecData {
    int dim = 0;
    std::vector<AlgebraEntry> entries;
    Braiding sigma = Braiding::flip(1);
};

// {"dim": d, "mult": [{"i", "j", "k", "c"}...], "braiding": <braiding
// JSON>} with rational coefficients as strings.
AlgebraSpecData load_algebra_file(const std::string& spec) {
    if (spec.rfind("file:", 0) != 0)
        throw DomainError("--algebra expects file:<path>, got: " + spec);
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read algebra file: " + path);
    try {
        nlohmann::json j;
        in >> j;
        AlgebraSpecData data;
        data.dim = j.at("dim").get<int>();
        for (const auto& m : j.at("mult"))
            data.entries.push_back(
                {m.at("i").get<std::int32_t>(), m.at("j").get<std::int32_t>(),
                 m.at("k").get<std::int32_t>(),
                 rational_from_string(m.at("c").get<std::string>())});
        data.sigma = Braiding::from_json(j.at("braiding"));
        return data;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("algebra file " + path + ": " + e.what());
    }
}

// ------------------------------------------------------------------
// Output helpers.

template <class B>
nlohmann::ordered_json terms_json(const LinComb<B>& e) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : e.terms()) {
        nlohmann::ordered_json item;
        item["coeff"] = rational_to_string(t.coeff);
        item["elem"] = canonical_key(t.elem);
        arr.push_back(item);
    }
    return arr;
}

template <class L, class R>
nlohmann::ordered_json pair_terms_json(const LinComb<Pair2<L, R>>& e) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : e.terms()) {
        nlohmann::ordered_json item;
        item["coeff"] = rational_to_string(t.coeff);
        item["left"] = canonical_key(t.elem.left);
        item["right"] = canonical_key(t.elem.right);
        arr.push_back(item);
    }
    return arr;
}

template <class B>
int emit_elem(const LinComb<B>& e, const std::string& op,
              const std::string& alg, bool plain, std::ostream& out) {
    if (plain) {
        out << e.to_string() << "\n";
        return 0;
    }
    nlohmann::ordered_json j;
    j["op"] = op;
    j["alg"] = alg;
    j["terms"] = terms_json(e);
    out << j.dump(2) << "\n";
    return 0;
}

template <class L, class R>
int emit_pair(const LinComb<Pair2<L, R>>& e, const std::string& op,
              const std::string& alg, bool plain, std::ostream& out) {
    if (plain) {
        out << e.to_string() << "\n";
        return 0;
    }
    nlohmann::ordered_json j;
    j["op"] = op;
    j["alg"] = alg;
    j["terms"] = pair_terms_json(e);
    out << j.dump(2) << "\n";
    return 0;
}

std::string join_values(const std::vector<Int>& values) {
    std::string line;
    for (const Int& v : values) {
        if (!line.empty()) line += ' ';
        line += v.str();
    }
    return line;
}

nlohmann::ordered_json values_json(const std::vector<Int>& values) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Int& v : values) arr.push_back(v.str());
    return arr;
}

int default_degree(const std::string& suite) {
    if (suite == "tridendriform" || suite == "hopf-at" ||
        suite == "lush-quotient")
        return 4;
    return 5;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    try {
        refresh_limits();
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 2;
    }

    CLI::App app{
        "braidtrees: exact computations in braided algebras of decorated "
        "planar trees"};
    app.require_subcommand(1);

    // ---- enumerate
    auto* enum_cmd = app.add_subcommand(
        "enumerate", "List or count the tree shapes of one degree");
    std::string e_kind;
    int e_n = 0;
    bool e_count = false;
    bool e_plain = false;
    enum_cmd->add_option("--kind", e_kind,
                         "Shape family: binary, forest, angular, or lush")
        ->required()
        ->check(CLI::IsMember({"binary", "forest", "angular", "lush"}));
    enum_cmd->add_option("--n", e_n, "Degree (decoration slots)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enum_cmd->add_flag("--count-only", e_count,
                       "Print only the number of shapes");
    enum_cmd->add_flag("--plain", e_plain,
                       "Human-readable text instead of JSON");

    // ---- check
    auto* check_cmd = app.add_subcommand(
        "check", "Verify an identity suite exhaustively up to a degree");
    std::string c_suite;
    std::string c_braiding = "flip";
    std::string c_algebra;
    int c_dim = 1;
    int c_maxdeg = -1;
    bool c_plain = false;
    check_cmd
        ->add_option("--suite", c_suite,
                     "yang-baxter, dendriform, hopf-bt, hopf-rt, "
                     "tridendriform, hopf-at, theta, or lush-quotient")
        ->required()
        ->check(CLI::IsMember({"yang-baxter", "dendriform", "hopf-bt",
                               "hopf-rt", "tridendriform", "hopf-at", "theta",
                               "lush-quotient"}));
    check_cmd->add_option(
        "--braiding", c_braiding,
        "Braiding: flip, diag:<rational>, or file:<path> (default flip)");
    check_cmd
        ->add_option("--dim", c_dim,
                     "Letter-space dimension for flip/diag (default 1); a "
                     "file: braiding carries its own dimension")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option(
        "--max-degree", c_maxdeg,
        "Degree bound; defaults to 5 for binary/forest suites and 4 for "
        "angular suites.  Instance and term counts grow super-exponentially "
        "with the bound (especially for multi-term file: braidings), so "
        "larger values can take minutes to hours");
    check_cmd->add_option(
        "--algebra", c_algebra,
        "lush-quotient only: file:<path> to a finite-algebra JSON "
        "({\"dim\", \"mult\", \"braiding\"}); default is the componentwise "
        "product on --dim letters with --braiding");
    check_cmd->add_flag("--plain", c_plain,
                        "Human-readable text instead of JSON");

    // ---- compute
    auto* compute_cmd = app.add_subcommand(
        "compute", "Evaluate one operation on tree expressions");
    std::string m_op;
    std::string m_alg;
    std::string m_braiding = "flip";
    std::string m_algebra;
    int m_dim = 0;
    bool m_plain = false;
    std::string m_expr1;
    std::string m_expr2;
    compute_cmd
        ->add_option("--op", m_op,
                     "prec, succ, dot, star, coproduct, antipode, theta, "
                     "theta-inv, or reduce")
        ->required()
        ->check(CLI::IsMember({"prec", "succ", "dot", "star", "coproduct",
                               "antipode", "theta", "theta-inv", "reduce"}));
    compute_cmd
        ->add_option("--alg", m_alg,
                     "Algebra: bt (binary trees), rt (rooted forests), at "
                     "(angular trees)")
        ->required()
        ->check(CLI::IsMember({"bt", "rt", "at"}));
    compute_cmd->add_option(
        "--braiding", m_braiding,
        "Braiding: flip, diag:<rational>, or file:<path> (default flip)");
    compute_cmd
        ->add_option("--dim", m_dim,
                     "Letter-space dimension; 0 (default) uses the largest "
                     "letter in the expressions")
        ->check(CLI::NonNegativeNumber);
    compute_cmd->add_option(
        "--algebra", m_algebra,
        "reduce only: file:<path> to a finite-algebra JSON; default is the "
        "componentwise product with --braiding");
    compute_cmd->add_flag("--plain", m_plain,
                          "Human-readable text instead of JSON");
    compute_cmd
        ->add_option("expr1", m_expr1,
                     "Tree expression; infix operators <: (prec), :> "
                     "(succ), * (star), parentheses required when mixing")
        ->required();
    auto* expr2_opt = compute_cmd->add_option(
        "expr2", m_expr2, "Second expression, for the two-sided operations");

    // ---- sequence
    auto* seq_cmd =
        app.add_subcommand("sequence", "Print an integer sequence");
    std::string s_name;
    std::string s_method = "recursion";
    int s_upto = 0;
    bool s_plain = false;
    seq_cmd->add_option("--name", s_name,
                        "lush, catalan, schroeder, or a141200")
        ->required()
        ->check(CLI::IsMember({"lush", "catalan", "schroeder", "a141200"}));
    seq_cmd->add_option("--upto", s_upto, "Last index, inclusive")
        ->required()
        ->check(CLI::NonNegativeNumber);
    auto* method_opt =
        seq_cmd
            ->add_option("--method", s_method,
                         "lush only: recursion, closed, enumeration, or all "
                         "(default recursion)")
            ->check(CLI::IsMember(
                {"recursion", "closed", "enumeration", "all"}));
    seq_cmd->add_flag("--plain", s_plain,
                      "Human-readable text instead of JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enum_cmd->parsed()) {
            std::vector<std::string> keys;
            if (e_kind == "binary")
                for (const BinTree& s : binary_shapes(e_n))
                    keys.push_back(canonical_key(s));
            else if (e_kind == "forest")
                for (const Forest& s : forest_shapes(e_n))
                    keys.push_back(canonical_key(s));
            else if (e_kind == "angular")
                for (const AngTree& s : angular_shapes(e_n))
                    keys.push_back(canonical_key(s));
            else
                for (const AngTree& s : lush_shapes(e_n))
                    keys.push_back(canonical_key(s));
            if (e_plain) {
                if (e_count)
                    out << keys.size() << "\n";
                else
                    for (const std::string& k : keys) out << k << "\n";
                return 0;
            }
            nlohmann::ordered_json j;
            j["kind"] = e_kind;
            j["n"] = e_n;
            j["count"] = keys.size();
            if (!e_count) j["shapes"] = keys;
            out << j.dump(2) << "\n";
            return 0;
        }

        if (check_cmd->parsed()) {
            if (!c_algebra.empty() && c_suite != "lush-quotient")
                throw DomainError(
                    "--algebra applies only to the lush-quotient suite");
            const int deg = c_maxdeg >= 0 ? c_maxdeg : default_degree(c_suite);
            SuiteReport report;
            std::string braiding_desc = c_braiding;
            int dim_out = 0;
            if (c_suite == "lush-quotient") {
                int ldim = c_dim;
                std::vector<AlgebraEntry> entries;
                Braiding lsig = Braiding::flip(1);
                if (!c_algebra.empty()) {
                    AlgebraSpecData data = load_algebra_file(c_algebra);
                    ldim = data.dim;
                    entries = data.entries;
                    lsig = data.sigma;
                    braiding_desc = c_algebra;
                } else {
                    entries = componentwise_entries(ldim);
                    lsig = Braiding::from_spec(c_braiding, c_dim);
                }
                dim_out = ldim;
                report = check_lush_quotient_suite(ldim, entries, lsig, deg);
            } else {
                const Braiding sigma = Braiding::from_spec(c_braiding, c_dim);
                dim_out = sigma.dim();
                if (c_suite == "yang-baxter")
                    report = check_yang_baxter(sigma);
                else if (c_suite == "dendriform")
                    report = check_dendriform_suite(sigma, deg);
                else if (c_suite == "hopf-bt")
                    report = check_binary_hopf_suite(sigma, deg);
                else if (c_suite == "hopf-rt")
                    report = check_forest_hopf_suite(sigma, deg);
                else if (c_suite == "theta")
                    report = check_theta_iso(sigma, deg);
                else if (c_suite == "tridendriform")
                    report = check_tridendriform_suite(sigma, deg);
                else
                    report = check_angular_hopf_suite(sigma, deg);
            }
            if (c_plain) {
                std::size_t fails = 0;
                for (const IdentityResult& r : report.identities) {
                    if (r.pass) {
                        out << "PASS " << r.name << "\n";
                    } else {
                        ++fails;
                        out << "FAIL " << r.name << ": " << r.counterexample
                            << "\n";
                    }
                }
                if (fails == 0)
                    out << "all " << report.identities.size()
                        << " identities pass\n";
                else
                    out << fails << " of " << report.identities.size()
                        << " identities fail\n";
            } else {
                nlohmann::ordered_json j;
                j["suite"] = c_suite;
                j["braiding"] = braiding_desc;
                j["dim"] = dim_out;
                if (c_suite != "yang-baxter") j["max_degree"] = deg;
                nlohmann::ordered_json ids = nlohmann::ordered_json::array();
                for (const IdentityResult& r : report.identities) {
                    nlohmann::ordered_json item;
                    item["name"] = r.name;
                    item["status"] = r.pass ? "pass" : "fail";
                    if (!r.pass) item["counterexample"] = r.counterexample;
                    ids.push_back(item);
                }
                j["identities"] = ids;
                j["all_pass"] = report.all_pass();
                out << j.dump(2) << "\n";
            }
            return report.all_pass() ? 0 : 1;
        }

        if (compute_cmd->parsed()) {
            const bool unary = m_op == "coproduct" || m_op == "antipode" ||
                               m_op == "theta" || m_op == "theta-inv" ||
                               m_op == "reduce";
            const std::size_t need = unary ? 1 : 2;
            const std::size_t got = 1 + (expr2_opt->count() > 0 ? 1 : 0);
            if (got != need)
                throw DomainError("operation " + m_op + " takes " +
                                  std::to_string(need) +
                                  " expression(s), got " +
                                  std::to_string(got));
            std::vector<std::string> m_exprs = {m_expr1};
            if (expr2_opt->count() > 0) m_exprs.push_back(m_expr2);
            if (!m_algebra.empty() && m_op != "reduce")
                throw DomainError(
                    "--algebra applies only to the reduce operation");

            if (m_alg == "bt") {
                if (m_op == "dot" || m_op == "theta-inv" || m_op == "reduce")
                    throw DomainError("operation " + m_op +
                                      " is not defined for --alg bt");
                std::vector<BinElem> vals;
                for (const std::string& ex : m_exprs)
                    vals.push_back(eval_expression(ex, binary_expr()));
                int letters = 0;
                for (const BinElem& v : vals)
                    letters = std::max(letters, max_letter(v));
                if (m_op == "prec")
                    return emit_elem(bt_prec(vals[0], vals[1]), m_op, m_alg,
                                     m_plain, out);
                if (m_op == "succ")
                    return emit_elem(bt_succ(vals[0], vals[1]), m_op, m_alg,
                                     m_plain, out);
                if (m_op == "star")
                    return emit_elem(bt_star(vals[0], vals[1]), m_op, m_alg,
                                     m_plain, out);
                if (m_op == "theta")
                    return emit_elem(theta(vals[0]), m_op, m_alg, m_plain,
                                     out);
                const Braiding sigma =
                    braiding_for(m_braiding, m_dim, letters);
                BinaryHopf hopf(sigma);
                if (m_op == "coproduct")
                    return emit_pair(hopf.coproduct(vals[0]), m_op, m_alg,
                                     m_plain, out);
                return emit_elem(hopf.antipode(vals[0]), m_op, m_alg, m_plain,
                                 out);
            }

            if (m_alg == "rt") {
                if (m_op == "prec" || m_op == "succ" || m_op == "dot" ||
                    m_op == "theta" || m_op == "reduce")
                    throw DomainError("operation " + m_op +
                                      " is not defined for --alg rt");
                std::vector<ForestElem> vals;
                for (const std::string& ex : m_exprs)
                    vals.push_back(eval_expression(ex, forest_expr()));
                int letters = 0;
                for (const ForestElem& v : vals)
                    letters = std::max(letters, max_letter(v));
                if (m_op == "star")
                    return emit_elem(forest_concat(vals[0], vals[1]), m_op,
                                     m_alg, m_plain, out);
                if (m_op == "theta-inv")
                    return emit_elem(theta_inverse(vals[0]), m_op, m_alg,
                                     m_plain, out);
                const Braiding sigma =
                    braiding_for(m_braiding, m_dim, letters);
                ForestHopf hopf(sigma);
                if (m_op == "coproduct")
                    return emit_pair(hopf.coproduct(vals[0]), m_op, m_alg,
                                     m_plain, out);
                return emit_elem(hopf.antipode(vals[0]), m_op, m_alg, m_plain,
                                 out);
            }

            // m_alg == "at"
            if (m_op == "theta" || m_op == "theta-inv")
                throw DomainError("operation " + m_op +
                                  " is not defined for --alg at");
            std::vector<AngElem> vals;
            for (const std::string& ex : m_exprs)
                vals.push_back(eval_expression(ex, angular_expr()));
            int letters = 0;
            for (const AngElem& v : vals)
                letters = std::max(letters, max_letter(v));
            if (m_op == "prec")
                return emit_elem(at_prec(vals[0], vals[1]), m_op, m_alg,
                                 m_plain, out);
            if (m_op == "succ")
                return emit_elem(at_succ(vals[0], vals[1]), m_op, m_alg,
                                 m_plain, out);
            if (m_op == "dot")
                return emit_elem(at_dot(vals[0], vals[1]), m_op, m_alg,
                                 m_plain, out);
            if (m_op == "star")
                return emit_elem(at_star(vals[0], vals[1]), m_op, m_alg,
                                 m_plain, out);
            if (m_op == "reduce") {
                if (!m_algebra.empty()) {
                    const AlgebraSpecData data = load_algebra_file(m_algebra);
                    if (letters > data.dim)
                        throw DomainError(
                            "expression letter e" + std::to_string(letters) +
                            " exceeds the algebra dimension " +
                            std::to_string(data.dim));
                    const FiniteAlgebra alg(data.dim, data.entries,
                                            data.sigma);
                    return emit_elem(reduce_mod_ideal(alg, vals[0]), m_op,
                                     m_alg, m_plain, out);
                }
                const Braiding sigma =
                    braiding_for(m_braiding, m_dim, letters);
                const FiniteAlgebra alg =
                    FiniteAlgebra::componentwise(sigma.dim(), sigma);
                return emit_elem(reduce_mod_ideal(alg, vals[0]), m_op, m_alg,
                                 m_plain, out);
            }
            const Braiding sigma = braiding_for(m_braiding, m_dim, letters);
            AngularHopf hopf(sigma);
            if (m_op == "coproduct")
                return emit_pair(hopf.coproduct(vals[0]), m_op, m_alg,
                                 m_plain, out);
            return emit_elem(hopf.antipode(vals[0]), m_op, m_alg, m_plain,
                             out);
        }

        // sequence
        if (s_name != "lush" && method_opt->count() > 0)
            throw DomainError("--method applies only to the lush sequence");
        if (s_upto > 5000) throw DomainError("--upto is capped at 5000");
        const int from = (s_name == "schroeder" || s_name == "a141200") ? 1
                                                                        : 0;
        const auto values_for = [&](const std::string& method) {
            std::vector<Int> v;
            for (int i = from; i <= s_upto; ++i) {
                if (s_name == "catalan")
                    v.push_back(catalan(i));
                else if (s_name == "schroeder")
                    v.push_back(schroeder_little(i));
                else if (s_name == "a141200")
                    v.push_back(a141200(i));
                else if (method == "recursion")
                    v.push_back(lush_count_recursive(i));
                else if (method == "closed")
                    v.push_back(lush_count_closed(i));
                else
                    v.push_back(
                        Int(static_cast<long long>(lush_shapes(i).size())));
            }
            return v;
        };
        if (s_name == "lush" && s_method == "all") {
            const std::vector<Int> rec = values_for("recursion");
            const std::vector<Int> closed = values_for("closed");
            const std::vector<Int> enumerated = values_for("enumeration");
            const bool agree = rec == closed && closed == enumerated;
            if (s_plain) {
                out << "recursion: " << join_values(rec) << "\n";
                out << "closed: " << join_values(closed) << "\n";
                out << "enumeration: " << join_values(enumerated) << "\n";
            } else {
                nlohmann::ordered_json j;
                j["name"] = s_name;
                j["from"] = from;
                j["upto"] = s_upto;
                nlohmann::ordered_json methods;
                methods["recursion"] = values_json(rec);
                methods["closed"] = values_json(closed);
                methods["enumeration"] = values_json(enumerated);
                j["methods"] = methods;
                j["agree"] = agree;
                out << j.dump(2) << "\n";
            }
            return agree ? 0 : 1;
        }
        const std::vector<Int> values = values_for(s_method);
        if (s_plain) {
            out << join_values(values) << "\n";
            return 0;
        }
        nlohmann::ordered_json j;
        j["name"] = s_name;
        j["from"] = from;
        j["upto"] = s_upto;
        if (s_name == "lush") j["method"] = s_method;
        j["values"] = values_json(values);
        out << j.dump(2) << "\n";
        return 0;
    } catch (const LimitError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace braidtrees
