#ifndef LDIAG_TOOLS_CLI_HPP
#define LDIAG_TOOLS_CLI_HPP

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ldiag.hpp"
#include "ldiag/json_io.hpp"

namespace ldiag::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

inline constexpr const char* max_weight_env = "LDIAG_MAX_WEIGHT";

struct Options {
    std::string format = "text";
    std::optional<std::string> structure;
    std::optional<std::int64_t> qc, qs;
    std::optional<int> t;
    std::string variant = "black";
    std::size_t max_weight = 3;
    std::uint64_t n_terms = 1000;
    bool n_given = false;
    std::vector<std::string> inputs;
};

namespace detail {

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    // "-" pulls the next line from stdin.
    std::string resolve(const std::string& arg) {
        if (arg != "-") return arg;
        std::string line;
        if (!std::getline(in_, line)) throw Error(Errc::parse_error, "no more input on stdin");
        return line;
    }

private:
    std::istream& in_;
};

inline HopfStructure structure_of(const Options& o) {
    HopfStructure h = HopfStructure::ldiag();
    if (o.structure == "mqsym") h = HopfStructure::mqsym();
    std::int64_t qc = o.qc.value_or(h.qc), qs = o.qs.value_or(h.qs);
    int t = o.t.value_or(h.t);
    return HopfStructure::make(qc, qs, t,
                               o.variant == "white" ? CoproductVariant::white_split : CoproductVariant::black_split);
}

inline std::size_t enumeration_bound() {
    const char* env = std::getenv(max_weight_env);
    if (env == nullptr) return default_enumeration_bound;
    return ldiag::detail::parse_uint<std::size_t>(env, max_weight_env);
}

inline void emit_sum(std::ostream& out, const Options& o, const DiagramSum& s) {
    if (o.format == "json")
        out << to_json(s).dump() << "\n";
    else
        out << format_sum(s);
}

inline void emit_tensor(std::ostream& out, const Options& o, const TensorSum& s) {
    if (o.format == "json")
        out << to_json(s).dump() << "\n";
    else
        out << format_tensor_sum(s);
}

inline void emit_matrices(std::ostream& out, const Options& o, const std::vector<WeightMatrix>& ms) {
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& m : ms) arr.push_back(to_json(m));
        out << arr.dump() << "\n";
        return;
    }
    for (const auto& m : ms) out << format_matrix(m) << "\n";
}

inline std::string fixed6(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << v;
    return s.str();
}

inline std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << v;
    return s.str();
}

inline int dispatch(const std::string& verb, const Options& o, std::istream& in, std::ostream& out) {
    Reader rd(in);
    auto matrix = [&](std::size_t k) { return parse_matrix(rd.resolve(o.inputs.at(k))); };
    auto composition = [&](std::size_t k) { return parse_composition(rd.resolve(o.inputs.at(k))); };

    if (verb == "product") {
        const auto a = matrix(0), b = matrix(1);
        DiagramSum s = deformed_product(a, b);
        if (o.structure || o.qc || o.qs) {
            const auto h = structure_of(o);
            s = specialize(s, h.qc, h.qs);
        }
        emit_sum(out, o, s);
    } else if (verb == "concat") {
        const auto a = matrix(0), b = matrix(1);
        emit_matrices(out, o, {concat(a, b)});
    } else if (verb == "coproduct") {
        emit_tensor(out, o, coproduct(matrix(0), structure_of(o)));
    } else if (verb == "antipode") {
        emit_sum(out, o, antipode(matrix(0), structure_of(o)));
    } else if (verb == "verify") {
        const auto h = structure_of(o);
        const auto rep = verify_hopf_axioms(deck_up_to(o.max_weight, enumeration_bound()), h);
        if (o.format == "text") {
            out << "structure " << h.name() << (rep.verified_structure ? "" : " (unverified)") << ", deck "
                << rep.deck_size << "\n";
            for (const auto& c : rep.checks) {
                out << c.name << ": " << (c.passed ? "pass" : "fail") << (c.informational ? " (informational)" : "");
                for (const auto& d : c.counterexample) out << " [" << format_matrix(d) << "]";
                out << "\n";
            }
        } else {
            out << to_json(rep).dump() << "\n";
        }
        return rep.all_passed() ? ok : failure;
    } else if (verb == "enumerate") {
        const auto n = ldiag::detail::parse_uint<std::size_t>(o.inputs.at(0), "weight");
        emit_matrices(out, o, enumerate_by_weight(n, enumeration_bound()));
    } else if (verb == "factor") {
        emit_matrices(out, o, factor_irreducibles(matrix(0)));
    } else if (verb == "monomial") {
        const auto m = monomial_of(matrix(0));
        out << (o.format == "json" ? to_json(m).dump() : format_monomial(m)) << "\n";
    } else if (verb == "unlabel") {
        emit_matrices(out, o, {canonical_unlabel(matrix(0)).canon()});
    } else if (verb == "stuffle") {
        const auto u = composition(0), v = composition(1);
        const auto s = quasi_shuffle(u, v);
        if (o.format == "json") {
            json j = {{"product", to_json(s)}};
            if (o.n_given) j["residual"] = stuffle_residual(u, v, o.n_terms);
            out << j.dump() << "\n";
        } else {
            out << format_composition_sum(s);
            if (o.n_given) out << "residual N=" << o.n_terms << ": " << sci(stuffle_residual(u, v, o.n_terms)) << "\n";
        }
    } else if (verb == "mzv") {
        const auto s = composition(0);
        const double v = mzv_truncated(s, o.n_terms);
        if (o.format == "json")
            out << json{{"composition", s.parts()}, {"N", o.n_terms}, {"value", v}}.dump() << "\n";
        else
            out << fixed6(v) << "\n";
    } else if (verb == "oracle-compare") {
        const auto a = matrix(0), b = matrix(1);
        const DiagramSum at_one = specialize(deformed_product(a, b), 1, 1);
        const bool mq = at_one == mqsym_oracle_product(a, b);
        const bool qsh =
            black_weight_projection(at_one) == quasi_shuffle(black_weight_word(a), black_weight_word(b));
        if (o.format == "json")
            out << json{{"terms", at_one.size()}, {"mqsym_match", mq}, {"quasi_shuffle_match", qsh}}.dump() << "\n";
        else
            out << "terms: " << at_one.size() << "\nmqsym: " << (mq ? "match" : "MISMATCH")
                << "\nquasi-shuffle: " << (qsh ? "match" : "MISMATCH") << "\n";
        return mq && qsh ? ok : failure;
    }
    return ok;
}

} // namespace detail

/// Parses argv-style arguments (without the program name) and runs one verb.
/// Exit status: 0 success, 1 computation-level failure, 2 usage or parse error.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for labelled Feynman-like diagrams and their deformed Hopf algebra", "ldiag"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        return sub;
    };
    auto hopf_opts = [&](CLI::App* sub) {
        sub->add_option("--structure", o.structure, "ldiag = (0,0,0), mqsym = (1,1,1)")
            ->check(CLI::IsMember({"ldiag", "mqsym"}));
        sub->add_option("--qc", o.qc, "Override the qc specialization");
        sub->add_option("--qs", o.qs, "Override the qs specialization");
        sub->add_option("--t", o.t, "Override the coproduct selector (0 or 1)");
        sub->add_option("--variant", o.variant, "t = 0 coproduct: split black or white spots")
            ->check(CLI::IsMember({"black", "white"}));
        return sub;
    };
    auto inputs = [&](CLI::App* sub, std::size_t n, const std::string& what) {
        sub->add_option("inputs", o.inputs, what)->required()->expected(static_cast<int>(n));
        return sub;
    };
    auto n_opt = [&](CLI::App* sub) {
        sub->add_option("--N", o.n_terms, "Truncation point of Euler-Zagier sums")->check(CLI::PositiveNumber);
        return sub;
    };

    const std::string mtext = "Matrix text such as \"1 0; 0 2\" (\"e\" = empty, \"-\" = stdin)";
    inputs(hopf_opts(common(app.add_subcommand("product", "Deformed product of two diagrams"))), 2, mtext);
    inputs(common(app.add_subcommand("concat", "Concatenation [d1|d2]")), 2, mtext);
    inputs(hopf_opts(common(app.add_subcommand("coproduct", "Coproduct under a structure"))), 1, mtext);
    inputs(hopf_opts(common(app.add_subcommand("antipode", "Antipode under a verified structure"))), 1, mtext);
    auto* verify = hopf_opts(app.add_subcommand("verify", "Check the Hopf axioms on a weight-bounded deck"));
    verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--max-weight", o.max_weight, "Deck weight bound");
    inputs(common(app.add_subcommand("enumerate", "All packed matrices of a given total weight")), 1, "Weight");
    inputs(common(app.add_subcommand("factor", "Factorization into concat-irreducibles")), 1, mtext);
    inputs(common(app.add_subcommand("monomial", "White/black spot type monomial")), 1, mtext);
    inputs(common(app.add_subcommand("unlabel", "Canonical unlabelled representative")), 1, mtext);
    inputs(n_opt(common(app.add_subcommand("stuffle", "Quasi-shuffle of two compositions"))), 2,
           "Compositions such as 2,3");
    inputs(n_opt(common(app.add_subcommand("mzv", "Truncated Euler-Zagier sum"))), 1, "Composition such as 2,3");
    inputs(common(app.add_subcommand("oracle-compare", "Compare the (1,1) product with the MQSym and quasi-shuffle oracles")),
           2, mtext);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    const bool verify_called = !args.empty() && args.front() == "verify";
    if (verify_called) o.format = "json";
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage;
    }
    for (auto* sub : app.get_subcommands())
        if (sub->get_name() == "stuffle" || sub->get_name() == "mzv")
            o.n_given = sub->count("--N") > 0;

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        return detail::dispatch(verb, o, in, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::overflow ? failure : usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }
}

} // namespace ldiag::cli

#endif
