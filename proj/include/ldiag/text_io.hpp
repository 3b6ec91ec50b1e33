#ifndef LDIAG_TEXT_IO_HPP
#define LDIAG_TEXT_IO_HPP

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "deform_poly.hpp"
#include "diagram.hpp"
#include "linear_combination.hpp"
#include "polyzeta.hpp"
#include "weight_matrix.hpp"

// Text formats:
//   matrix       "1 0; 0 2", the empty diagram is "e"
//   polynomial   "1 + 2*qc - qc*qs^2", zero is "0"
//   sums         one "<poly> :: <matrix>" line per term, in term order
//   tensors      "<poly> :: <matrix> (x) <matrix>"
//   compositions "2,3", the empty word is "e"
namespace ldiag {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <class Int>
Int parse_uint(std::string_view tok, const char* what) {
    Int v{};
    if (tok.empty()) throw Error(Errc::parse_error, std::string("empty ") + what);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(Errc::parse_error, std::string("bad ") + what + " '" + std::string(tok) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
    std::vector<std::string_view> parts;
    std::size_t pos;
    while ((pos = s.find(sep)) != std::string_view::npos) {
        parts.push_back(s.substr(0, pos));
        s.remove_prefix(pos + sep.size());
    }
    parts.push_back(s);
    return parts;
}

} // namespace detail

inline std::string format_matrix(const WeightMatrix& d) {
    if (d.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        if (i > 0) out += "; ";
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (j > 0) out += ' ';
            out += std::to_string(d(i, j));
        }
    }
    return out;
}

inline WeightMatrix parse_matrix(std::string_view text) {
    text = detail::trim(text);
    if (text == "e") return {};
    if (text.empty()) throw Error(Errc::parse_error, "empty matrix text (use 'e' for the empty diagram)");
    std::vector<std::vector<Entry>> grid;
    for (auto row : detail::split(text, ";")) {
        std::vector<Entry> r;
        std::istringstream in{std::string(row)};
        std::string tok;
        while (in >> tok) r.push_back(detail::parse_uint<Entry>(tok, "matrix entry"));
        if (r.empty()) throw Error(Errc::parse_error, "empty row in '" + std::string(text) + "'");
        grid.push_back(std::move(r));
    }
    return WeightMatrix::from_rows(grid);
}

inline std::string format_poly(const DeformPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        const std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string vars;
        auto var = [&](const char* name, std::uint32_t k) {
            if (k == 0) return;
            if (!vars.empty()) vars += '*';
            vars += name;
            if (k > 1) vars += "^" + std::to_string(k);
        };
        var("qc", e.qc);
        var("qs", e.qs);
        if (vars.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += vars;
        else
            out += std::to_string(mag) + "*" + vars;
    }
    return out;
}

inline DeformPoly parse_poly(std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) throw Error(Errc::parse_error, "empty polynomial");
    DeformPoly p;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        std::int64_t sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (first && s[pos] == '+') throw Error(Errc::parse_error, "leading '+'");
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw Error(Errc::parse_error, "expected '+' or '-' in '" + s + "'");
        }
        first = false;
        std::size_t end = s.find_first_of("+-", pos);
        if (end == std::string::npos) end = s.size();
        const std::string_view term(s.data() + pos, end - pos);
        pos = end;
        if (term.empty()) throw Error(Errc::parse_error, "missing term in '" + s + "'");

        std::int64_t coeff = 1;
        Exponent e;
        bool have_factor = false;
        for (auto factor : detail::split(term, "*")) {
            if (factor.empty()) throw Error(Errc::parse_error, "empty factor in '" + s + "'");
            if (std::isdigit(static_cast<unsigned char>(factor.front()))) {
                if (have_factor) throw Error(Errc::parse_error, "coefficient must come first");
                coeff = detail::checked_mul(coeff, detail::parse_uint<std::int64_t>(factor, "coefficient"));
            } else {
                std::uint32_t k = 1;
                std::string_view name = factor;
                if (auto caret = factor.find('^'); caret != std::string_view::npos) {
                    name = factor.substr(0, caret);
                    k = detail::parse_uint<std::uint32_t>(factor.substr(caret + 1), "exponent");
                }
                if (name == "qc")
                    e.qc = detail::checked_exp_add(e.qc, k);
                else if (name == "qs")
                    e.qs = detail::checked_exp_add(e.qs, k);
                else
                    throw Error(Errc::parse_error, "unknown variable '" + std::string(name) + "'");
            }
            have_factor = true;
        }
        p.add_term(e, detail::checked_mul(sign, coeff));
    }
    return p;
}

inline std::string format_sum(const DiagramSum& x) {
    if (x.is_zero()) return "0\n";
    std::string out;
    for (const auto& [d, c] : x) out += format_poly(c) + " :: " + format_matrix(d) + "\n";
    return out;
}

inline DiagramSum parse_sum(std::string_view text) {
    DiagramSum x;
    if (detail::trim(text) == "0") return x;
    for (auto line : detail::split(text, "\n")) {
        if (detail::trim(line).empty()) continue;
        auto parts = detail::split(line, " :: ");
        if (parts.size() != 2) throw Error(Errc::parse_error, "expected '<poly> :: <matrix>'");
        x.add_term(parse_matrix(parts[1]), parse_poly(parts[0]));
    }
    return x;
}

inline std::string format_tensor_sum(const TensorSum& x) {
    if (x.is_zero()) return "0\n";
    std::string out;
    for (const auto& [pr, c] : x)
        out += format_poly(c) + " :: " + format_matrix(pr.first) + " (x) " + format_matrix(pr.second) + "\n";
    return out;
}

inline std::string format_composition(const Composition& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(w.parts()[k]);
    }
    return out;
}

inline Composition parse_composition(std::string_view text) {
    text = detail::trim(text);
    if (text == "e") return {};
    std::vector<std::uint64_t> parts;
    for (auto tok : detail::split(text, ",")) {
        const auto v = detail::parse_uint<std::uint64_t>(detail::trim(tok), "composition part");
        if (v == 0) throw Error(Errc::parse_error, "composition parts must be positive");
        parts.push_back(v);
    }
    return Composition(std::move(parts));
}

inline std::string format_composition_sum(const CompositionSum& x) {
    if (x.is_zero()) return "0\n";
    std::string out;
    for (const auto& [w, c] : x) out += std::to_string(c) + " :: " + format_composition(w) + "\n";
    return out;
}

inline std::string format_monomial(const Monomial& m) {
    std::string out;
    auto emit = [&](char var, const auto& counts) {
        for (auto [deg, n] : counts) {
            if (!out.empty()) out += '*';
            out += var + std::to_string(deg);
            if (n > 1) out += "^" + std::to_string(n);
        }
    };
    emit('L', m.alpha);
    emit('V', m.beta);
    return out.empty() ? "1" : out;
}

} // namespace ldiag

#endif
