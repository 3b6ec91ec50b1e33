#ifndef LDIAG_JSON_IO_HPP
#define LDIAG_JSON_IO_HPP

#include "json.hpp"

#include "deform_poly.hpp"
#include "diagram.hpp"
#include "hopf.hpp"
#include "linear_combination.hpp"
#include "polyzeta.hpp"
#include "weight_matrix.hpp"

// JSON renderings. Polynomials are arrays of {qc_exp, qs_exp, coeff};
// matrices are arrays of rows.
namespace ldiag {

using json = nlohmann::ordered_json;

inline json to_json(const WeightMatrix& d) {
    json rows = json::array();
    for (std::size_t i = 0; i < d.rows(); ++i) {
        auto r = d.row(i);
        rows.push_back(std::vector<Entry>(r.begin(), r.end()));
    }
    return rows;
}

inline WeightMatrix matrix_from_json(const json& j) {
    try {
        return WeightMatrix::from_rows(j.get<std::vector<std::vector<Entry>>>());
    } catch (const json::exception& ex) {
        throw Error(Errc::parse_error, ex.what());
    }
}

inline json to_json(const DeformPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"qc_exp", e.qc}, {"qs_exp", e.qs}, {"coeff", c}});
    return terms;
}

inline DeformPoly poly_from_json(const json& j) {
    try {
        DeformPoly p;
        for (const auto& t : j)
            p.add_term({t.at("qc_exp").get<std::uint32_t>(), t.at("qs_exp").get<std::uint32_t>()},
                       t.at("coeff").get<std::int64_t>());
        return p;
    } catch (const json::exception& ex) {
        throw Error(Errc::parse_error, ex.what());
    }
}

inline json to_json(const DiagramSum& x) {
    json terms = json::array();
    for (const auto& [d, c] : x) terms.push_back({{"matrix", to_json(d)}, {"coeff", to_json(c)}});
    return terms;
}

inline DiagramSum sum_from_json(const json& j) {
    DiagramSum x;
    for (const auto& t : j) {
        if (!t.contains("matrix") || !t.contains("coeff")) throw Error(Errc::parse_error, "term needs matrix and coeff");
        x.add_term(matrix_from_json(t["matrix"]), poly_from_json(t["coeff"]));
    }
    return x;
}

inline json to_json(const TensorSum& x) {
    json terms = json::array();
    for (const auto& [pr, c] : x)
        terms.push_back({{"left", to_json(pr.first)}, {"right", to_json(pr.second)}, {"coeff", to_json(c)}});
    return terms;
}

inline json to_json(const CompositionSum& x) {
    json terms = json::array();
    for (const auto& [w, c] : x) terms.push_back({{"word", w.parts()}, {"coeff", c}});
    return terms;
}

inline json to_json(const Monomial& m) {
    auto counts = [](const std::map<std::uint64_t, std::uint64_t>& mp) {
        json o = json::object();
        for (auto [deg, n] : mp) o[std::to_string(deg)] = n;
        return o;
    };
    return {{"alpha", counts(m.alpha)}, {"beta", counts(m.beta)}};
}

inline json to_json(const AxiomReport& r) {
    json axioms = json::array();
    for (const auto& c : r.checks) {
        json ce = json::array();
        for (const auto& d : c.counterexample) ce.push_back(to_json(d));
        axioms.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"informational", c.informational},
                          {"counterexample", c.passed ? json(nullptr) : ce}});
    }
    return {{"structure",
             {{"name", r.structure.name()},
              {"qc", r.structure.qc},
              {"qs", r.structure.qs},
              {"t", r.structure.t},
              {"variant", r.structure.variant == CoproductVariant::black_split ? "black-split" : "white-split"}}},
            {"verified_structure", r.verified_structure},
            {"deck_size", r.deck_size},
            {"all_passed", r.all_passed()},
            {"axioms", axioms}};
}

} // namespace ldiag

#endif
