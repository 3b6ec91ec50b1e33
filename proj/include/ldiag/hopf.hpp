#ifndef LDIAG_HOPF_HPP
#define LDIAG_HOPF_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linear_combination.hpp"
#include "product.hpp"
#include "weight_matrix.hpp"

namespace ldiag {

// Which spots the t = 0 coproduct splits into complementary subsets.
enum class CoproductVariant { black_split, white_split };

/// Selects the product specialization (qc, qs) and the coproduct (t).
/// (0,0,0) is the LDIAG structure and (1,1,1) the MQSym structure; every
/// other combination can be computed with but is reported as unverified.
struct HopfStructure {
    std::int64_t qc = 0;
    std::int64_t qs = 0;
    int t = 0;
    CoproductVariant variant = CoproductVariant::black_split;

    static HopfStructure make(std::int64_t qc, std::int64_t qs, int t,
                              CoproductVariant variant = CoproductVariant::black_split) {
        if (t != 0 && t != 1) throw Error(Errc::unverified_structure, "t must be 0 or 1");
        if (t == 1 && variant != CoproductVariant::black_split)
            throw Error(Errc::unverified_structure, "the white-split variant exists only for t = 0");
        return {qc, qs, t, variant};
    }
    static HopfStructure ldiag(CoproductVariant v = CoproductVariant::black_split) { return make(0, 0, 0, v); }
    static HopfStructure mqsym() { return make(1, 1, 1); }

    bool verified() const noexcept { return (qc == 0 && qs == 0 && t == 0) || (qc == 1 && qs == 1 && t == 1); }

    std::string name() const {
        std::string n = "(" + std::to_string(qc) + "," + std::to_string(qs) + "," + std::to_string(t) + ")";
        if (qc == 0 && qs == 0 && t == 0) n = "ldiag" + n;
        if (qc == 1 && qs == 1 && t == 1) n = "mqsym" + n;
        if (t == 0 && variant == CoproductVariant::white_split) n += "/white-split";
        return n;
    }

    friend bool operator==(const HopfStructure&, const HopfStructure&) = default;
};

namespace detail {

inline std::vector<std::size_t> bits_of(std::uint64_t mask, std::size_t n, bool value) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
        if (((mask >> k) & 1U) == static_cast<unsigned>(value)) idx.push_back(k);
    return idx;
}

} // namespace detail

/// Cocommutative coproduct: every split of the black spots (or white spots)
/// into a subset and its complement, each side restricted and repacked.
inline TensorSum coproduct_t0(const WeightMatrix& d, CoproductVariant variant = CoproductVariant::black_split) {
    const std::size_t n = variant == CoproductVariant::black_split ? d.cols() : d.rows();
    if (n >= 63) throw Error(Errc::bound_exceeded, "too many spots for subset enumeration");
    TensorSum r;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto in = detail::bits_of(mask, n, true), out = detail::bits_of(mask, n, false);
        if (variant == CoproductVariant::black_split)
            r.add_term({restrict_columns(d, in), restrict_columns(d, out)}, 1);
        else
            r.add_term({restrict_rows(d, in), restrict_rows(d, out)}, 1);
    }
    return r;
}

/// Deconcatenation of the black-spot sequence.
inline TensorSum coproduct_t1(const WeightMatrix& d) {
    TensorSum r;
    const std::size_t q = d.cols();
    for (std::size_t k = 0; k <= q; ++k) {
        std::vector<std::size_t> head(k), tail(q - k);
        for (std::size_t j = 0; j < k; ++j) head[j] = j;
        for (std::size_t j = k; j < q; ++j) tail[j - k] = j;
        r.add_term({restrict_columns(d, head), restrict_columns(d, tail)}, 1);
    }
    return r;
}

inline TensorSum coproduct(const WeightMatrix& d, const HopfStructure& h) {
    return h.t == 0 ? coproduct_t0(d, h.variant) : coproduct_t1(d);
}

inline TensorSum coproduct(const DiagramSum& x, const HopfStructure& h) {
    return x.map_linear<TensorSum>([&](const WeightMatrix& d) { return coproduct(d, h); });
}

inline DeformPoly counit(const DiagramSum& x) { return x.coefficient(WeightMatrix{}); }

inline DiagramSum product(const DiagramSum& x, const DiagramSum& y, const HopfStructure& h) {
    return specialized_product(x, y, h.qc, h.qs);
}

// Component-wise product (a⊗b)·(c⊗d) = (a·c)⊗(b·d).
inline TensorSum tensor_product(const TensorSum& x, const TensorSum& y, const HopfStructure& h) {
    return bilinear_extend(
        [&](const DiagramPair& u, const DiagramPair& v) {
            const auto left = product(diagram(u.first), diagram(v.first), h);
            const auto right = product(diagram(u.second), diagram(v.second), h);
            TensorSum r;
            for (const auto& [a, ca] : left)
                for (const auto& [b, cb] : right) r.add_term({a, b}, ca * cb);
            return r;
        },
        x, y);
}

/// Antipode by recursion on total weight, memoized per structure:
/// S(e) = e, S(d) = -d - Σ S(d')·d'' over coproduct terms with d', d'' nonempty.
class AntipodeSolver {
public:
    explicit AntipodeSolver(HopfStructure h) : h_(h) {}

    const DiagramSum& operator()(const WeightMatrix& d) {
        if (auto it = memo_.find(d); it != memo_.end()) return it->second;
        DiagramSum s;
        if (d.empty()) {
            s = diagram(d);
        } else {
            s = -diagram(d);
            for (const auto& [pair, c] : coproduct(d, h_)) {
                if (pair.first.empty() || pair.second.empty()) continue;
                s -= c * product((*this)(pair.first), diagram(pair.second), h_);
            }
        }
        return memo_.emplace(d, std::move(s)).first->second;
    }

    DiagramSum operator()(const DiagramSum& x) {
        DiagramSum r;
        for (const auto& [d, c] : x) r += c * (*this)(d);
        return r;
    }

    const HopfStructure& structure() const noexcept { return h_; }

private:
    HopfStructure h_;
    std::map<WeightMatrix, DiagramSum> memo_;
};

/// Throws Errc::unverified_structure unless h is one of the two verified structures.
inline DiagramSum antipode(const WeightMatrix& d, const HopfStructure& h) {
    if (!h.verified()) throw Error(Errc::unverified_structure, "antipode requested for " + h.name());
    AntipodeSolver s(h);
    return s(d);
}

struct AxiomCheck {
    std::string name;
    bool passed = true;
    bool informational = false;
    std::vector<WeightMatrix> counterexample; // empty when passed
};

struct AxiomReport {
    HopfStructure structure;
    bool verified_structure = false;
    std::size_t deck_size = 0;
    std::vector<AxiomCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.informational && !c.passed) return false;
        return true;
    }
    const AxiomCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline TripleTensorSum delta_left(const TensorSum& t, const HopfStructure& h) {
    TripleTensorSum r;
    for (const auto& [pr, c] : t)
        for (const auto& [inner, ci] : coproduct(pr.first, h))
            r.add_term({inner.first, inner.second, pr.second}, c * ci);
    return r;
}

inline TripleTensorSum delta_right(const TensorSum& t, const HopfStructure& h) {
    TripleTensorSum r;
    for (const auto& [pr, c] : t)
        for (const auto& [inner, ci] : coproduct(pr.second, h))
            r.add_term({pr.first, inner.first, inner.second}, c * ci);
    return r;
}

inline void record(AxiomCheck& check, bool ok, std::vector<WeightMatrix> witness) {
    if (ok || !check.passed) return;
    check.passed = false;
    check.counterexample = std::move(witness);
}

} // namespace detail

/// Exhaustive check of the Hopf axioms over a deck (single diagrams) and
/// over all ordered pairs from the deck (compatibility). Failures are
/// recorded with the first counterexample in deck order.
inline AxiomReport verify_hopf_axioms(const std::vector<WeightMatrix>& deck, const HopfStructure& h) {
    AxiomReport rep;
    rep.structure = h;
    rep.verified_structure = h.verified();
    rep.deck_size = deck.size();

    auto check = [](const char* name, bool informational = false) {
        AxiomCheck c;
        c.name = name;
        c.informational = informational;
        return c;
    };
    AxiomCheck coassoc = check("coassociativity"), counit_law = check("counit"), bialg = check("bialgebra"),
               anti_left = check("antipode_left"), anti_right = check("antipode_right"),
               cocomm = check("cocommutativity", true);
    AntipodeSolver solve(h);
    const WeightMatrix e;

    for (const auto& d : deck) {
        const TensorSum delta = coproduct(d, h);
        detail::record(coassoc, detail::delta_left(delta, h) == detail::delta_right(delta, h), {d});

        DiagramSum left_counit, right_counit;
        for (const auto& [pr, c] : delta) {
            if (pr.first.empty()) left_counit.add_term(pr.second, c);
            if (pr.second.empty()) right_counit.add_term(pr.first, c);
        }
        detail::record(counit_law, left_counit == diagram(d) && right_counit == diagram(d), {d});

        detail::record(cocomm, flip(delta) == delta, {d});

        DiagramSum sl, sr;
        for (const auto& [pr, c] : delta) {
            sl += c * product(solve(pr.first), diagram(pr.second), h);
            sr += c * product(diagram(pr.first), solve(pr.second), h);
        }
        const DiagramSum expected = diagram(e, counit(diagram(d)));
        detail::record(anti_left, sl == expected, {d});
        detail::record(anti_right, sr == expected, {d});
    }

    detail::record(bialg, coproduct(e, h) == TensorSum::basis({e, e}), {e});
    for (const auto& x : deck) {
        const TensorSum dx = coproduct(x, h);
        for (const auto& y : deck) {
            const DiagramSum xy = product(diagram(x), diagram(y), h);
            const bool ok = coproduct(xy, h) == tensor_product(dx, coproduct(y, h), h) &&
                            counit(xy) == counit(diagram(x)) * counit(diagram(y));
            detail::record(bialg, ok, {x, y});
            if (!bialg.passed) break;
        }
        if (!bialg.passed) break;
    }

    rep.checks = {coassoc, counit_law, bialg, anti_left, anti_right, cocomm};
    return rep;
}

} // namespace ldiag

#endif
