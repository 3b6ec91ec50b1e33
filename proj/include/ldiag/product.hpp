#ifndef LDIAG_PRODUCT_HPP
#define LDIAG_PRODUCT_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "deform_poly.hpp"
#include "linear_combination.hpp"
#include "weight_matrix.hpp"

namespace ldiag {

// One black spot of the product term: a column of the left factor, a column
// of the right factor, or a right column superposed on a left column.
struct Slot {
    enum class Kind { left, right, merged };
    Kind kind;
    std::size_t left = 0;  // column of d1 (left, merged)
    std::size_t right = 0; // column of d2 (right, merged)

    static Slot from_left(std::size_t i) { return {Kind::left, i, 0}; }
    static Slot from_right(std::size_t j) { return {Kind::right, 0, j}; }
    static Slot merge(std::size_t i, std::size_t j) { return {Kind::merged, i, j}; }

    bool has_left() const noexcept { return kind != Kind::right; }
    bool has_right() const noexcept { return kind != Kind::left; }

    friend bool operator==(const Slot&, const Slot&) = default;
};

// An interleaving-with-merges of the column sequences of two diagrams.
using Placement = std::vector<Slot>;

// How a right-factor column is charged for crossing a left-factor column.
//   lines: w1 * w2, the number of line crossings (associative; the default)
//   spots: w2 per crossed black spot (kept to document that it is not associative)
enum class CrossingCount { lines, spots };

namespace detail {

inline void placements_rec(std::size_t i, std::size_t j, std::size_t q1, std::size_t q2, Placement& cur,
                           std::vector<Placement>& out) {
    if (i == q1 && j == q2) {
        out.push_back(cur);
        return;
    }
    if (i < q1) {
        cur.push_back(Slot::from_left(i));
        placements_rec(i + 1, j, q1, q2, cur, out);
        cur.pop_back();
    }
    if (j < q2) {
        cur.push_back(Slot::from_right(j));
        placements_rec(i, j + 1, q1, q2, cur, out);
        cur.pop_back();
    }
    if (i < q1 && j < q2) {
        cur.push_back(Slot::merge(i, j));
        placements_rec(i + 1, j + 1, q1, q2, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

inline std::vector<Placement> enumerate_placements(std::size_t q1, std::size_t q2) {
    std::vector<Placement> out;
    Placement cur;
    cur.reserve(q1 + q2);
    detail::placements_rec(0, 0, q1, q2, cur, out);
    return out;
}

inline std::vector<Placement> enumerate_placements(const WeightMatrix& d1, const WeightMatrix& d2) {
    return enumerate_placements(d1.cols(), d2.cols());
}

inline bool is_valid_placement(const Placement& pl, std::size_t q1, std::size_t q2) {
    std::size_t next_left = 0, next_right = 0;
    for (const Slot& s : pl) {
        if (s.has_left() && s.left != next_left++) return false;
        if (s.has_right() && s.right != next_right++) return false;
    }
    return next_left == q1 && next_right == q2;
}

/// The product term of one placement and its coefficient
/// qc^(crossing exponent) * qs^(sum over merges of w1 * w2).
///
/// Rows of d1 sit above rows of d2. A right column crosses every left column
/// whose slot is strictly later than its own; a merged right column does not
/// cross its host.
inline std::pair<WeightMatrix, DeformPoly> realize(const Placement& pl, const WeightMatrix& d1, const WeightMatrix& d2,
                                                   CrossingCount crossing = CrossingCount::lines) {
    if (!is_valid_placement(pl, d1.cols(), d2.cols()))
        throw Error(Errc::invalid_placement, "placement does not match the column counts");
    const std::size_t p1 = d1.rows(), p2 = d2.rows(), p = p1 + p2, q = pl.size();

    std::vector<std::uint64_t> w1(d1.cols()), w2(d2.cols());
    for (std::size_t i = 0; i < w1.size(); ++i) w1[i] = d1.col_weight(i);
    for (std::size_t j = 0; j < w2.size(); ++j) w2[j] = d2.col_weight(j);

    std::vector<Entry> flat(p * q, 0);
    std::uint64_t qc_exp = 0, qs_exp = 0;
    // Left-column weight (or count) in slots strictly after the current one.
    std::uint64_t left_after = 0;
    for (const Slot& s : pl)
        if (s.has_left()) left_after += crossing == CrossingCount::lines ? w1[s.left] : 1;

    for (std::size_t k = 0; k < q; ++k) {
        const Slot& s = pl[k];
        if (s.has_left()) {
            left_after -= crossing == CrossingCount::lines ? w1[s.left] : 1;
            for (std::size_t i = 0; i < p1; ++i) flat[i * q + k] = d1(i, s.left);
        }
        if (s.has_right()) {
            qc_exp += left_after * w2[s.right];
            for (std::size_t i = 0; i < p2; ++i) flat[(p1 + i) * q + k] = d2(i, s.right);
        }
        if (s.kind == Slot::Kind::merged) qs_exp += w1[s.left] * w2[s.right];
    }
    if (qc_exp > UINT32_MAX || qs_exp > UINT32_MAX) throw Error(Errc::overflow, "exponent overflow");
    return {WeightMatrix::from_flat(p, q, std::move(flat)),
            DeformPoly::monomial(static_cast<std::uint32_t>(qc_exp), static_cast<std::uint32_t>(qs_exp))};
}

/// Deformed product of two basis diagrams: the sum over all placements.
inline DiagramSum deformed_product(const WeightMatrix& d1, const WeightMatrix& d2,
                                   CrossingCount crossing = CrossingCount::lines) {
    DiagramSum r;
    for (const auto& pl : enumerate_placements(d1, d2)) {
        auto [m, c] = realize(pl, d1, d2, crossing);
        r.add_term(m, c);
    }
    return r;
}

inline DiagramSum deformed_product(const DiagramSum& x, const DiagramSum& y,
                                   CrossingCount crossing = CrossingCount::lines) {
    return bilinear_extend(
        [crossing](const WeightMatrix& a, const WeightMatrix& b) { return deformed_product(a, b, crossing); }, x, y);
}

// Product with coefficients evaluated at (qc0, qs0).
inline DiagramSum specialized_product(const DiagramSum& x, const DiagramSum& y, std::int64_t qc0, std::int64_t qs0) {
    return bilinear_extend(
        [&](const WeightMatrix& a, const WeightMatrix& b) { return specialize(deformed_product(a, b), qc0, qs0); }, x,
        y);
}

} // namespace ldiag

#endif
