#ifndef LDIAG_DIAGRAM_HPP
#define LDIAG_DIAGRAM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "weight_matrix.hpp"

namespace ldiag {

inline WeightMatrix validate(const std::vector<std::vector<Entry>>& grid) { return WeightMatrix::from_rows(grid); }

/// Unlabelled diagram: the orbit of a labelled diagram under independent
/// permutations of its rows (white spots) and columns (black spots),
/// represented by the orbit member with the smallest row-major flattening.
class UnlabelledDiagram {
public:
    const WeightMatrix& canon() const noexcept { return canon_; }

    friend bool operator==(const UnlabelledDiagram&, const UnlabelledDiagram&) = default;
    friend auto operator<=>(const UnlabelledDiagram& a, const UnlabelledDiagram& b) { return a.canon_ <=> b.canon_; }

private:
    explicit UnlabelledDiagram(WeightMatrix m) : canon_(std::move(m)) {}
    friend UnlabelledDiagram canonical_unlabel(const WeightMatrix& d);

    WeightMatrix canon_;
};

// For a fixed column order the row-minimal flattening is obtained by sorting
// rows, so only the column permutations are enumerated.
inline UnlabelledDiagram canonical_unlabel(const WeightMatrix& d) {
    if (d.empty()) return UnlabelledDiagram(d);
    const std::size_t p = d.rows(), q = d.cols();
    std::vector<std::size_t> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<Entry>> best;
    std::vector<std::vector<Entry>> rows(p, std::vector<Entry>(q));
    do {
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < q; ++j) rows[i][j] = d(i, perm[j]);
        std::sort(rows.begin(), rows.end());
        if (best.empty() || rows < best) best = rows;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return UnlabelledDiagram(WeightMatrix::from_rows(best));
}

inline UnlabelledDiagram concat(const UnlabelledDiagram& a, const UnlabelledDiagram& b) {
    return canonical_unlabel(concat(a.canon(), b.canon()));
}

// Commutative monomial L^alpha V^beta; alpha[i] (beta[i]) counts white (black)
// spots of degree i. Only nonzero counts are stored.
struct Monomial {
    std::map<std::uint64_t, std::uint64_t> alpha;
    std::map<std::uint64_t, std::uint64_t> beta;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend Monomial operator*(Monomial a, const Monomial& b) {
        for (auto [deg, n] : b.alpha) a.alpha[deg] += n;
        for (auto [deg, n] : b.beta) a.beta[deg] += n;
        return a;
    }
};

inline Monomial monomial_of(const WeightMatrix& d) {
    Monomial m;
    for (std::size_t i = 0; i < d.rows(); ++i) ++m.alpha[d.row_weight(i)];
    for (std::size_t j = 0; j < d.cols(); ++j) ++m.beta[d.col_weight(j)];
    return m;
}

inline Monomial monomial_of(const UnlabelledDiagram& d) { return monomial_of(d.canon()); }

// Unique factorization in the free monoid of labelled diagrams under concat.
inline std::vector<WeightMatrix> factor_irreducibles(const WeightMatrix& d) {
    std::vector<WeightMatrix> factors;
    WeightMatrix rest = d;
    while (!rest.empty()) {
        const std::size_t p = rest.rows(), q = rest.cols();
        // A split after column l exists iff the rows touching [0, l) form a
        // prefix [0, k) whose entries all stay inside [0, l).
        std::size_t split_rows = 0, split_cols = 0;
        for (std::size_t l = 1; l < q && split_cols == 0; ++l) {
            std::size_t k = 0;
            while (k < p) {
                bool touches_left = false;
                for (std::size_t j = 0; j < l; ++j) touches_left |= rest(k, j) != 0;
                if (!touches_left) break;
                ++k;
            }
            if (k == 0 || k == p) continue;
            bool ok = true;
            for (std::size_t i = 0; i < p && ok; ++i)
                for (std::size_t j = 0; j < q && ok; ++j)
                    if (rest(i, j) != 0 && ((i < k) != (j < l))) ok = false;
            if (ok) {
                split_rows = k;
                split_cols = l;
            }
        }
        if (split_cols == 0) {
            factors.push_back(rest);
            break;
        }
        std::vector<std::size_t> left_rows(split_rows), right_rows(p - split_rows);
        std::iota(left_rows.begin(), left_rows.end(), 0);
        std::iota(right_rows.begin(), right_rows.end(), split_rows);
        factors.push_back(restrict_rows(rest, left_rows));
        rest = restrict_rows(rest, right_rows);
    }
    return factors;
}

inline bool is_irreducible(const WeightMatrix& d) { return factor_irreducibles(d).size() == 1; }

} // namespace ldiag

#endif
