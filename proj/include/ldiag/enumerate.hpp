#ifndef LDIAG_ENUMERATE_HPP
#define LDIAG_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "weight_matrix.hpp"

namespace ldiag {

inline constexpr std::size_t default_enumeration_bound = 5;

namespace detail {

struct PackedFiller {
    std::size_t p, q;
    std::vector<Entry> cells;
    std::vector<std::uint64_t> col_sums;
    std::vector<WeightMatrix>* out;

    // Fills cells row-major; prunes when the remaining weight cannot cover the
    // rows that are still empty.
    void fill(std::size_t cell, Entry remaining, std::uint64_t row_sum) {
        const std::size_t i = cell / q, j = cell % q;
        if (cell == p * q) {
            if (remaining != 0) return;
            for (auto s : col_sums)
                if (s == 0) return;
            out->push_back(WeightMatrix::from_flat(p, q, cells));
            return;
        }
        const std::size_t rows_after = p - i - 1;
        const bool last_in_row = j + 1 == q;
        for (Entry v = 0; v <= remaining; ++v) {
            const std::uint64_t rs = row_sum + v;
            if (last_in_row && rs == 0) continue;
            if (remaining - v < rows_after) break;
            cells[cell] = v;
            col_sums[j] += v;
            fill(cell + 1, remaining - v, last_in_row ? 0 : rs);
            col_sums[j] -= v;
        }
        cells[cell] = 0;
    }
};

} // namespace detail

/// All packed matrices of total weight n, each once, in term order.
/// Throws Errc::bound_exceeded when n > bound.
inline std::vector<WeightMatrix> enumerate_by_weight(std::size_t n, std::size_t bound = default_enumeration_bound) {
    if (n > bound) throw Error(Errc::bound_exceeded, "weight " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    std::vector<WeightMatrix> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (std::size_t p = 1; p <= n; ++p)
        for (std::size_t q = 1; q <= n; ++q) {
            detail::PackedFiller f{p, q, std::vector<Entry>(p * q, 0), std::vector<std::uint64_t>(q, 0), &out};
            f.fill(0, static_cast<Entry>(n), 0);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Every diagram of weight 0..max_weight, in term order.
inline std::vector<WeightMatrix> deck_up_to(std::size_t max_weight, std::size_t bound = default_enumeration_bound) {
    std::vector<WeightMatrix> deck;
    for (std::size_t n = 0; n <= max_weight; ++n) {
        auto layer = enumerate_by_weight(n, bound);
        deck.insert(deck.end(), layer.begin(), layer.end());
    }
    return deck;
}

} // namespace ldiag

#endif
