#ifndef LDIAG_MQSYM_ORACLE_HPP
#define LDIAG_MQSYM_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "linear_combination.hpp"
#include "weight_matrix.hpp"

namespace ldiag {

/// Product of packed matrices in MQSym, computed independently of the
/// placement machinery: every packed C with rows(A) + rows(B) rows whose top
/// block repacks to A and whose bottom block repacks to B, coefficient 1.
///
/// C is determined by the column positions S_A, S_B ⊆ [0, r) holding the
/// columns of A and of B; S_A ∪ S_B must cover [0, r).
inline DiagramSum mqsym_oracle_product(const WeightMatrix& a, const WeightMatrix& b) {
    const std::size_t qa = a.cols(), qb = b.cols(), pa = a.rows(), pb = b.rows();
    if (qa + qb >= 64) throw Error(Errc::bound_exceeded, "too many columns for the oracle");
    DiagramSum out;
    for (std::size_t r = std::max(qa, qb); r <= qa + qb; ++r) {
        const std::uint64_t full = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
        for (std::uint64_t sa = 0; sa <= full; ++sa) {
            if (static_cast<std::size_t>(std::popcount(sa)) != qa) continue;
            for (std::uint64_t sb = 0; sb <= full; ++sb) {
                if (static_cast<std::size_t>(std::popcount(sb)) != qb || (sa | sb) != full) continue;
                std::vector<Entry> flat((pa + pb) * r, 0);
                std::size_t ka = 0, kb = 0;
                for (std::size_t col = 0; col < r; ++col) {
                    if ((sa >> col) & 1U) {
                        for (std::size_t i = 0; i < pa; ++i) flat[i * r + col] = a(i, ka);
                        ++ka;
                    }
                    if ((sb >> col) & 1U) {
                        for (std::size_t i = 0; i < pb; ++i) flat[(pa + i) * r + col] = b(i, kb);
                        ++kb;
                    }
                }
                out.add_term(WeightMatrix::from_flat(pa + pb, r, std::move(flat)), 1);
            }
        }
    }
    return out;
}

} // namespace ldiag

#endif
