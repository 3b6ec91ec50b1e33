#ifndef LDIAG_POLYZETA_HPP
#define LDIAG_POLYZETA_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "linear_combination.hpp"
#include "weight_matrix.hpp"

namespace ldiag {

// A word over the positive integers; letter i has weight i.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<std::uint64_t> parts) : Composition(std::vector<std::uint64_t>(parts)) {}
    explicit Composition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
        for (auto x : parts_)
            if (x == 0) throw Error(Errc::parse_error, "composition parts must be positive");
    }

    const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    std::uint64_t weight() const {
        std::uint64_t s = 0;
        for (auto x : parts_) s += x;
        return s;
    }

    Composition tail() const { return Composition(std::vector<std::uint64_t>(parts_.begin() + 1, parts_.end())); }
    Composition prepend(std::uint64_t letter) const {
        std::vector<std::uint64_t> v{letter};
        v.insert(v.end(), parts_.begin(), parts_.end());
        return Composition(std::move(v));
    }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<std::uint64_t> parts_;
};

using CompositionSum = LinearCombination<Composition, std::int64_t>;

/// Hoffman's quasi-shuffle:
///   (a·u) * (b·v) = a·(u * b·v) + b·(a·u * v) + (a+b)·(u * v),   ε * w = w * ε = w.
inline CompositionSum quasi_shuffle(const Composition& u, const Composition& v) {
    if (u.empty()) return CompositionSum::basis(v);
    if (v.empty()) return CompositionSum::basis(u);
    const std::uint64_t a = u.parts().front(), b = v.parts().front();
    CompositionSum r;
    for (const auto& [w, c] : quasi_shuffle(u.tail(), v)) r.add_term(w.prepend(a), c);
    for (const auto& [w, c] : quasi_shuffle(u, v.tail())) r.add_term(w.prepend(b), c);
    for (const auto& [w, c] : quasi_shuffle(u.tail(), v.tail())) r.add_term(w.prepend(a + b), c);
    return r;
}

inline CompositionSum quasi_shuffle(const CompositionSum& x, const CompositionSum& y) {
    return bilinear_extend([](const Composition& u, const Composition& v) { return quasi_shuffle(u, v); }, x, y);
}

// Column sums, left to right.
inline Composition black_weight_word(const WeightMatrix& d) {
    std::vector<std::uint64_t> w(d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j) w[j] = d.col_weight(j);
    return Composition(std::move(w));
}

/// Linear extension of black_weight_word. Coefficients must already be
/// specialized to integers (constant polynomials).
inline CompositionSum black_weight_projection(const DiagramSum& x) {
    CompositionSum r;
    for (const auto& [d, c] : x) {
        if (!c.is_constant()) throw Error(Errc::unverified_structure, "projection needs specialized coefficients");
        r.add_term(black_weight_word(d), c.constant_term());
    }
    return r;
}

/// Truncated Euler-Zagier sum Σ_{N >= n1 > n2 > ... > nk >= 1} Π n_i^{-s_i}.
/// The empty composition gives 1.
inline double mzv_truncated(const Composition& s, std::uint64_t n_max) {
    const std::size_t k = s.size();
    if (k == 0) return 1.0;
    // partial[n] holds the nested sum over the current suffix with its leading index <= n.
    std::vector<double> partial(n_max + 1, 0.0), next(n_max + 1, 0.0);
    for (std::uint64_t n = 1; n <= n_max; ++n)
        partial[n] = partial[n - 1] + std::pow(static_cast<double>(n), -static_cast<double>(s.parts()[k - 1]));
    for (std::size_t idx = k - 1; idx-- > 0;) {
        const double e = -static_cast<double>(s.parts()[idx]);
        next[0] = 0.0;
        for (std::uint64_t n = 1; n <= n_max; ++n)
            next[n] = next[n - 1] + std::pow(static_cast<double>(n), e) * partial[n - 1];
        std::swap(partial, next);
    }
    return partial[n_max];
}

/// |ζ_N(a)ζ_N(b) - ζ_N(a,b) - ζ_N(b,a) - ζ_N(a+b)|.
inline double stuffle_check(std::uint64_t a, std::uint64_t b, std::uint64_t n_max) {
    const double lhs = mzv_truncated({a}, n_max) * mzv_truncated({b}, n_max);
    const double rhs = mzv_truncated({a, b}, n_max) + mzv_truncated({b, a}, n_max) + mzv_truncated({a + b}, n_max);
    return std::abs(lhs - rhs);
}

/// Generalization to arbitrary words: |ζ_N(u)ζ_N(v) - Σ c_w ζ_N(w)| over the quasi-shuffle u * v.
inline double stuffle_residual(const Composition& u, const Composition& v, std::uint64_t n_max) {
    double rhs = 0.0;
    for (const auto& [w, c] : quasi_shuffle(u, v)) rhs += static_cast<double>(c) * mzv_truncated(w, n_max);
    return std::abs(mzv_truncated(u, n_max) * mzv_truncated(v, n_max) - rhs);
}

} // namespace ldiag

#endif
