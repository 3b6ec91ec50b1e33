#ifndef LDIAG_LINEAR_COMBINATION_HPP
#define LDIAG_LINEAR_COMBINATION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <type_traits>
#include <utility>

#include "deform_poly.hpp"
#include "weight_matrix.hpp"

namespace ldiag {

namespace detail {

inline bool coeff_is_zero(const DeformPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(std::int64_t c) { return c == 0; }

inline std::int64_t coeff_mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
inline DeformPoly coeff_mul(const DeformPoly& a, const DeformPoly& b) { return a * b; }

inline void coeff_add(std::int64_t& a, std::int64_t b) { a = checked_add(a, b); }
inline void coeff_add(DeformPoly& a, const DeformPoly& b) { a += b; }

} // namespace detail

/// Finite formal linear combination of basis keys with coefficients in a
/// commutative ring. Keys iterate in their natural order; zero coefficients
/// are dropped on every update, so the stored map is always normalized.
template <class Key, class Coeff = DeformPoly>
class LinearCombination {
public:
    using key_type = Key;
    using coeff_type = Coeff;
    using Terms = std::map<Key, Coeff>;

    LinearCombination() = default;

    static LinearCombination basis(Key k, Coeff c = Coeff(1)) {
        LinearCombination s;
        s.add_term(std::move(k), c);
        return s;
    }

    const Terms& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coeff coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    void add_term(const Key& k, const Coeff& c) {
        if (detail::coeff_is_zero(c)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        detail::coeff_add(it->second, c);
        if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, detail::coeff_mul(c, Coeff(-1)));
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(const LinearCombination& a) { return LinearCombination{} - a; }

    friend LinearCombination operator*(const Coeff& s, const LinearCombination& x) {
        LinearCombination r;
        for (const auto& [k, c] : x.terms_) r.add_term(k, detail::coeff_mul(s, c));
        return r;
    }

    // Applies f to every coefficient and renormalizes.
    template <class F>
    LinearCombination map_coefficients(F&& f) const {
        LinearCombination r;
        for (const auto& [k, c] : terms_) r.add_term(k, f(c));
        return r;
    }

    // Linear extension of a key-level map into another combination type.
    template <class Out, class F>
    Out map_linear(F&& f) const {
        Out r;
        for (const auto& [k, c] : terms_)
            for (const auto& [k2, c2] : f(k)) r.add_term(k2, detail::coeff_mul(c, c2));
        return r;
    }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    Terms terms_;
};

using DiagramSum = LinearCombination<WeightMatrix>;
using DiagramPair = std::pair<WeightMatrix, WeightMatrix>;
using TensorSum = LinearCombination<DiagramPair>;
using DiagramTriple = std::tuple<WeightMatrix, WeightMatrix, WeightMatrix>;
using TripleTensorSum = LinearCombination<DiagramTriple>;

/// Σ coeff_x(d)·coeff_y(e)·f(d, e) for a basis-level bilinear map f.
template <class Sum, class F>
auto bilinear_extend(F&& f, const Sum& x, const Sum& y) {
    using Out = std::decay_t<decltype(f(x.begin()->first, y.begin()->first))>;
    Out r;
    for (const auto& [d, cd] : x)
        for (const auto& [e, ce] : y) {
            const auto coeff = detail::coeff_mul(cd, ce);
            for (const auto& [k, c] : f(d, e)) r.add_term(k, detail::coeff_mul(coeff, c));
        }
    return r;
}

inline DiagramSum diagram(const WeightMatrix& d, DeformPoly c = 1) { return DiagramSum::basis(d, std::move(c)); }

// Evaluates every coefficient at (qc0, qs0), keeping the result as constants.
template <class Key>
LinearCombination<Key> specialize(const LinearCombination<Key>& x, std::int64_t qc0, std::int64_t qs0) {
    return x.map_coefficients([&](const DeformPoly& c) { return DeformPoly(c.eval(qc0, qs0)); });
}

// Swaps the tensor factors.
inline TensorSum flip(const TensorSum& x) {
    TensorSum r;
    for (const auto& [k, c] : x) r.add_term({k.second, k.first}, c);
    return r;
}

} // namespace ldiag

#endif
