#ifndef LDIAG_DEFORM_POLY_HPP
#define LDIAG_DEFORM_POLY_HPP

#include <compare>
#include <cstdint>
#include <map>

#include "error.hpp"

namespace ldiag {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "integer addition overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "integer multiplication overflow");
    return r;
}

inline std::uint32_t checked_exp_add(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "exponent overflow");
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, std::uint32_t e) {
    std::int64_t r = 1;
    for (std::uint32_t k = 0; k < e; ++k) r = checked_mul(r, base);
    return r;
}

} // namespace detail

// Exponent pair of qc^a qs^b. Ordered by total degree, then higher qc power first,
// so that "qc" prints before "qs" and "qc^2" before "qc*qs".
struct Exponent {
    std::uint32_t qc = 0;
    std::uint32_t qs = 0;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend std::strong_ordering operator<=>(const Exponent& x, const Exponent& y) {
        if (auto c = (std::uint64_t{x.qc} + x.qs) <=> (std::uint64_t{y.qc} + y.qs); c != 0) return c;
        return y.qc <=> x.qc;
    }
};

// Element of Z[qc, qs]. Zero coefficients are never stored.
class DeformPoly {
public:
    using Terms = std::map<Exponent, std::int64_t>;

    DeformPoly() = default;
    DeformPoly(std::int64_t c) { // NOLINT(google-explicit-constructor): integers embed in the ring
        if (c != 0) terms_[{}] = c;
    }

    static DeformPoly monomial(std::uint32_t qc_exp, std::uint32_t qs_exp, std::int64_t coeff = 1) {
        DeformPoly p;
        if (coeff != 0) p.terms_[{qc_exp, qs_exp}] = coeff;
        return p;
    }
    static DeformPoly qc() { return monomial(1, 0); }
    static DeformPoly qs() { return monomial(0, 1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{}); }
    std::int64_t constant_term() const {
        auto it = terms_.find({});
        return it == terms_.end() ? 0 : it->second;
    }
    std::int64_t coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(Exponent e, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (inserted) return;
        it->second = detail::checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }

    DeformPoly& operator+=(const DeformPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    DeformPoly& operator-=(const DeformPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
        return *this;
    }
    DeformPoly& operator*=(const DeformPoly& o) { return *this = *this * o; }

    friend DeformPoly operator+(DeformPoly a, const DeformPoly& b) { return a += b; }
    friend DeformPoly operator-(DeformPoly a, const DeformPoly& b) { return a -= b; }
    friend DeformPoly operator-(const DeformPoly& a) { return DeformPoly{} - a; }

    friend DeformPoly operator*(const DeformPoly& a, const DeformPoly& b) {
        DeformPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({detail::checked_exp_add(ea.qc, eb.qc), detail::checked_exp_add(ea.qs, eb.qs)},
                           detail::checked_mul(ca, cb));
        return r;
    }

    friend bool operator==(const DeformPoly&, const DeformPoly&) = default;

    // Exact evaluation at (qc, qs) = (qc0, qs0); 0^0 = 1.
    std::int64_t eval(std::int64_t qc0, std::int64_t qs0) const {
        std::int64_t s = 0;
        for (const auto& [e, c] : terms_)
            s = detail::checked_add(s, detail::checked_mul(c, detail::checked_mul(detail::checked_pow(qc0, e.qc),
                                                                                  detail::checked_pow(qs0, e.qs))));
        return s;
    }

private:
    Terms terms_;
};

inline std::int64_t poly_eval(const DeformPoly& x, std::int64_t qc0, std::int64_t qs0) { return x.eval(qc0, qs0); }

} // namespace ldiag

#endif
