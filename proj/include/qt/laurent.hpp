/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials in the formal variable q with
 *        arbitrary-precision rational coefficients.
 *
 * LaurentQ is the base coefficient ring for the whole library: a sparse map
 * from integer exponents of q to GMP rationals, kept in canonical form
 * (no stored coefficient is zero).  Arithmetic is exact; equality is
 * structural on the canonical form.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qt {

using Rat = mpq_class;

class LaurentQ {
public:
    LaurentQ() = default;

    /// Constant polynomial.
    explicit LaurentQ(const Rat& c) {
        if (c != 0) coeffs_[0] = c;
    }
    explicit LaurentQ(long c) : LaurentQ(Rat(c)) {}

    /// Monomial c * q^e.
    static LaurentQ monomial(const Rat& c, long e) {
        LaurentQ p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }
    static LaurentQ one() { return LaurentQ(Rat(1)); }
    static LaurentQ q_power(long e) { return monomial(Rat(1), e); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
               coeffs_.begin()->second == 1;
    }

    /// Lowest / highest stored exponents; only valid on nonzero polynomials.
    long lo_exp() const {
        require_nonzero("lo_exp");
        return coeffs_.begin()->first;
    }
    long hi_exp() const {
        require_nonzero("hi_exp");
        return coeffs_.rbegin()->first;
    }

    Rat coeff(long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    const std::map<long, Rat>& terms() const { return coeffs_; }

    void add_term(long e, const Rat& c) {
        if (c == 0) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    LaurentQ operator-() const {
        LaurentQ r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    LaurentQ& operator+=(const LaurentQ& o) {
        for (auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentQ& operator-=(const LaurentQ& o) {
        for (auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }

    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }

    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }

    /// Multiply by the unit q^e (exponent shift).
    LaurentQ shifted(long e) const {
        LaurentQ r;
        for (auto& [ex, c] : coeffs_) r.coeffs_[ex + e] = c;
        return r;
    }

    LaurentQ scaled(const Rat& c) const {
        LaurentQ r;
        if (c == 0) return r;
        for (auto& [e, co] : coeffs_) r.coeffs_[e] = co * c;
        return r;
    }

    friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentQ& a, const LaurentQ& b) {
        return !(a == b);
    }

    /// Exact division; throws if the remainder is nonzero or b == 0.
    friend LaurentQ exact_div(const LaurentQ& a, const LaurentQ& b);

    /// Monic gcd in Q[q] up to units q^k (lowest exponents normalized away).
    friend LaurentQ laurent_gcd(const LaurentQ& a, const LaurentQ& b);

    std::string to_string() const;

private:
    void require_nonzero(const char* who) const {
        if (coeffs_.empty())
            throw std::domain_error(std::string(who) + " on zero polynomial");
    }

    std::map<long, Rat> coeffs_;
};

}  // namespace qt
