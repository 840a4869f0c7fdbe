/**
 * @file ratq.hpp
 * @brief Exact rational functions in q: reduced fractions of LaurentQ.
 *
 * Canonical form: numerator and denominator share no polynomial factor, the
 * denominator's lowest exponent is 0 and its lowest-exponent coefficient is 1.
 * With that convention equality is structural.
 */
#pragma once

#include "qt/laurent.hpp"

namespace qt {

class RatQ {
public:
    RatQ() : num_(), den_(LaurentQ::one()) {}
    explicit RatQ(const Rat& c) : num_(c), den_(LaurentQ::one()) {}
    explicit RatQ(long c) : num_(Rat(c)), den_(LaurentQ::one()) {}
    explicit RatQ(const LaurentQ& n) : num_(n), den_(LaurentQ::one()) {}
    RatQ(const LaurentQ& n, const LaurentQ& d) : num_(n), den_(d) {
        if (den_.is_zero()) throw std::domain_error("RatQ: zero denominator");
        normalize();
    }

    static RatQ one() { return RatQ(1); }
    static RatQ q_power(long e) { return RatQ(LaurentQ::q_power(e)); }

    /// Construct from a fraction already in lowest terms (no common
    /// polynomial factor); skips the gcd and only normalizes the unit, so the
    /// result is in the same canonical form as the reducing constructor.
    static RatQ from_reduced(const LaurentQ& n, const LaurentQ& d) {
        if (d.is_zero()) throw std::domain_error("RatQ: zero denominator");
        RatQ r;
        r.num_ = n;
        r.den_ = d;
        r.normalize_unit();
        return r;
    }

    const LaurentQ& num() const { return num_; }
    const LaurentQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatQ operator-() const {
        RatQ r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatQ operator+(const RatQ& a, const RatQ& b) {
        return RatQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatQ operator-(const RatQ& a, const RatQ& b) {
        return RatQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatQ operator*(const RatQ& a, const RatQ& b) {
        return RatQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatQ operator/(const RatQ& a, const RatQ& b) {
        if (b.is_zero()) throw std::domain_error("RatQ: division by zero");
        return RatQ(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
    RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
    RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
    RatQ& operator/=(const RatQ& o) { return *this = *this / o; }

    RatQ inverse() const {
        if (is_zero()) throw std::domain_error("RatQ: inverse of zero");
        return RatQ(den_, num_);
    }

    /// Multiply by the unit q^e.
    RatQ shifted(long e) const {
        RatQ r;
        r.num_ = num_.shifted(e);
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const RatQ& a, const RatQ& b) {
        // Canonical form makes structural comparison sound.
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentQ::one();
            return;
        }
        LaurentQ g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        normalize_unit();
    }

    void normalize_unit() {
        if (num_.is_zero()) {
            den_ = LaurentQ::one();
            return;
        }
        // Push the unit q^k and the lowest denominator coefficient into num.
        long sh = den_.lo_exp();
        Rat lead = den_.coeff(sh);
        den_ = den_.shifted(-sh).scaled(Rat(1) / lead);
        num_ = num_.shifted(-sh).scaled(Rat(1) / lead);
    }

    LaurentQ num_;
    LaurentQ den_;
};

}  // namespace qt
