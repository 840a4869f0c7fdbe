#include "qt/qseries.hpp"

#include <map>
#include <mutex>

namespace qt {

RatQ qpochhammer(long base_exponent, long z_power, long n) {
    if (base_exponent < 1)
        throw std::invalid_argument("qpochhammer: base_exponent must be >= 1");
    if (n >= 0) {
        // prod_{k=0}^{n-1} (1 - q^{z + k*base})
        LaurentQ p = LaurentQ::one();
        for (long k = 0; k < n; ++k) {
            LaurentQ f = LaurentQ::one();
            f.add_term(z_power + k * base_exponent, Rat(-1));
            p *= f;
        }
        return RatQ(p);
    }
    // (z;q)_{-m} = prod_{k=1}^{m} (1 - z q^{-k})^{-1}
    LaurentQ p = LaurentQ::one();
    for (long k = 1; k <= -n; ++k) {
        if (z_power - k * base_exponent == 0)
            throw std::domain_error("qpochhammer: pole (vanishing factor) in n<0 branch");
        LaurentQ f = LaurentQ::one();
        f.add_term(z_power - k * base_exponent, Rat(-1));
        p *= f;
    }
    return RatQ(LaurentQ::one(), p);
}

RatQ inv_qfactorial(long n, long base_exponent) {
    if (n < 0) return RatQ(0);
    static std::mutex mu;
    static std::map<std::pair<long, long>, RatQ> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, base_exponent);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    LaurentQ p = LaurentQ::one();
    for (long k = 1; k <= n; ++k) {
        LaurentQ f = LaurentQ::one();
        f.add_term(k * base_exponent, Rat(-1));
        p *= f;
    }
    RatQ r(LaurentQ::one(), p);
    cache.emplace(key, r);
    return r;
}

RatQ psi_series_coeff(long n, bool inverse, long base_exponent) {
    if (n < 0) throw std::invalid_argument("psi_series_coeff: n must be >= 0");
    long b = base_exponent;
    if (inverse) {
        // q^{b n^2} / (q^{2b}; q^{2b})_n
        return inv_qfactorial(n, 2 * b).shifted(b * n * n);
    }
    // (-q^b)^n / (q^{2b}; q^{2b})_n
    RatQ c = inv_qfactorial(n, 2 * b).shifted(b * n);
    return (n % 2 != 0) ? -c : c;
}

LaurentQ cyclotomic(long d) {
    static std::mutex mu;
    static std::vector<LaurentQ> cache{LaurentQ()};  // index 0 unused
    std::lock_guard<std::mutex> lock(mu);
    for (long m = static_cast<long>(cache.size()); m <= d; ++m) {
        LaurentQ p;
        p.add_term(m, Rat(1));
        p.add_term(0, Rat(-1));  // q^m - 1
        for (long e = 1; e < m; ++e)
            if (m % e == 0) p = exact_div(p, cache[static_cast<size_t>(e)]);
        cache.push_back(p);
    }
    return cache[static_cast<size_t>(d)];
}

namespace {

/// prod_{k=a}^{b} (1 - q^{2k})
LaurentQ pochhammer_range(long a, long b) {
    LaurentQ p = LaurentQ::one();
    for (long k = a; k <= b; ++k) {
        LaurentQ f = LaurentQ::one();
        f.add_term(2 * k, Rat(-1));
        p *= f;
    }
    return p;
}

RatQ duality_side(long r, long s, long t) {
    // 1/(q^2)_{s+t} * sum over n with n >= 0, t-n >= 0, n+r >= 0.
    // Build the sum as a single polynomial over the common denominator
    // (q^2)_t (q^2)_{t+r}:
    //   1/[(q^2)_n (q^2)_{t-n} (q^2)_{n+r}]
    //     = binom_{q^2}(t, n) * (q^{2(n+r+1)}; q^2)_{t-n} / [(q^2)_t (q^2)_{t+r}]
    // so each term of the numerator is polynomial and no per-term reduction
    // is needed.
    if (s + t < 0 || t < 0) return RatQ(0);
    LaurentQ num;
    for (long n = std::max(0L, -r); n <= t; ++n) {
        // Gaussian binomial (q^2)_t / ((q^2)_n (q^2)_{t-n})
        LaurentQ term = exact_div(pochhammer_range(t - n + 1, t),
                                  pochhammer_range(1, n));
        term *= pochhammer_range(n + r + 1, t + r);
        term = term.shifted(n * (n + 1 + 2 * s));
        if (n % 2 != 0) term = term.scaled(Rat(-1));
        num = num + term;
    }
    // Denominator (q^2)_{s+t} (q^2)_t (q^2)_{t+r} kept factored into
    // cyclotomics: 1 - q^{2k} = -(q^{2k} - 1) = -prod_{d | 2k} Phi_d.
    // Reducing by trial division of the (small, integer-coefficient)
    // cyclotomic factors avoids the costly generic gcd in Q[q].
    std::map<long, long> mult;
    long binomials = 0;
    auto add_factorial = [&](long hi) {
        for (long k = 1; k <= hi; ++k) {
            ++binomials;
            for (long d = 1; d <= 2 * k; ++d)
                if ((2 * k) % d == 0) ++mult[d];
        }
    };
    add_factorial(s + t);
    add_factorial(t);
    add_factorial(t + r);
    for (auto& [d, m] : mult) {
        LaurentQ phi = cyclotomic(d);
        while (m > 0 && !num.is_zero()) {
            try {
                num = exact_div(num, phi);
            } catch (const std::domain_error&) {
                break;
            }
            --m;
        }
    }
    LaurentQ den = (binomials % 2 != 0) ? LaurentQ(-1) : LaurentQ::one();
    for (auto& [d, m] : mult)
        for (long i = 0; i < m; ++i) den *= cyclotomic(d);
    return RatQ::from_reduced(num, den);
}

}  // namespace

QBinomialDuality qbinomial_duality(long r, long s, long t) {
    QBinomialDuality d;
    d.lhs = duality_side(r, s, t);
    d.rhs = duality_side(s, r, t);
    d.equal = (d.lhs == d.rhs);
    return d;
}

}  // namespace qt
