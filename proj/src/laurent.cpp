#include "qt/laurent.hpp"

#include <sstream>

namespace qt {

namespace {

// Dense vector form of a Laurent polynomial with the lowest exponent shifted
// to zero; used for Euclidean division/gcd in Q[q].
struct Dense {
    std::vector<Rat> c;  // c[i] = coefficient of q^i
    long shift = 0;      // original lowest exponent

    int deg() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (c[static_cast<size_t>(i)] != 0) return i;
        return -1;
    }
    bool is_zero() const { return deg() < 0; }
};

Dense to_dense(const LaurentQ& p) {
    Dense d;
    if (p.is_zero()) return d;
    d.shift = p.lo_exp();
    d.c.assign(static_cast<size_t>(p.hi_exp() - p.lo_exp() + 1), Rat(0));
    for (auto& [e, co] : p.terms()) d.c[static_cast<size_t>(e - d.shift)] = co;
    return d;
}

LaurentQ from_dense(const Dense& d, long extra_shift) {
    LaurentQ p;
    for (size_t i = 0; i < d.c.size(); ++i)
        p.add_term(static_cast<long>(i) + extra_shift, d.c[i]);
    return p;
}

// Polynomial remainder a mod b over Q (b nonzero).
Dense poly_rem(Dense a, const Dense& b) {
    int db = b.deg();
    Rat lead = b.c[static_cast<size_t>(db)];
    for (int da = a.deg(); da >= db; da = a.deg()) {
        Rat f = a.c[static_cast<size_t>(da)] / lead;
        for (int i = 0; i <= db; ++i)
            a.c[static_cast<size_t>(da - db + i)] -= f * b.c[static_cast<size_t>(i)];
        a.c[static_cast<size_t>(da)] = 0;  // force exact cancellation
    }
    return a;
}

// Exact polynomial quotient; throws if division is not exact.
Dense poly_div_exact(Dense a, const Dense& b) {
    int db = b.deg();
    Rat lead = b.c[static_cast<size_t>(db)];
    Dense q;
    q.c.assign(a.c.size(), Rat(0));
    for (int da = a.deg(); da >= db; da = a.deg()) {
        Rat f = a.c[static_cast<size_t>(da)] / lead;
        q.c[static_cast<size_t>(da - db)] = f;
        for (int i = 0; i <= db; ++i)
            a.c[static_cast<size_t>(da - db + i)] -= f * b.c[static_cast<size_t>(i)];
        a.c[static_cast<size_t>(da)] = 0;
    }
    if (!a.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

void make_monic(Dense& d) {
    int dd = d.deg();
    if (dd < 0) return;
    Rat lead = d.c[static_cast<size_t>(dd)];
    for (auto& co : d.c) co /= lead;
}

}  // namespace

LaurentQ exact_div(const LaurentQ& a, const LaurentQ& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (a.is_zero()) return LaurentQ();
    Dense da = to_dense(a), db = to_dense(b);
    Dense q = poly_div_exact(da, db);
    return from_dense(q, da.shift - db.shift);
}

LaurentQ laurent_gcd(const LaurentQ& a, const LaurentQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Dense x = to_dense(a), y = to_dense(b);
    // Euclid on the shifted polynomials; the unit q^shift is dropped.
    while (!y.is_zero()) {
        Dense r = poly_rem(x, y);
        x = y;
        y = r;
        // trim to the current degree to keep vectors short
        int d = y.deg();
        y.c.resize(static_cast<size_t>(d + 1));
    }
    make_monic(x);
    return from_dense(x, 0);
}

std::string LaurentQ::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (e != 0) os << "*q^" << e;
    }
    return os.str();
}

}  // namespace qt
