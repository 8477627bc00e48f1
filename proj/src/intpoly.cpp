#include "eqc/intpoly.hpp"

#include <stdexcept>

namespace eqc {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const IntPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Integer poly_eval(const IntPoly& p, const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

namespace {

void check_monic(const IntPoly& m) {
    if (m.empty() || m.back() != 1) throw std::invalid_argument("divisor must be monic");
}

}  // namespace

IntPoly poly_rem_monic(const IntPoly& a, const IntPoly& m) {
    check_monic(m);
    IntPoly r = a;
    trim(r);
    const std::size_t dm = m.size() - 1;
    while (r.size() > dm && !r.empty()) {
        const std::size_t shift = r.size() - 1 - dm;
        const Integer lead = r.back();
        for (std::size_t j = 0; j <= dm; ++j) r[shift + j] -= lead * m[j];
        trim(r);
    }
    return r;
}

IntPoly poly_div_exact_monic(const IntPoly& a, const IntPoly& m) {
    check_monic(m);
    IntPoly r = a;
    trim(r);
    const std::size_t dm = m.size() - 1;
    if (r.size() <= dm) {
        if (!r.empty()) throw std::invalid_argument("inexact polynomial division");
        return {};
    }
    IntPoly q(r.size() - dm);
    while (r.size() > dm) {
        const std::size_t shift = r.size() - 1 - dm;
        const Integer lead = r.back();
        q[shift] = lead;
        for (std::size_t j = 0; j <= dm; ++j) r[shift + j] -= lead * m[j];
        trim(r);
    }
    if (!r.empty()) throw std::invalid_argument("inexact polynomial division");
    trim(q);
    return q;
}

IntPoly cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    IntPoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact_monic(p, cyclotomic(d));
    return p;
}

Integer bareiss_determinant(DenseMatrix<Integer> a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? Integer(a(n - 1, n - 1)) : Integer(-a(n - 1, n - 1));
}

Integer multiplication_norm(const IntPoly& f, const IntPoly& g) {
    check_monic(g);
    const std::size_t n = g.size() - 1;
    if (n == 0) return 1;
    DenseMatrix<Integer> m(n, n);
    IntPoly col = poly_rem_monic(f, g);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
        IntPoly shifted(col.size() + 1);
        for (std::size_t i = 0; i < col.size(); ++i) shifted[i + 1] = col[i];
        col = poly_rem_monic(shifted, g);
    }
    return bareiss_determinant(std::move(m));
}

}  // namespace eqc
