#include "eqc/modular.hpp"

#include <mutex>
#include <stdexcept>

namespace eqc::modp {

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these bases are deterministic below 3.3e24
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 large_prime(std::size_t k) {
    static std::mutex mu;
    static std::vector<u64> cache;
    std::lock_guard<std::mutex> lock(mu);
    u64 candidate = cache.empty() ? (1ULL << 62) - 1 : cache.back() - 2;
    while (cache.size() <= k) {
        if (is_prime(candidate)) cache.push_back(candidate);
        candidate -= 2;
    }
    return cache[k];
}

u64 reduce(const Integer& a, u64 p) {
    static_assert(sizeof(unsigned long) == sizeof(u64));
    return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p));
}

u64 reduce(long a, u64 p) {
    if (a >= 0) return static_cast<u64>(a) % p;
    u64 m = static_cast<u64>(-(a + 1)) + 1;  // |a| without overflow
    m %= p;
    return m == 0 ? 0 : p - m;
}

std::vector<u64> charpoly(DenseMatrix<u64> h, u64 p) {
    const std::size_t n = h.rows();
    // reduce to upper Hessenberg form by similarity
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h(i, m - 1) == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            h.swap_rows(i, m);
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
        }
        const u64 inv = invmod(h(m, m - 1), p);
        for (std::size_t r = m + 1; r < n; ++r) {
            if (h(r, m - 1) == 0) continue;
            const u64 u = mulmod(h(r, m - 1), inv, p);
            for (std::size_t c = 0; c < n; ++c) h(r, c) = submod(h(r, c), mulmod(u, h(m, c), p), p);
            for (std::size_t c = 0; c < n; ++c) h(c, m) = addmod(h(c, m), mulmod(u, h(c, r), p), p);
        }
    }
    // p_k(x) = (x - h_kk) p_{k-1} - sum_i h_ik (prod sub-diagonal) p_{i-1}
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<u64> pk(k + 1, 0);
        const std::vector<u64>& prev = polys[k - 1];
        for (std::size_t j = 0; j < prev.size(); ++j) {
            pk[j + 1] = addmod(pk[j + 1], prev[j], p);
            pk[j] = submod(pk[j], mulmod(h(k - 1, k - 1), prev[j], p), p);
        }
        u64 t = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            t = mulmod(t, h(i + 1, i), p);
            const u64 c = mulmod(t, h(i, k - 1), p);
            if (c == 0) continue;
            const std::vector<u64>& q = polys[i];
            for (std::size_t j = 0; j < q.size(); ++j) pk[j] = submod(pk[j], mulmod(c, q[j], p), p);
        }
        polys[k] = std::move(pk);
    }
    return polys[n];
}

bool solve(DenseMatrix<u64> k, DenseMatrix<u64>& b, u64 p, u64& det) {
    const std::size_t n = k.rows();
    const std::size_t m = b.cols();
    det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && k(piv, c) == 0) ++piv;
        if (piv == n) return false;
        if (piv != c) {
            k.swap_rows(piv, c);
            b.swap_rows(piv, c);
            det = det == 0 ? 0 : p - det;
        }
        det = mulmod(det, k(c, c), p);
        const u64 inv = invmod(k(c, c), p);
        for (std::size_t j = 0; j < n; ++j) k(c, j) = mulmod(k(c, j), inv, p);
        for (std::size_t j = 0; j < m; ++j) b(c, j) = mulmod(b(c, j), inv, p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || k(r, c) == 0) continue;
            const u64 f = k(r, c);
            for (std::size_t j = 0; j < n; ++j) k(r, j) = submod(k(r, j), mulmod(f, k(c, j), p), p);
            for (std::size_t j = 0; j < m; ++j) b(r, j) = submod(b(r, j), mulmod(f, b(c, j), p), p);
        }
    }
    return true;
}

void Crt::add(u64 residue, u64 p) {
    const Integer P(static_cast<unsigned long>(p));
    // value + modulus * t with t = (residue - value) / modulus mod p
    const u64 vmod = reduce(value_, p);
    const u64 minv = invmod(reduce(modulus_, p), p);
    const u64 t = mulmod(submod(residue % p, vmod, p), minv, p);
    value_ += modulus_ * Integer(static_cast<unsigned long>(t));
    modulus_ *= P;
}

Integer Crt::symmetric() const {
    Integer half = modulus_ / 2;
    return value_ > half ? Integer(value_ - modulus_) : value_;
}

}  // namespace eqc::modp
