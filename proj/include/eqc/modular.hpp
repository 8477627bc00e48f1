#pragma once

#include <cstdint>
#include <vector>

#include "eqc/matrix.hpp"
#include "eqc/numeric.hpp"

namespace eqc::modp {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
bool is_prime(u64 n);

// The k-th prime below 2^62, counting downward.
u64 large_prime(std::size_t k);

u64 reduce(const Integer& a, u64 p);
u64 reduce(long a, u64 p);

// Coefficients c_0..c_n of det(xI - M) mod p.
std::vector<u64> charpoly(DenseMatrix<u64> m, u64 p);

// Solves K X = B mod p in place of B; returns false when K is singular.
// det receives det K mod p on success.
bool solve(DenseMatrix<u64> k, DenseMatrix<u64>& b, u64 p, u64& det);

// Incremental Chinese remaindering to the symmetric residue.
class Crt {
public:
    void add(u64 residue, u64 p);
    const Integer& modulus() const { return modulus_; }
    Integer symmetric() const;

private:
    Integer value_ = 0;
    Integer modulus_ = 1;
};

}  // namespace eqc::modp
