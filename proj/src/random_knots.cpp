#include "eqc/random_knots.hpp"

#include <algorithm>

namespace eqc {

long uniform(std::mt19937_64& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

SeifertMatrix random_seifert_matrix(std::mt19937_64& rng, const RandomSeifertOptions& opt) {
    const long g = uniform(rng, 1, std::max(1, opt.max_size / 2));
    const std::size_t n = static_cast<std::size_t>(2 * g);
    SeifertMatrix v(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const long x = uniform(rng, -opt.entry_bound, opt.entry_bound);
            v(i, j) = x;
            v(j, i) = x;
        }
    for (std::size_t k = 0; k < n; k += 2) v(k, k + 1) += 1;

    // P V P^T with P = I + c E_ij, i != j
    for (int step = 0; step < opt.congruence_steps; ++step) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        const long c = uniform(rng, 0, 1) ? 1 : -1;
        if (n < 2) break;
        for (std::size_t col = 0; col < n; ++col) v(i, col) += c * v(j, col);
        for (std::size_t row = 0; row < n; ++row) v(row, i) += c * v(row, j);
    }
    return v;
}

}  // namespace eqc
