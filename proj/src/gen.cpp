#include "supsec/gen.hpp"

#include <bit>
#include <numeric>

namespace supsec {

namespace {

// Masked rejection sampling: unbiased and, unlike uniform_int_distribution,
// identical across standard library implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
    const std::uint64_t mask = std::bit_ceil(range) - 1;
    std::uint64_t x;
    do x = rng() & mask;
    while (x >= range);
    return x;
}

}  // namespace

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[bounded(rng, static_cast<std::uint64_t>(i) + 1)]);
    return perm;
}

Representation random_representation(int n, int d, std::uint64_t seed) {
    if (n < 1 || n > kMaxGroundSize)
        throw std::invalid_argument("ground set size must be in 1.." +
                                    std::to_string(kMaxGroundSize));
    if (d < 1) throw std::invalid_argument("need at least one order");

    std::mt19937_64 rng(seed);
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names[static_cast<std::size_t>(i)] = "e" + std::to_string(i);

    std::vector<LinearOrder> orders;
    orders.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) orders.push_back(LinearOrder::from_sequence(random_permutation(rng, n)));
    return Representation(std::move(names), std::move(orders));
}

}  // namespace supsec
