#pragma once

#include <random>

#include "supsec/core.hpp"

namespace supsec {

/// One uniform permutation of 0..n-1 drawn from rng. Uses masked rejection
/// sampling, so the stream is identical on every platform.
std::vector<int> random_permutation(std::mt19937_64& rng, int n);

/// Uniformly random d-representation on n elements named e0..e{n-1}.
/// Deterministic: the same (n, d, seed) gives byte-identical output on every
/// platform, which the standard distributions do not guarantee.
Representation random_representation(int n, int d, std::uint64_t seed);

}  // namespace supsec
