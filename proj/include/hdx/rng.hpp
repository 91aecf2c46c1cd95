#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hdx::rng {

/** Algorithm identifier recorded in generator metadata. */
inline constexpr const char* kAlgorithmId = "mt19937_64";

using Engine = std::mt19937_64;

/** Uniform double in [0, 1) from the top 53 bits of one draw.
 *  Unlike std::uniform_real_distribution, the mapping is pinned by this
 *  code, so streams replay identically on any platform. */
inline double unit(Engine& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/** Uniform integer in [0, bound) by rejection; bound must be positive. */
inline std::uint64_t below(Engine& g, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = g();
    } while (x >= limit);
    return x % bound;
}

/** Standard normal via Box-Muller; consumes exactly two draws. */
inline double gaussian(Engine& g) {
    double u1 = 0.0;
    do {
        u1 = unit(g);
    } while (u1 == 0.0);
    double u2 = unit(g);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

/** Fisher-Yates shuffle driven by below(), for replayable permutations. */
template <typename RandomIt>
void shuffle(RandomIt first, RandomIt last, Engine& g) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
        std::swap(first[i - 1], first[below(g, i)]);
    }
}

}  // namespace hdx::rng
