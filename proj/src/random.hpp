#ifndef SUNFIND_RANDOM_HPP
#define SUNFIND_RANDOM_HPP

#include <cstdint>
#include <random>

namespace sunfind::detail {

using Rng = std::mt19937_64;

// The standard distributions are implementation-defined, so draws go through these
// helpers to keep generated instances identical across standard libraries.
inline std::uint64_t draw_below(Rng & rng, std::uint64_t bound)
{
    auto limit = std::uint64_t(-1) - (std::uint64_t(-1) % bound);
    while (true) {
        auto x = rng();
        if (x < limit)
            return x % bound;
    }
}

inline double draw_unit(Rng & rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace sunfind::detail

#endif
