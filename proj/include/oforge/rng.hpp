#pragma once

#include <cstdint>
#include <vector>

namespace oforge {

// splitmix64: tiny, fully specified, identical on every platform.  We never
// use std distributions because their output is implementation-defined and
// reports must be byte-stable across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish in [0, n); bias is irrelevant for test sampling
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    bool coin() { return (next() & 1u) != 0; }

    // distinct indices in [0, n), in increasing order
    std::vector<std::size_t> distinct(std::size_t count, std::size_t n);

private:
    std::uint64_t state_;
};

inline std::vector<std::size_t> Rng::distinct(std::size_t count, std::size_t n) {
    std::vector<std::size_t> picked;
    if (count > n) count = n;
    // Floyd's sampling
    std::vector<bool> in(n, false);
    for (std::size_t j = n - count; j < n; ++j) {
        std::size_t t = index(j + 1);
        if (in[t]) t = j;
        in[t] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (in[i]) picked.push_back(i);
    return picked;
}

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

} // namespace oforge
