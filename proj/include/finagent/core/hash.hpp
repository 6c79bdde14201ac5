#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace finagent {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

// FNV-1a over bytes; platform independent, used for cassette keys and
// deterministic seeding. Not cryptographic.
constexpr std::uint64_t fnv1a64(std::string_view s,
                                std::uint64_t h = kFnvOffset) {
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::string to_hex64(std::uint64_t v);

// Deterministic stream of doubles in [0,1) from a 64-bit seed.
class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed) : state_(seed) {}
    double next() {
        return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
    }
    std::uint64_t next_u64() { return splitmix64(state_); }

private:
    std::uint64_t state_;
};

} // namespace finagent
