#ifndef BESSELMV_NUMERIC_RNG_HPP
#define BESSELMV_NUMERIC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace besselmv::numeric {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Counter-based stream: sample i of shard s draws from an independent
// substream keyed by (seed, shard, i), so parallel sharding is deterministic.
class CounterStream {
public:
    CounterStream(uint64_t seed, uint64_t shard, uint64_t index)
        : state_(splitmix64(seed ^ splitmix64(shard ^ splitmix64(index)))) {}

    double uniform() {  // in (0, 1)
        state_ = splitmix64(state_);
        return (static_cast<double>(state_ >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() {
        const double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // Marsaglia-Tsang for shape >= 1.
    double gamma(double shape) {
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

private:
    uint64_t state_;
};

}  // namespace besselmv::numeric

#endif
