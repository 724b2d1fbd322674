#ifndef WALKSIM_RNG_HPP_
#define WALKSIM_RNG_HPP_

#include <cmath>
#include <cstdint>

namespace walksim {

// SplitMix64, used only to expand seeds into generator state.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ with splitmix64 seeding. One independent stream per
// (seed, stream) pair; replicas get their replica index as stream id so
// results are reproducible for any thread count.
class RngStream {
  public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 sm(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        for (auto& w : s_) w = sm.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased integer in [0, m).
    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t threshold = (-m) % m;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x < threshold);
        return x % m;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1].
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    // Knuth's method; fine for the small means used here.
    std::int64_t poisson(double mean) {
        const double limit = std::exp(-mean);
        std::int64_t count = 0;
        double prod = uniform_pos();
        while (prod > limit) {
            ++count;
            prod *= uniform_pos();
        }
        return count;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

}  // namespace walksim

#endif
