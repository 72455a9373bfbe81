#ifndef TAVC_RNG_HPP
#define TAVC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>

namespace tavc {

// Counter-based random stream. Output n of stream s under master seed m is
// bij_m((s << kCtrBits) | n), where bij_m is a bijection of the 64-bit
// integers keyed by m. Distinct (stream, counter) pairs map to distinct
// words, so the streams of one run are disjoint slices of a single
// permutation sequence: no pair of replicate streams can collide.
//
// The bijection is two rounds of the splitmix64 finalizer with the key
// injected between rounds.
class RngStream {
public:
    static constexpr int kCtrBits = 40; // ~1.1e12 draws per stream

    RngStream() : RngStream(0, 0) {}

    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : key1_(mix(master_seed ^ 0x2545F4914F6CDD1DULL)),
          key2_(mix(master_seed + 0x9E3779B97F4A7C15ULL)),
          base_(stream_id << kCtrBits),
          ctr_(0) {}

    // Independent child stream; (id-spaces of parent and child never meet
    // because the id, not the counter position, selects the slice).
    RngStream substream(std::uint64_t stream_id) const {
        RngStream s;
        s.key1_ = key1_;
        s.key2_ = key2_;
        s.base_ = stream_id << kCtrBits;
        s.ctr_ = 0;
        return s;
    }

    std::uint64_t next_u64() {
        std::uint64_t c = base_ | (ctr_++ & ((1ULL << kCtrBits) - 1));
        return mix(mix(c ^ key1_) + key2_);
    }

    // Uniform on (0,1): 53-bit mantissa, never exactly 0 or 1.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double exponential(double rate = 1.0) { return -std::log(uniform()) / rate; }

    // Standard normal via Box-Muller; second variate cached.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * M_PI * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    // Index in [0, n) from a single draw.
    std::uint64_t uniform_index(std::uint64_t n) {
        // 64-bit multiply-shift; bias < 2^-64 * n, negligible for n << 2^32.
        unsigned __int128 wide = static_cast<unsigned __int128>(next_u64()) * n;
        return static_cast<std::uint64_t>(wide >> 64);
    }

    std::uint64_t counter() const { return ctr_; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key1_;
    std::uint64_t key2_;
    std::uint64_t base_;
    std::uint64_t ctr_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

} // namespace tavc

#endif
