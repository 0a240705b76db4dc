#ifndef RUINLAB_RNG_HPP
#define RUINLAB_RNG_HPP

#include <cstddef>
#include <cstdint>

namespace ruinlab {

// Quantile of the standard normal distribution (Wichura's AS241, PPND16).
// Accurate to ~1e-15 over (0,1).
double norm_quantile(double p);

namespace detail {

inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

}  // namespace detail

// Counter-based deterministic stream: the i-th output is a pure function of
// (master_seed, path_index, i), so identical (seed, index) pairs reproduce the
// same sequence regardless of how work is scheduled across threads.
class RngStream {
  public:
    RngStream(uint64_t master_seed, uint64_t path_index);

    uint64_t raw();
    double uniform();           // strictly inside (0,1)
    double normal();
    double exponential(double rate);

    // Fills out[0..n) with i.i.d. standard normals, advancing the counter by n.
    void normals(double* out, std::size_t n);

    uint64_t key() const { return key_; }

  private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

namespace detail {

// Batch primitives used by the simulation kernel; counter-indexed and
// element-wise so the compiler can vectorize them.
void normals_batch(uint64_t key, uint64_t counter0, std::size_t n, double* out);
void exp_batch(const double* x, double* out, std::size_t n);

}  // namespace detail

}  // namespace ruinlab

#endif
