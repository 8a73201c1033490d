#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "wordmeas/word.hpp"

namespace wordmeas {

struct So3Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unit quaternion; q and -q represent the same rotation.
struct Rotation {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    Rotation operator*(const Rotation& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
    }
    Rotation conjugate() const { return {w, -x, -y, -z}; }
    double norm() const;
    std::array<std::array<double, 3>, 3> matrix() const;
};

// Rotation angle in [0, pi]: 2 * arccos(|w|).
double rotation_angle(const Rotation& r);

// Haar measure of the ball {angle <= eps}: (eps - sin eps) / pi.
double ball_haar_measure(double eps);

// splitmix64: the output sequence is fixed by the algorithm, so streams are
// byte-identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform();         // in [0, 1)
    double standard_normal(); // Box-Muller on splitmix64 uniforms

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stream for sample block `block` of run `seed`; blocks are independent and
// the merged estimate is deterministic for fixed (seed, N).
SplitMix64 block_stream(std::uint64_t seed, std::uint64_t block);

// Uniform (Haar) rotation: four independent standard normals, normalized.
Rotation haar_sample(SplitMix64& rng);

struct EstimatorConfig {
    std::uint64_t sample_count = 1000000;
    double ball_radius = 0.2;  // radians
    std::uint64_t rng_seed = 0;
};

struct DensityEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t hits = 0;
};

// Ball-indicator estimate of the density of mu_w at the identity of SO(3).
// Requires an orientable surface word of genus >= 2; lower genus gives a
// divergent density and is refused.
DensityEstimate density_at_identity(const Word& w, const EstimatorConfig& cfg);

// Evaluate the word at a tuple of rotations (quaternion arithmetic).
Rotation evaluate_rotation(const Word& w, const std::vector<Rotation>& tuple);

}  // namespace wordmeas
