#include "wordmeas/so3.hpp"

#include <cmath>

#include "wordmeas/complex.hpp"

namespace wordmeas {

double Rotation::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

std::array<std::array<double, 3>, 3> Rotation::matrix() const {
    return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

double rotation_angle(const Rotation& r) {
    double c = std::min(1.0, std::abs(r.w));
    return 2.0 * std::acos(c);
}

double ball_haar_measure(double eps) {
    if (eps <= 0.0 || eps > M_PI) throw So3Error("ball radius must lie in (0, pi]");
    return (eps - std::sin(eps)) / M_PI;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::standard_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 bounded away from 0 so the log is finite.
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return radius * std::cos(2.0 * M_PI * u2);
}

SplitMix64 block_stream(std::uint64_t seed, std::uint64_t block) {
    // One splitmix step decorrelates (seed, block) pairs.
    SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (block + 1)));
    return SplitMix64(mixer.next());
}

Rotation haar_sample(SplitMix64& rng) {
    Rotation q{rng.standard_normal(), rng.standard_normal(), rng.standard_normal(),
               rng.standard_normal()};
    double n = q.norm();
    return {q.w / n, q.x / n, q.y / n, q.z / n};
}

Rotation evaluate_rotation(const Word& w, const std::vector<Rotation>& tuple) {
    if (static_cast<int>(tuple.size()) != w.arity())
        throw So3Error("tuple length does not match word arity");
    Rotation acc;
    for (const auto& s : w.syllables()) {
        const Rotation& q = tuple[s.letter.index];
        acc = acc * (s.sign > 0 ? q : q.conjugate());
    }
    return acc;
}

DensityEstimate density_at_identity(const Word& w, const EstimatorConfig& cfg) {
    if (cfg.sample_count < 1) throw So3Error("need at least one sample");
    if (cfg.ball_radius <= 0.0 || cfg.ball_radius >= M_PI)
        throw So3Error("ball radius must lie in (0, pi)");
    if (!is_closed_surface(w)) throw So3Error("density is defined here only for surface words");
    SurfaceClass s = classify_surface(w);
    if (!s.orientable || s.genus_or_crosscaps < 2)
        throw So3Error("divergent density: zeta_SO(3)(-kappa) converges only for genus >= 2");

    const double ball = ball_haar_measure(cfg.ball_radius);
    const int n = w.arity();
    constexpr std::uint64_t kBlockSize = 65536;

    std::uint64_t hits = 0;
    std::vector<Rotation> tuple(n);
    for (std::uint64_t done = 0; done < cfg.sample_count; done += kBlockSize) {
        SplitMix64 rng = block_stream(cfg.rng_seed, done / kBlockSize);
        std::uint64_t here = std::min(kBlockSize, cfg.sample_count - done);
        for (std::uint64_t i = 0; i < here; ++i) {
            for (int c = 0; c < n; ++c) tuple[c] = haar_sample(rng);
            if (rotation_angle(evaluate_rotation(w, tuple)) <= cfg.ball_radius) ++hits;
        }
    }

    const double N = static_cast<double>(cfg.sample_count);
    const double p = static_cast<double>(hits) / N;
    DensityEstimate est;
    est.hits = hits;
    est.estimate = p / ball;
    est.std_error = std::sqrt(p * (1.0 - p) / N) / ball;
    return est;
}

}  // namespace wordmeas
