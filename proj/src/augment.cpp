#include "illumid/augment.hpp"
#include "illumid/errors.hpp"
#include "illumid/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace illumid {

void IlluminationConfig::validate() const {
    if (gamma_levels.empty()) {
        throw std::invalid_argument("gamma_levels must be non-empty");
    }
    for (double g : gamma_levels) {
        if (!(g > 0.0)) throw std::invalid_argument("gamma levels must be > 0");
    }
    if (!(poisson_scale > 0.0)) {
        throw std::invalid_argument("poisson_scale must be > 0");
    }
}

ImageBuffer gamma_correct(const ImageBuffer& img, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    if (gamma == 1.0) return img;
    const double exponent = 1.0 / gamma;
    ImageBuffer out = img;
    for (double& v : out.data) {
        v = std::clamp(std::pow(v, exponent), 0.0, 1.0);
    }
    return out;
}

ImageBuffer poisson_noise(const ImageBuffer& img, double scale, uint64_t seed) {
    if (!(scale > 0.0)) throw std::invalid_argument("poisson scale must be > 0");
    Rng rng(seed);
    ImageBuffer out = img;
    for (double& v : out.data) {
        const double counts = static_cast<double>(rng.poisson(v * scale));
        v = std::clamp(counts / scale, 0.0, 1.0);
    }
    return out;
}

std::pair<ImageBuffer, int> make_illuminated(const ImageBuffer& img, int level,
                                             const IlluminationConfig& cfg,
                                             uint64_t seed) {
    cfg.validate();
    if (level < 0 || level >= cfg.n_illu()) {
        throw std::invalid_argument("illumination level " + std::to_string(level) +
                                    " out of range [0, " +
                                    std::to_string(cfg.n_illu()) + ")");
    }
    ImageBuffer out = gamma_correct(img, cfg.gamma_levels[level]);
    if (cfg.poisson_enabled) {
        out = poisson_noise(out, cfg.poisson_scale, seed);
    }
    return {std::move(out), level};
}

ImageBuffer diff_image(const ImageBuffer& altered, const ImageBuffer& original) {
    if (!altered.same_shape(original)) {
        throw std::invalid_argument("diff_image: shape mismatch");
    }
    ImageBuffer out = altered;
    for (size_t i = 0; i < out.data.size(); ++i) {
        out.data[i] = (altered.data[i] - original.data[i]) * 0.5 + 0.5;
    }
    return out;
}

Manifest build_augmented_manifest(const Manifest& src, const IlluminationConfig& cfg,
                                  uint64_t seed, AugmentMode mode) {
    cfg.validate();
    if (src.records.empty()) {
        throw std::invalid_argument("source manifest is empty");
    }
    Manifest out;
    out.root = src.root;
    const int n = cfg.n_illu();
    if (mode == AugmentMode::expand_all) {
        out.records.reserve(src.records.size() * static_cast<size_t>(n));
        for (const auto& rec : src.records) {
            for (int level = 0; level < n; ++level) {
                SampleRecord r = rec;
                r.illum_class = level;
                r.gamma = cfg.gamma_levels[level];
                out.records.push_back(std::move(r));
            }
        }
    } else {
        Rng rng(seed);
        out.records.reserve(src.records.size());
        for (const auto& rec : src.records) {
            SampleRecord r = rec;
            r.illum_class = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            r.gamma = cfg.gamma_levels[r.illum_class];
            out.records.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace illumid
