#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "illumid/image.hpp"
#include "illumid/manifest.hpp"

namespace illumid {

/// Gamma levels and shot-noise settings shared by dataset building,
/// training-time augmentation and frozen test manifests.
struct IlluminationConfig {
    std::vector<double> gamma_levels{0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 1.0, 1.5};
    double poisson_scale = 255.0;
    bool poisson_enabled = true;

    int n_illu() const { return static_cast<int>(gamma_levels.size()); }
    void validate() const;
};

/// Pointwise power-law intensity transform: out = in^(1/gamma), so
/// gamma < 1 darkens. gamma must be > 0.
ImageBuffer gamma_correct(const ImageBuffer& img, double gamma);

/// Per-pixel shot noise: out = clamp(Poisson(p * scale) / scale, 0, 1).
/// The pre-clamp expectation equals the input pixel.
ImageBuffer poisson_noise(const ImageBuffer& img, double scale, uint64_t seed);

/// Applies gamma_levels[level] then optional Poisson noise; returns the
/// altered image together with its illumination class (== level).
std::pair<ImageBuffer, int> make_illuminated(const ImageBuffer& img, int level,
                                             const IlluminationConfig& cfg,
                                             uint64_t seed);

/// Signed difference mapped into [0,1]: out = ((altered - original) + 1) / 2.
ImageBuffer diff_image(const ImageBuffer& altered, const ImageBuffer& original);

enum class AugmentMode { expand_all, assign_random };

/// expand_all: every source record yields one record per gamma level.
/// assign_random: each record gets one level drawn uniformly (seeded) --
/// the frozen test-time regime.
Manifest build_augmented_manifest(const Manifest& src, const IlluminationConfig& cfg,
                                  uint64_t seed, AugmentMode mode);

/// Procedural identity corpus: colored torso/leg/head figures with
/// per-identity appearance signatures and per-image jitter, written as
/// PNGs under out_dir/images plus out_dir/manifest.jsonl. Deterministic
/// by seed. Splits guarantee each query has a cross-camera gallery match.
Manifest synth_toy_dataset(int num_ids, int imgs_per_id, int side, int num_cameras,
                           uint64_t seed, const std::filesystem::path& out_dir);

} // namespace illumid
