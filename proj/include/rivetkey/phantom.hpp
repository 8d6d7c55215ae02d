#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "rivetkey/geometry.hpp"
#include "rivetkey/image.hpp"
#include "rivetkey/manifest.hpp"

namespace rivetkey::phantom {

// Parametric geometry of one phantom SPR joint cross-section. Everything
// the renderer draws, and every keypoint it reports, is a pure function of
// these fields.
struct JointConfig {
    std::string config_id;
    double top_thickness_mm = 1.5;
    double bottom_thickness_mm = 2.0;
    double head_offset_mm = 0.0;    // positive = head proud of the sheet surface
    double interlock_mm = 0.3;      // lateral flare engagement, >= 0
    double bottom_remnant_mm = 0.6; // material left under the rivet tip, > 0
    double head_radius_mm = 3.0;
    double shank_radius_mm = 1.6;
    double rivet_level = 0.85;      // gray levels in [0,1]
    double sheet_level = 0.45;
    double background_level = 0.08;
    double pixel_pitch_mm = 0.05;
};

// Corruption model for the noisy domain: photometric only, geometry and
// keypoints are never moved.
struct NoiseParams {
    double additive_noise_std = 0.0;
    double speckle_std = 0.0;
    double bias_field_amplitude = 0.0;
    double bias_field_scale_mm = 4.0;
    int streak_count = 0;
    double streak_amplitude = 0.0;
    double contrast_jitter = 0.0;
    double blur_sigma_px = 0.0;
};

// Sampling ranges used by sample_config / sample_noise_params. Exposed so
// range-scan tests assert against the same constants the generator uses.
namespace ranges {
// Sheet gauges offered by the simulation matrix.
inline constexpr std::array<double, 8> kThickness = {1.0, 1.2, 1.5, 1.6, 1.8, 2.0, 2.2, 2.5};
inline constexpr double kHeadOffsetMin = -0.3, kHeadOffsetMax = 0.5;
inline constexpr double kInterlockMin = 0.0, kInterlockMax = 0.6;
inline constexpr double kRemnantFracMin = 0.25, kRemnantFracMax = 0.6;  // of bottom thickness
inline constexpr double kHeadRadiusMin = 2.4, kHeadRadiusMax = 3.6;
inline constexpr double kShankRadiusMin = 1.4, kShankRadiusMax = 1.9;
inline constexpr double kRivetLevelMin = 0.70, kRivetLevelMax = 0.95;
inline constexpr double kSheetLevelMin = 0.35, kSheetLevelMax = 0.55;
inline constexpr double kBackgroundLevelMin = 0.02, kBackgroundLevelMax = 0.15;
inline constexpr double kPixelPitchMm = 0.05;

inline constexpr double kAdditiveStdMin = 0.02, kAdditiveStdMax = 0.06;
inline constexpr double kSpeckleStdMin = 0.04, kSpeckleStdMax = 0.12;
inline constexpr double kBiasAmpMin = 0.04, kBiasAmpMax = 0.12;
inline constexpr double kBiasScaleMin = 2.5, kBiasScaleMax = 6.0;
inline constexpr int kStreakCountMin = 1, kStreakCountMax = 4;
inline constexpr double kStreakAmpMin = 0.03, kStreakAmpMax = 0.10;
inline constexpr double kContrastJitterMin = 0.05, kContrastJitterMax = 0.18;
inline constexpr double kBlurSigmaMin = 0.5, kBlurSigmaMax = 1.2;
}  // namespace ranges

// Validate all JointConfig invariants; throws ConfigError.
void validate(const JointConfig& config);

// Draw a joint configuration. Identical seeds yield identical configs.
JointConfig sample_config(uint64_t seed);

NoiseParams sample_noise_params(uint64_t seed);

struct Rendered {
    Image image;           // values in [0,1]
    KeypointSet keypoints; // K1..K6, sub-pixel, stored-image coordinates
};

// Render a square `size` x `size` image of the joint with anti-aliased
// (supersampled) material boundaries. Throws GeometryOverflow when the
// joint does not fit with an 8 px margin.
Rendered render(const JointConfig& config, int size);

// Apply the noisy-domain corruption. Pixel values only; deterministic for
// a given (params, seed). All-zero params return the input bit-exactly.
Image corrupt(const Image& image, const NoiseParams& params, uint64_t seed);

// Generate `count` samples, write 16-bit PNGs plus manifest.json under
// out_dir, and return the manifest. Per-sample seeds are derived from
// (seed, index), so regenerating with a larger count leaves existing
// samples unchanged. Noisy samples come in groups of four sharing one
// joint configuration (four independent corruptions), mirroring slices of
// one physical joint; clean samples get one configuration each.
dataio::Manifest generate_dataset(int count, dataio::Domain domain, uint64_t seed,
                                  const std::filesystem::path& out_dir, int size = 320);

}  // namespace rivetkey::phantom
