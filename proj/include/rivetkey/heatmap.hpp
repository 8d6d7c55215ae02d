#pragma once

#include <span>
#include <vector>

#include "rivetkey/errors.hpp"
#include "rivetkey/geometry.hpp"

namespace rivetkey::heatmap {

// A stack of per-keypoint likelihood maps over one image grid. Used both
// as training target (Gaussian bumps, sigma_px recorded) and as model
// output (sigma_px = 0).
struct HeatmapStack {
    int count = 0;
    int height = 0;
    int width = 0;
    double sigma_px = 0.0;
    std::vector<float> data;  // count * height * width, row-major per map

    HeatmapStack() = default;
    HeatmapStack(int n, int h, int w, double sigma = 0.0)
        : count(n), height(h), width(w), sigma_px(sigma),
          data(static_cast<size_t>(n) * h * w, 0.0f) {}

    float* map(int k) { return data.data() + static_cast<size_t>(k) * height * width; }
    const float* map(int k) const {
        return data.data() + static_cast<size_t>(k) * height * width;
    }
};

// Fill one map with the unnormalized Gaussian
//   m(i, j) = exp(-((j - x)^2 + (i - y)^2) / (2 sigma^2)).
// Peak value 1 when the keypoint coincides with a pixel center; values that
// would fall outside the grid are simply truncated, never renormalized.
void encode_one(std::span<float> map, int height, int width, const Keypoint& kp, double sigma);

// Encode every keypoint into its own map. Throws KeypointOutOfBounds when a
// keypoint lies outside [0, width-1] x [0, height-1].
HeatmapStack encode(const KeypointSet& kps, int height, int width, double sigma);

struct Decoded {
    KeypointSet keypoints;
    std::vector<double> confidences;  // peak value per map
};

// Argmax of one map; ties break toward the smallest row, then column.
// With `subpixel`, the argmax is refined by the baseline-subtracted centroid
// of the 3x3 window around it (the window minimum acts as the local
// background level; without that subtraction a wide Gaussian biases the
// centroid toward the window center).
Keypoint decode_one(std::span<const float> map, int height, int width, bool subpixel,
                    double* confidence = nullptr);

Decoded decode(const HeatmapStack& maps, bool subpixel);

}  // namespace rivetkey::heatmap
