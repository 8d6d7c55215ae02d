#include "rivetkey/heatmap.hpp"

#include <cmath>
#include <string>

namespace rivetkey::heatmap {

void encode_one(std::span<float> map, int height, int width, const Keypoint& kp, double sigma) {
    // Separable: exp(-(dx^2+dy^2)/2s^2) = exp(-dx^2/2s^2) * exp(-dy^2/2s^2).
    const double inv = 1.0 / (2.0 * sigma * sigma);
    std::vector<double> col(width), row(height);
    for (int j = 0; j < width; ++j) {
        double d = j - kp.x;
        col[j] = std::exp(-d * d * inv);
    }
    for (int i = 0; i < height; ++i) {
        double d = i - kp.y;
        row[i] = std::exp(-d * d * inv);
    }
    for (int i = 0; i < height; ++i) {
        float* dst = map.data() + static_cast<size_t>(i) * width;
        for (int j = 0; j < width; ++j) dst[j] = static_cast<float>(row[i] * col[j]);
    }
}

HeatmapStack encode(const KeypointSet& kps, int height, int width, double sigma) {
    if (!(sigma > 0.0)) throw ConfigError("sigma must be > 0");
    HeatmapStack stack(static_cast<int>(kps.size()), height, width, sigma);
    for (size_t k = 0; k < kps.size(); ++k) {
        const auto& kp = kps[k];
        if (!(kp.x >= 0.0 && kp.x <= width - 1 && kp.y >= 0.0 && kp.y <= height - 1))
            throw KeypointOutOfBounds("keypoint " + std::to_string(k) + " at (" +
                                      std::to_string(kp.x) + ", " + std::to_string(kp.y) +
                                      ") outside " + std::to_string(width) + "x" +
                                      std::to_string(height) + " grid");
        encode_one({stack.map(static_cast<int>(k)), static_cast<size_t>(height) * width},
                   height, width, kp, sigma);
    }
    return stack;
}

Keypoint decode_one(std::span<const float> map, int height, int width, bool subpixel,
                    double* confidence) {
    int best_i = 0, best_j = 0;
    float best = map[0];
    for (int i = 0; i < height; ++i) {
        const float* row = map.data() + static_cast<size_t>(i) * width;
        for (int j = 0; j < width; ++j) {
            if (row[j] > best) {  // strict: ties keep the earlier (smaller) index
                best = row[j];
                best_i = i;
                best_j = j;
            }
        }
    }
    if (confidence) *confidence = best;
    if (!subpixel) return {static_cast<double>(best_j), static_cast<double>(best_i)};

    int i0 = std::max(best_i - 1, 0), i1 = std::min(best_i + 1, height - 1);
    int j0 = std::max(best_j - 1, 0), j1 = std::min(best_j + 1, width - 1);
    double wmin = map[static_cast<size_t>(i0) * width + j0];
    for (int i = i0; i <= i1; ++i)
        for (int j = j0; j <= j1; ++j)
            wmin = std::min(wmin, static_cast<double>(map[static_cast<size_t>(i) * width + j]));

    double sum = 0.0, sx = 0.0, sy = 0.0;
    for (int i = i0; i <= i1; ++i) {
        for (int j = j0; j <= j1; ++j) {
            double w = map[static_cast<size_t>(i) * width + j] - wmin;
            sum += w;
            sx += w * j;
            sy += w * i;
        }
    }
    if (sum <= 0.0) return {static_cast<double>(best_j), static_cast<double>(best_i)};
    return {sx / sum, sy / sum};
}

Decoded decode(const HeatmapStack& maps, bool subpixel) {
    Decoded out;
    out.keypoints.reserve(maps.count);
    out.confidences.reserve(maps.count);
    const size_t plane = static_cast<size_t>(maps.height) * maps.width;
    for (int k = 0; k < maps.count; ++k) {
        double conf = 0.0;
        out.keypoints.push_back(
            decode_one({maps.map(k), plane}, maps.height, maps.width, subpixel, &conf));
        out.confidences.push_back(conf);
    }
    return out;
}

}  // namespace rivetkey::heatmap
