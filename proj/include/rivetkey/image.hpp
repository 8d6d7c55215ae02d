#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

#include "rivetkey/geometry.hpp"

namespace rivetkey {

// Single-channel float image, row-major.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<float> data;

    Image() = default;
    Image(int w, int h, float fill = 0.0f)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    float& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    float at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

    bool same_shape(const Image& o) const { return width == o.width && height == o.height; }
};

// Bilinear sample with border replication. Coordinates follow the
// pixel-center convention (integer coords hit pixel centers exactly).
inline float sample_bilinear(const Image& img, double x, double y) {
    double cx = std::clamp(x, 0.0, static_cast<double>(img.width - 1));
    double cy = std::clamp(y, 0.0, static_cast<double>(img.height - 1));
    int x0 = static_cast<int>(std::floor(cx));
    int y0 = static_cast<int>(std::floor(cy));
    int x1 = std::min(x0 + 1, img.width - 1);
    int y1 = std::min(y0 + 1, img.height - 1);
    double fx = cx - x0;
    double fy = cy - y0;
    double v00 = img.at(x0, y0), v10 = img.at(x1, y0);
    double v01 = img.at(x0, y1), v11 = img.at(x1, y1);
    double top = v00 + fx * (v10 - v00);
    double bot = v01 + fx * (v11 - v01);
    return static_cast<float>(top + fy * (bot - top));
}

// Warp through the inverse of `fwd`: out(p) = in(fwd^-1(p)).
inline Image warp_affine(const Image& img, const Affine& fwd) {
    Affine inv = fwd.inverse();
    Image out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            Keypoint src = inv.apply({static_cast<double>(x), static_cast<double>(y)});
            out.at(x, y) = sample_bilinear(img, src.x, src.y);
        }
    }
    return out;
}

// Normalized 1-D Gaussian taps for a given kernel size and sigma. With the
// sigmas used for augmentation (sigma = 20, size 5 or 7) this degenerates to
// an almost uniform window, which is intentional.
inline std::vector<float> gaussian_kernel(int size, double sigma) {
    assert(size % 2 == 1);
    std::vector<float> k(size);
    int half = size / 2;
    double sum = 0.0;
    for (int i = 0; i < size; ++i) {
        double d = i - half;
        k[i] = static_cast<float>(std::exp(-d * d / (2.0 * sigma * sigma)));
        sum += k[i];
    }
    for (auto& v : k) v = static_cast<float>(v / sum);
    return k;
}

// Separable convolution with border replication.
inline Image convolve_separable(const Image& img, const std::vector<float>& kernel) {
    int half = static_cast<int>(kernel.size()) / 2;
    Image tmp(img.width, img.height);
    Image out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int i = -half; i <= half; ++i) {
                int xi = std::clamp(x + i, 0, img.width - 1);
                acc += kernel[i + half] * img.at(xi, y);
            }
            tmp.at(x, y) = static_cast<float>(acc);
        }
    }
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int i = -half; i <= half; ++i) {
                int yi = std::clamp(y + i, 0, img.height - 1);
                acc += kernel[i + half] * tmp.at(x, yi);
            }
            out.at(x, y) = static_cast<float>(acc);
        }
    }
    return out;
}

inline Image gaussian_blur(const Image& img, int kernel_size, double sigma) {
    return convolve_separable(img, gaussian_kernel(kernel_size, sigma));
}

// Modal intensity of the 2-px border ring, quantized to 256 bins. Serves as
// the background estimate for ROI detection and square padding.
inline float modal_border_intensity(const Image& img) {
    std::vector<int> hist(256, 0);
    auto add = [&](float v) {
        int bin = std::clamp(static_cast<int>(v * 255.0f + 0.5f), 0, 255);
        hist[bin]++;
    };
    int ring = std::min(2, std::min(img.width, img.height));
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            bool border = x < ring || y < ring || x >= img.width - ring || y >= img.height - ring;
            if (border) add(img.at(x, y));
        }
    }
    int best = 0;
    for (int i = 1; i < 256; ++i)
        if (hist[i] > hist[best]) best = i;
    return static_cast<float>(best) / 255.0f;
}

inline void clip_in_place(Image& img, float lo, float hi) {
    for (auto& v : img.data) v = std::clamp(v, lo, hi);
}

}  // namespace rivetkey
