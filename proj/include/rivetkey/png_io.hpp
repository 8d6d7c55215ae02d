#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "rivetkey/image.hpp"

namespace rivetkey {

// Grayscale images are stored as 16-bit PNG, intensities mapped linearly
// from [0,1] to [0,65535]. Writes are atomic (temp file + rename).
void write_png16(const Image& img, const std::filesystem::path& path);
Image read_png16(const std::filesystem::path& path);

// 8-bit RGB output for rendered figures.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::array<uint8_t, 3>> data;

    RgbImage(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h, {0, 0, 0}) {}
    std::array<uint8_t, 3>& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
};

void write_png_rgb(const RgbImage& img, const std::filesystem::path& path);

}  // namespace rivetkey
