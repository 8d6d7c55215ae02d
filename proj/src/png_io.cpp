#include "rivetkey/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>

#include "rivetkey/errors.hpp"

namespace rivetkey {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

// Write to <path>.tmp then rename, so readers never observe partial files.
class AtomicFile {
public:
    explicit AtomicFile(const std::filesystem::path& path)
        : final_(path), tmp_(path.string() + ".tmp"), file_(std::fopen(tmp_.c_str(), "wb")) {
        if (!file_) throw IoError("cannot open for writing: " + tmp_.string());
    }
    ~AtomicFile() {
        if (file_) {
            std::fclose(file_);
            std::error_code ec;
            std::filesystem::remove(tmp_, ec);
        }
    }
    FILE* get() { return file_; }
    void commit() {
        std::fclose(file_);
        file_ = nullptr;
        std::error_code ec;
        std::filesystem::rename(tmp_, final_, ec);
        if (ec) throw IoError("rename failed for " + final_.string() + ": " + ec.message());
    }

private:
    std::filesystem::path final_;
    std::filesystem::path tmp_;
    FILE* file_;
};

}  // namespace

void write_png16(const Image& img, const std::filesystem::path& path) {
    AtomicFile out(path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng error while writing " + path.string());
    }

    png_init_io(png, out.get());
    png_set_IHDR(png, info, img.width, img.height, 16, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<uint8_t> row(static_cast<size_t>(img.width) * 2);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            float v = std::clamp(img.at(x, y), 0.0f, 1.0f);
            auto u = static_cast<uint16_t>(std::lround(v * 65535.0));
            row[2 * x] = static_cast<uint8_t>(u >> 8);  // PNG is big-endian
            row[2 * x + 1] = static_cast<uint8_t>(u & 0xff);
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    out.commit();
}

Image read_png16(const std::filesystem::path& path) {
    FilePtr f(std::fopen(path.string().c_str(), "rb"));
    if (!f) throw IoError("cannot open for reading: " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("libpng error while reading " + path.string());
    }

    png_init_io(png, f.get());
    png_read_info(png, info);

    png_uint_32 w = png_get_image_width(png, info);
    png_uint_32 h = png_get_image_height(png, info);
    int depth = png_get_bit_depth(png, info);
    int color = png_get_color_type(png, info);

    // Normalize everything to 16-bit grayscale.
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA ||
        color == PNG_COLOR_TYPE_PALETTE)
        png_set_rgb_to_gray_fixed(png, 1, -1, -1);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    if (depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    png_read_update_info(png, info);
    depth = png_get_bit_depth(png, info);

    Image img(static_cast<int>(w), static_cast<int>(h));
    std::vector<uint8_t> row(png_get_rowbytes(png, info));
    for (png_uint_32 y = 0; y < h; ++y) {
        png_read_row(png, row.data(), nullptr);
        for (png_uint_32 x = 0; x < w; ++x) {
            uint16_t u;
            if (depth == 16)
                u = static_cast<uint16_t>((row[2 * x] << 8) | row[2 * x + 1]);
            else
                u = static_cast<uint16_t>(row[x] * 257);  // 8-bit -> 16-bit
            img.at(static_cast<int>(x), static_cast<int>(y)) = u / 65535.0f;
        }
    }
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png_rgb(const RgbImage& img, const std::filesystem::path& path) {
    AtomicFile out(path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng error while writing " + path.string());
    }

    png_init_io(png, out.get());
    png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<uint8_t> row(static_cast<size_t>(img.width) * 3);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const auto& px = img.data[static_cast<size_t>(y) * img.width + x];
            row[3 * x] = px[0];
            row[3 * x + 1] = px[1];
            row[3 * x + 2] = px[2];
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    out.commit();
}

}  // namespace rivetkey
