#include "hazelab/io.hpp"

#include <png.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hazelab/error.hpp"

namespace hazelab {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
    FilePtr f(std::fopen(path.string().c_str(), mode));
    if (!f) {
        throw IoError("cannot open '" + path.string() + "': " + std::strerror(errno));
    }
    return f;
}

std::uint8_t to_byte(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

[[noreturn]] void png_error_handler(png_structp png, png_const_charp msg) {
    auto* message = static_cast<std::string*>(png_get_error_ptr(png));
    if (message) {
        *message = msg;
    }
    png_longjmp(png, 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

}  // namespace

RgbImage quantize_8bit(const RgbImage& img) {
    RgbImage out = img;
    for (int c = 0; c < RgbImage::kChannels; ++c) {
        for (double& v : out.plane(c).samples()) {
            v = to_byte(v) / 255.0;
        }
    }
    return out;
}

RgbImage read_png(const std::filesystem::path& path) {
    FilePtr f = open_file(path, "rb");
    std::uint8_t sig[8];
    if (std::fread(sig, 1, 8, f.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
        throw IoError("'" + path.string() + "' is not a PNG file");
    }

    std::string message;
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &message, png_error_handler, png_warning_handler);
    if (!png) {
        throw IoError("libpng initialisation failed");
    }
    png_infop info = png_create_info_struct(png);
    std::vector<png_bytep> rows;
    std::vector<std::uint8_t> buffer;
    png_uint_32 width = 0;
    png_uint_32 height = 0;
    int bit_depth = 0;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("cannot decode '" + path.string() + "': " + message);
    }
    png_init_io(png, f.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    width = png_get_image_width(png, info);
    height = png_get_image_height(png, info);
    bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
    }
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    if (png_get_valid(png, info, PNG_INFO_tRNS)) {
        png_set_tRNS_to_alpha(png);
    }
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(png);
    }
    png_set_strip_alpha(png);
    if (bit_depth == 16) {
        png_set_swap(png);  // little-endian 16-bit samples in memory
    }
    png_read_update_info(png, info);

    const std::size_t rowbytes = png_get_rowbytes(png, info);
    buffer.resize(rowbytes * height);
    rows.resize(height);
    for (png_uint_32 y = 0; y < height; ++y) {
        rows[y] = buffer.data() + y * rowbytes;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    const bool wide = png_get_bit_depth(png, info) == 16;
    png_destroy_read_struct(&png, &info, nullptr);

    RgbImage img(static_cast<int>(width), static_cast<int>(height));
    for (png_uint_32 y = 0; y < height; ++y) {
        const std::uint8_t* row = rows[y];
        for (png_uint_32 x = 0; x < width; ++x) {
            for (int c = 0; c < 3; ++c) {
                double v;
                if (wide) {
                    const std::size_t o = (x * 3 + static_cast<std::size_t>(c)) * 2;
                    v = static_cast<double>(row[o] | (row[o + 1] << 8)) / 65535.0;
                } else {
                    v = row[x * 3 + static_cast<std::size_t>(c)] / 255.0;
                }
                img.at(c, static_cast<int>(x), static_cast<int>(y)) = v;
            }
        }
    }
    return img;
}

void write_png(const std::filesystem::path& path, const RgbImage& img) {
    FilePtr f = open_file(path, "wb");
    std::string message;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &message, png_error_handler, png_warning_handler);
    if (!png) {
        throw IoError("libpng initialisation failed");
    }
    png_infop info = png_create_info_struct(png);

    const auto w = static_cast<std::size_t>(img.width());
    std::vector<std::uint8_t> row(w * 3);

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("cannot write '" + path.string() + "': " + message);
    }
    png_init_io(png, f.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()), static_cast<png_uint_32>(img.height()), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height(); ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            for (int c = 0; c < 3; ++c) {
                row[x * 3 + static_cast<std::size_t>(c)] = to_byte(img.at(c, static_cast<int>(x), y));
            }
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    if (std::fflush(f.get()) != 0) {
        throw IoError("cannot write '" + path.string() + "'");
    }
}

GrayImage read_pfm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::string magic;
    int width = 0;
    int height = 0;
    double scale = 0.0;
    in >> magic >> width >> height >> scale;
    if (!in || magic != "Pf") {
        throw IoError("'" + path.string() + "' is not a single-channel PFM (expected 'Pf' header)");
    }
    if (width <= 0 || height <= 0 || scale == 0.0) {
        throw IoError("'" + path.string() + "': invalid PFM header");
    }
    in.get();  // single whitespace after the scale
    const bool little = scale < 0.0;
    const bool swap = little != (std::endian::native == std::endian::little);

    GrayImage img(width, height);
    std::vector<std::uint32_t> raw(static_cast<std::size_t>(width));
    for (int y = height - 1; y >= 0; --y) {
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 4));
        if (!in) {
            throw IoError("'" + path.string() + "': truncated PFM data");
        }
        for (int x = 0; x < width; ++x) {
            std::uint32_t bits = raw[static_cast<std::size_t>(x)];
            if (swap) {
                bits = __builtin_bswap32(bits);
            }
            img.at(x, y) = static_cast<double>(std::bit_cast<float>(bits));
        }
    }
    return img;
}

void write_pfm(const std::filesystem::path& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << "Pf\n" << img.width() << ' ' << img.height() << "\n-1.0\n";
    std::vector<std::uint32_t> raw(static_cast<std::size_t>(img.width()));
    for (int y = img.height() - 1; y >= 0; --y) {
        for (int x = 0; x < img.width(); ++x) {
            std::uint32_t bits = std::bit_cast<std::uint32_t>(static_cast<float>(img.at(x, y)));
            if constexpr (std::endian::native != std::endian::little) {
                bits = __builtin_bswap32(bits);
            }
            raw[static_cast<std::size_t>(x)] = bits;
        }
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 4));
    }
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
}

}  // namespace hazelab
