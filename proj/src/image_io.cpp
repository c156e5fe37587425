#include "cts/image_io.hpp"

#include <png.h>

#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

namespace cts {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) throw IoError("cannot open " + path.string());
  return f;
}

std::uint8_t luminance(unsigned r, unsigned g, unsigned b) {
  // round(0.299R + 0.587G + 0.114B), exact in integers.
  return static_cast<std::uint8_t>((299 * r + 587 * g + 114 * b + 500) / 1000);
}

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> gray;
};

[[noreturn]] void png_error_fn(png_structp png, png_const_charp msg) {
  auto* text = static_cast<std::string*>(png_get_error_ptr(png));
  if (text) *text = msg;
  png_longjmp(png, 1);
}

void png_warning_fn(png_structp, png_const_charp) {}

// Decodes any PNG into 8-bit RGB.
RgbImage read_png_rgb(std::FILE* fp, const std::filesystem::path& path) {
  std::string error;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, png_error_fn, png_warning_fn);
  if (!png) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("libpng init failed");
  }

  RgbImage img;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw FormatError("corrupt PNG " + path.string() + ": " + error);
  }
  png_init_io(png, fp);
  png_read_info(png, info);

  const auto color = png_get_color_type(png, info);
  if (png_get_bit_depth(png, info) == 16) png_set_strip_16(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) png_set_gray_to_rgb(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  img = RgbImage(static_cast<int>(png_get_image_width(png, info)), static_cast<int>(png_get_image_height(png, info)));
  if (png_get_rowbytes(png, info) != static_cast<png_size_t>(img.width) * 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw FormatError("unsupported PNG layout in " + path.string());
  }
  rows.resize(static_cast<std::size_t>(img.height));
  for (int y = 0; y < img.height; ++y) rows[y] = img.rgb.data() + static_cast<std::size_t>(y) * img.width * 3;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

void write_png(const std::filesystem::path& path, int width, int height, int color_type, int channels,
               const std::uint8_t* data) {
  auto fp = open_file(path, "wb");
  std::string error;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, png_error_fn, png_warning_fn);
  if (!png) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("failed writing " + path.string() + ": " + error);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::size_t stride = static_cast<std::size_t>(width) * static_cast<std::size_t>(channels);
  for (int y = 0; y < height; ++y) png_write_row(png, data + static_cast<std::size_t>(y) * stride);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  if (std::fflush(fp.get()) != 0) throw IoError("failed writing " + path.string());
}

// P5 with maxval <= 255; samples are rescaled to 0..255.
GrayImage read_pgm(std::FILE* fp, const std::filesystem::path& path) {
  auto next_token = [&]() -> std::string {
    std::string tok;
    int c;
    while ((c = std::fgetc(fp)) != EOF) {
      if (c == '#') {
        while ((c = std::fgetc(fp)) != EOF && c != '\n') {
        }
        continue;
      }
      if (std::isspace(c)) {
        if (!tok.empty()) break;
        continue;
      }
      tok.push_back(static_cast<char>(c));
    }
    return tok;
  };
  const std::string magic = next_token();
  if (magic != "P5") throw FormatError("not a binary PGM: " + path.string());
  int width = 0, height = 0, maxval = 0;
  try {
    width = std::stoi(next_token());
    height = std::stoi(next_token());
    maxval = std::stoi(next_token());
  } catch (const std::exception&) {
    throw FormatError("malformed PGM header in " + path.string());
  }
  if (width <= 0 || height <= 0 || maxval <= 0) throw FormatError("malformed PGM header in " + path.string());
  if (maxval > 255) throw FormatError("16-bit PGM is not supported: " + path.string());

  GrayImage img{width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height)};
  if (std::fread(img.gray.data(), 1, img.gray.size(), fp) != img.gray.size()) {
    throw FormatError("truncated PGM data in " + path.string());
  }
  if (maxval != 255) {
    for (auto& v : img.gray) {
      if (v > maxval) throw FormatError("PGM sample exceeds maxval in " + path.string());
      v = static_cast<std::uint8_t>((v * 255 * 2 + maxval) / (2 * maxval));
    }
  }
  return img;
}

enum class Kind { png, pgm };

Kind sniff(std::FILE* fp, const std::filesystem::path& path) {
  std::array<unsigned char, 8> sig{};
  const auto n = std::fread(sig.data(), 1, sig.size(), fp);
  std::rewind(fp);
  if (n == 8 && png_sig_cmp(sig.data(), 0, 8) == 0) return Kind::png;
  if (n >= 2 && sig[0] == 'P' && sig[1] == '5') return Kind::pgm;
  throw FormatError("unsupported image format: " + path.string());
}

}  // namespace

BinaryMask load_mask(const std::filesystem::path& path, int binarize_threshold) {
  if (binarize_threshold < 0 || binarize_threshold > 255) throw ContractError("binarize threshold must be 0..255");
  auto fp = open_file(path, "rb");
  std::vector<std::uint8_t> gray;
  int width = 0, height = 0;
  if (sniff(fp.get(), path) == Kind::png) {
    const RgbImage rgb = read_png_rgb(fp.get(), path);
    width = rgb.width;
    height = rgb.height;
    gray.resize(static_cast<std::size_t>(width) * height);
    for (std::size_t i = 0; i < gray.size(); ++i) {
      gray[i] = luminance(rgb.rgb[3 * i], rgb.rgb[3 * i + 1], rgb.rgb[3 * i + 2]);
    }
  } else {
    GrayImage g = read_pgm(fp.get(), path);
    width = g.width;
    height = g.height;
    gray = std::move(g.gray);
  }
  for (auto& v : gray) v = v >= binarize_threshold ? 1 : 0;
  return BinaryMask(width, height, std::move(gray));
}

RgbImage load_rgb_png(const std::filesystem::path& path) {
  auto fp = open_file(path, "rb");
  if (sniff(fp.get(), path) != Kind::png) throw FormatError("not a PNG: " + path.string());
  return read_png_rgb(fp.get(), path);
}

void save_gray_png(int width, int height, const std::vector<std::uint8_t>& gray, const std::filesystem::path& path) {
  if (gray.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw ContractError("gray buffer size mismatch");
  }
  write_png(path, width, height, PNG_COLOR_TYPE_GRAY, 1, gray.data());
}

void save_mask_png(const BinaryMask& mask, const std::filesystem::path& path) {
  std::vector<std::uint8_t> gray(mask.pixels().begin(), mask.pixels().end());
  for (auto& v : gray) v = v ? 255 : 0;
  save_gray_png(mask.width(), mask.height(), gray, path);
}

void save_mask_pgm(const BinaryMask& mask, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string());
  out << "P5\n" << mask.width() << ' ' << mask.height() << "\n255\n";
  for (const auto v : mask.pixels()) out.put(v ? static_cast<char>(255) : '\0');
  if (!out) throw IoError("failed writing " + path.string());
}

void save_rgb_png(const RgbImage& image, const std::filesystem::path& path) {
  write_png(path, image.width, image.height, PNG_COLOR_TYPE_RGB, 3, image.rgb.data());
}

}  // namespace cts
