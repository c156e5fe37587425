#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "cts/mask.hpp"

namespace cts {

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), rgb(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3, 0) {}

  struct Color {
    std::uint8_t r, g, b;
    friend bool operator==(const Color&, const Color&) = default;
  };
  Color at(int x, int y) const {
    const auto i = offset(x, y);
    return {rgb[i], rgb[i + 1], rgb[i + 2]};
  }
  void set(int x, int y, Color c) {
    const auto i = offset(x, y);
    rgb[i] = c.r;
    rgb[i + 1] = c.g;
    rgb[i + 2] = c.b;
  }

 private:
  std::size_t offset(int x, int y) const {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)) * 3;
  }
};

inline constexpr int kDefaultBinarizeThreshold = 128;

/// Reads PNG (8/16-bit gray, RGB, palette; alpha ignored) or binary PGM (P5).
/// Colour is reduced to integer luminance round(0.299R + 0.587G + 0.114B);
/// a pixel is foreground iff luminance >= threshold.
BinaryMask load_mask(const std::filesystem::path& path, int binarize_threshold = kDefaultBinarizeThreshold);

/// Foreground written as 255, background as 0.
void save_mask_png(const BinaryMask& mask, const std::filesystem::path& path);
void save_mask_pgm(const BinaryMask& mask, const std::filesystem::path& path);
void save_rgb_png(const RgbImage& image, const std::filesystem::path& path);

/// Raw 8-bit grayscale/RGB writers, used to produce fixtures.
void save_gray_png(int width, int height, const std::vector<std::uint8_t>& gray, const std::filesystem::path& path);
RgbImage load_rgb_png(const std::filesystem::path& path);

}  // namespace cts
