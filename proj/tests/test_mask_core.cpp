#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "cts/components.hpp"
#include "cts/image_io.hpp"
#include "cts/morphology.hpp"
#include "testkit.hpp"

using namespace cts;
namespace fs = std::filesystem;

namespace {

BinaryMask random_noise(int w, int h, std::mt19937& rng, double density) {
  std::bernoulli_distribution on(density);
  BinaryMask m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) m.set(x, y, on(rng));
  return m;
}

fs::path temp_file(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "cts_mask_core_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("BinaryMask rejects malformed buffers") {
  CHECK_THROWS_AS(BinaryMask(2, 2, {0, 1, 0}), ContractError);
  CHECK_THROWS_AS(BinaryMask(2, 1, {0, 2}), ContractError);
  const BinaryMask ok(2, 1, {0, 1});
  CHECK(ok.count() == 1);
}

TEST_CASE("mask_from_nonzero treats any nonzero element as foreground") {
  const std::vector<int> v{0, -3, 7, 0};
  const BinaryMask m = mask_from_nonzero<int>(v, 2, 2);
  CHECK(m == BinaryMask(2, 2, {0, 1, 1, 0}));
  CHECK_THROWS_AS(mask_from_nonzero<int>(v, 3, 1), ContractError);
}

TEST_CASE("DiskElement offsets") {
  CHECK(DiskElement(0).offsets().size() == 1);
  CHECK(DiskElement(1).offsets().size() == 5);
  CHECK(DiskElement(2).offsets().size() == 13);
  CHECK(DiskElement(10).offsets().size() == 317);
  for (int r = 0; r <= 6; ++r) {
    const DiskElement d(r);
    const auto& off = d.offsets();
    CHECK(std::find(off.begin(), off.end(), std::pair{0, 0}) != off.end());
    for (const auto& [dx, dy] : off) {
      CHECK(dx * dx + dy * dy <= r * r);
      CHECK(std::find(off.begin(), off.end(), std::pair{-dx, -dy}) != off.end());
    }
  }
}

TEST_CASE("dilate examples") {
  std::mt19937 rng(7);
  const BinaryMask noise = random_noise(12, 9, rng, 0.2);
  CHECK(dilate(noise, DiskElement(0)) == noise);

  BinaryMask dot7(7, 7);
  dot7.set(3, 3);
  const BinaryMask plus = testkit::from_ascii({
      ".......",
      ".......",
      "...#...",
      "..###..",
      "...#...",
      ".......",
      ".......",
  });
  CHECK(dilate(dot7, DiskElement(1)) == plus);

  BinaryMask dot9(9, 9);
  dot9.set(4, 4);
  const BinaryMask disk2 = dilate(dot9, DiskElement(2));
  CHECK(disk2.count() == 13);
  CHECK(disk2 == testkit::from_ascii({
                     ".........",
                     ".........",
                     "....#....",
                     "...###...",
                     "..#####..",
                     "...###...",
                     "....#....",
                     ".........",
                     ".........",
                 }));
}

TEST_CASE("erode examples") {
  std::mt19937 rng(8);
  const BinaryMask noise = random_noise(10, 10, rng, 0.6);
  CHECK(erode(noise, DiskElement(0)) == noise);

  const BinaryMask full(5, 5, std::vector<std::uint8_t>(25, 1));
  CHECK(erode(full, DiskElement(1)) == testkit::from_ascii({
                                           ".....",
                                           ".###.",
                                           ".###.",
                                           ".###.",
                                           ".....",
                                       }));
  for (int r = 0; r < 4; ++r) CHECK(erode(BinaryMask(6, 6), DiskElement(r)).count() == 0);
}

TEST_CASE("dilate and erode agree with offset enumeration on random masks") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int w = 5 + static_cast<int>(rng() % 20), h = 5 + static_cast<int>(rng() % 20);
    const BinaryMask m = random_noise(w, h, rng, trial % 2 ? 0.1 : 0.7);
    const int r = static_cast<int>(rng() % 6);
    CHECK(dilate(m, DiskElement(r)) == testkit::brute_dilate(m, r));
    CHECK(erode(m, DiskElement(r)) == testkit::brute_erode(m, r));
  }
}

TEST_CASE("morphology properties: extensivity and monotonicity") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const BinaryMask a = random_noise(16, 16, rng, 0.3);
    BinaryMask b = a;
    const BinaryMask extra = random_noise(16, 16, rng, 0.2);
    for (const auto& p : extra.coords()) b.set(p);
    const DiskElement se(static_cast<int>(rng() % 4));
    CHECK(is_subset(a, dilate(a, se)));
    CHECK(is_subset(erode(a, se), a));
    CHECK(is_subset(dilate(a, se), dilate(b, se)));
    CHECK(is_subset(erode(a, se), erode(b, se)));
  }
}

TEST_CASE("connected_components connectivity rules") {
  CHECK(connected_components(BinaryMask(4, 4), Connectivity::eight).component_count() == 0);
  BinaryMask diag(3, 3);
  diag.set(0, 0);
  diag.set(1, 1);
  CHECK(connected_components(diag, Connectivity::eight).component_count() == 1);
  CHECK(connected_components(diag, Connectivity::four).component_count() == 2);

  const BinaryMask m = testkit::from_ascii({
      "..#..#",
      ".##...",
      "......",
      "#....#",
  });
  const Labeling l = connected_components(m, Connectivity::four);
  REQUIRE(l.component_count() == 4);
  CHECK(l.at(2, 0) == 1);
  CHECK(l.at(1, 1) == 1);
  CHECK(l.at(5, 0) == 2);
  CHECK(l.at(0, 3) == 3);
  CHECK(l.at(5, 3) == 4);
  CHECK(l.sizes == std::vector<std::size_t>{3, 1, 1, 1});
}

TEST_CASE("connected_components matches a union-find oracle") {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const BinaryMask m = random_noise(16, 16, rng, 0.45);
    for (const int conn : {4, 8}) {
      int count = 0;
      const auto expected = testkit::union_find_labels(m, conn, count);
      const Labeling got = connected_components(m, conn == 4 ? Connectivity::four : Connectivity::eight);
      CHECK(static_cast<int>(got.component_count()) == count);
      CHECK(std::vector<int>(got.labels.begin(), got.labels.end()) == expected);
    }
    CHECK(connected_components(m, Connectivity::eight).component_count() <=
          connected_components(m, Connectivity::four).component_count());
  }
}

TEST_CASE("border_reachable_background") {
  CHECK(border_reachable_background(BinaryMask(4, 3)).count() == 12);
  CHECK(border_reachable_background(BinaryMask(3, 3, std::vector<std::uint8_t>(9, 1))).count() == 0);

  const BinaryMask ringed = testkit::from_ascii({
      ".....",
      ".###.",
      ".#.#.",
      ".###.",
      ".....",
  });
  const BinaryMask reached = border_reachable_background(ringed);
  CHECK_FALSE(reached.at(2, 2));
  CHECK(reached.count() == 16);
  for (const auto& p : reached.coords()) CHECK_FALSE(ringed.at(p));

  // Diagonal gaps do not leak under 4-connectivity.
  const BinaryMask diamond = testkit::from_ascii({
      "..#..",
      ".#.#.",
      "#...#",
      ".#.#.",
      "..#..",
  });
  const BinaryMask r2 = border_reachable_background(diamond);
  CHECK_FALSE(r2.at(2, 2));
  CHECK_FALSE(r2.at(1, 2));
  CHECK(r2.at(0, 0));
}

TEST_CASE("border_reachable_background output is background and border-connected") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const BinaryMask m = random_noise(14, 11, rng, 0.45);
    const BinaryMask r = border_reachable_background(m);
    for (const auto& p : r.coords()) CHECK_FALSE(m.at(p));
    // Every 4-component of the result contains a border pixel.
    const Labeling l = connected_components(r, Connectivity::four);
    std::vector<bool> on_border(l.component_count() + 1, false);
    for (const auto& p : r.coords())
      if (p.x == 0 || p.y == 0 || p.x == m.width() - 1 || p.y == m.height() - 1) on_border[l.at(p.x, p.y)] = true;
    for (std::size_t k = 1; k <= l.component_count(); ++k) CHECK(on_border[k]);
  }
}

TEST_CASE("load_mask binarizes PNG and PGM input") {
  const auto black = temp_file("black.png");
  save_gray_png(4, 4, std::vector<std::uint8_t>(16, 0), black);
  CHECK(load_mask(black) == BinaryMask(4, 4));

  const auto white = temp_file("white.png");
  save_gray_png(4, 4, std::vector<std::uint8_t>(16, 255), white);
  CHECK(load_mask(white) == BinaryMask(4, 4, std::vector<std::uint8_t>(16, 1)));

  const auto ramp = temp_file("ramp.png");
  save_gray_png(2, 2, {0, 127, 128, 255}, ramp);
  CHECK(load_mask(ramp) == BinaryMask(2, 2, {0, 0, 1, 1}));
  CHECK(load_mask(ramp, 1) == BinaryMask(2, 2, {0, 1, 1, 1}));

  const BinaryMask m(3, 2, {1, 0, 1, 0, 1, 1});
  const auto pgm = temp_file("m.pgm");
  save_mask_pgm(m, pgm);
  CHECK(load_mask(pgm) == m);
  const auto png = temp_file("m.png");
  save_mask_png(m, png);
  CHECK(load_mask(png) == m);
}

TEST_CASE("load_mask converts RGB through integer luminance") {
  RgbImage img(4, 1);
  img.set(0, 0, {255, 0, 0});    // 76
  img.set(1, 0, {0, 255, 0});    // 150
  img.set(2, 0, {0, 0, 255});    // 29
  img.set(3, 0, {128, 128, 128});  // 128
  const auto path = temp_file("rgb.png");
  save_rgb_png(img, path);
  CHECK(load_mask(path) == BinaryMask(4, 1, {0, 1, 0, 1}));
  CHECK(load_mask(path, 76) == BinaryMask(4, 1, {1, 1, 0, 1}));
  CHECK(load_mask(path, 77) == BinaryMask(4, 1, {0, 1, 0, 1}));
}

TEST_CASE("load_mask errors") {
  CHECK_THROWS_AS(load_mask(temp_file("does_not_exist.png")), IoError);
  const auto junk = temp_file("junk.bmp");
  {
    std::ofstream(junk) << "BM not an image";
  }
  CHECK_THROWS_AS(load_mask(junk), FormatError);
  const auto truncated = temp_file("short.pgm");
  {
    std::ofstream(truncated, std::ios::binary) << "P5\n4 4\n255\nab";
  }
  CHECK_THROWS_AS(load_mask(truncated), FormatError);
  const auto deep = temp_file("deep.pgm");
  {
    std::ofstream(deep, std::ios::binary) << "P5\n1 1\n65535\nab";
  }
  CHECK_THROWS_AS(load_mask(deep), FormatError);
}
