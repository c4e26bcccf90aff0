#include "ssn/colorspace.hpp"

#include "ssn/error.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ssn;
using ssn::testing::constant_image;
using ssn::testing::random_image;

TEST_CASE("I1I2I3 of pure red before normalization") {
    const auto raw = convert_pixel(ColorSpace::I1I2I3, 255, 0, 0);
    CHECK(raw[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(raw[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(raw[2] == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("RGB white stays at the top of the range") {
    const auto planes = to_color_space(constant_image(4, 4, 3, 255), ColorSpace::RGB);
    for (int c = 0; c < 3; ++c)
        for (const auto v : planes.planes[c])
            CHECK(v == 255);
}

TEST_CASE("RGB conversion at L=255 is the identity") {
    const RawImage img = random_image(16, 16, 3, 11);
    const auto planes = to_color_space(img, ColorSpace::RGB, 255);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x)
            for (int c = 0; c < 3; ++c)
                CHECK(planes.at(x, y, c) == img.at(x, y, c));
}

TEST_CASE("HSV of a gray ramp: V is the ramp, S and H are zero") {
    RawImage img;
    img.width = 256;
    img.height = 1;
    img.channels = 3;
    img.data.resize(256 * 3);
    for (int x = 0; x < 256; ++x)
        for (int c = 0; c < 3; ++c)
            img.at(x, 0, c) = static_cast<std::uint8_t>(x);
    const auto planes = to_color_space(img, ColorSpace::HSV, 255);
    for (int x = 0; x < 256; ++x) {
        CHECK(planes.at(x, 0, 0) == 0); // undefined hue pinned to 0
        CHECK(planes.at(x, 0, 1) == 0);
        CHECK(planes.at(x, 0, 2) == x);
    }
}

TEST_CASE("LAB of white is L=100 with neutral chroma") {
    const auto raw = convert_pixel(ColorSpace::LAB, 255, 255, 255);
    CHECK(raw[0] == doctest::Approx(100.0).epsilon(1e-6));
    CHECK(std::abs(raw[1]) < 1e-3);
    CHECK(std::abs(raw[2]) < 1e-3);
}

TEST_CASE("channel ranges are the documented constants") {
    CHECK(channel_range(ColorSpace::RGB, 0) == std::pair{0.0, 255.0});
    CHECK(channel_range(ColorSpace::HSV, 0) == std::pair{0.0, 360.0});
    CHECK(channel_range(ColorSpace::HSV, 1) == std::pair{0.0, 1.0});
    CHECK(channel_range(ColorSpace::LAB, 0) == std::pair{0.0, 100.0});
    CHECK(channel_range(ColorSpace::LAB, 1) == std::pair{-128.0, 127.0});
    CHECK(channel_range(ColorSpace::I1I2I3, 0) == std::pair{0.0, 1.0});
    CHECK(channel_range(ColorSpace::I1I2I3, 2) == std::pair{-0.5, 0.5});
}

TEST_CASE("quantization is monotone along a gray ramp in every space") {
    for (const ColorSpace space :
         {ColorSpace::RGB, ColorSpace::LAB, ColorSpace::HSV, ColorSpace::I1I2I3}) {
        RawImage img;
        img.width = 256;
        img.height = 1;
        img.channels = 3;
        img.data.resize(256 * 3);
        for (int x = 0; x < 256; ++x)
            for (int c = 0; c < 3; ++c)
                img.at(x, 0, c) = static_cast<std::uint8_t>(x);
        const auto planes = to_color_space(img, space, 255);
        for (int c = 0; c < 3; ++c)
            for (int x = 1; x < 256; ++x) {
                // Gray ramps are nondecreasing in L, V, I1 and constant in
                // the chroma channels.
                if (c == 0 && space != ColorSpace::HSV)
                    CHECK(planes.at(x - 1, 0, c) <= planes.at(x, 0, c));
                if (space == ColorSpace::HSV && c == 2)
                    CHECK(planes.at(x - 1, 0, c) <= planes.at(x, 0, c));
            }
    }
}

TEST_CASE("quantized values stay inside [0, L]") {
    const RawImage img = random_image(32, 32, 3, 5);
    for (const ColorSpace space :
         {ColorSpace::RGB, ColorSpace::LAB, ColorSpace::HSV, ColorSpace::I1I2I3}) {
        for (const int levels : {255, 100, 1}) {
            const auto planes = to_color_space(img, space, levels);
            CHECK(planes.levels == levels);
            for (int c = 0; c < 3; ++c)
                for (const auto v : planes.planes[c]) {
                    CHECK(v >= 0);
                    CHECK(v <= levels);
                }
        }
    }
}

TEST_CASE("I1I2I3 is linear in the RGB inputs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const double r1 = rng() % 256, g1 = rng() % 256, b1 = rng() % 256;
        const double r2 = rng() % 256, g2 = rng() % 256, b2 = rng() % 256;
        const double t = (rng() % 1000) / 999.0;
        const auto a = convert_pixel(ColorSpace::I1I2I3, r1, g1, b1);
        const auto b = convert_pixel(ColorSpace::I1I2I3, r2, g2, b2);
        const auto mix = convert_pixel(ColorSpace::I1I2I3, t * r1 + (1 - t) * r2,
                                       t * g1 + (1 - t) * g2, t * b1 + (1 - t) * b2);
        for (int c = 0; c < 3; ++c)
            CHECK(mix[c] ==
                  doctest::Approx(t * a[c] + (1 - t) * b[c]).epsilon(1e-12));
    }
}

TEST_CASE("channel count mismatches are explicit errors") {
    CHECK_THROWS_AS(to_color_space(constant_image(4, 4, 3, 10), ColorSpace::GRAY),
                    Error);
    CHECK_THROWS_AS(to_color_space(constant_image(4, 4, 1, 10), ColorSpace::RGB),
                    Error);
    CHECK_THROWS_AS(to_color_space(constant_image(4, 4, 3, 10), ColorSpace::RGB, 0),
                    Error);
    CHECK_NOTHROW(to_color_space(constant_image(4, 4, 1, 10), ColorSpace::GRAY));
}

TEST_CASE("color space names round-trip") {
    for (const ColorSpace space :
         {ColorSpace::RGB, ColorSpace::LAB, ColorSpace::HSV, ColorSpace::I1I2I3,
          ColorSpace::GRAY})
        CHECK(color_space_from_name(color_space_name(space)) == space);
    CHECK_THROWS_AS(color_space_from_name("xyz"), Error);
}
