#pragma once

#include "ssn/image.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ssn {

enum class ColorSpace { RGB, LAB, HSV, I1I2I3, GRAY };

const char* color_space_name(ColorSpace s);
ColorSpace color_space_from_name(const std::string& name);

// Quantized multi-channel image: the vertex substrate of the network.
// Every plane value lies in [0, levels].
struct ColorPlanes {
    int width = 0;
    int height = 0;
    int channels = 0;
    int levels = 255;
    ColorSpace space = ColorSpace::RGB;
    std::vector<std::vector<std::int32_t>> planes; // one w*h grid per channel

    std::int32_t at(int x, int y, int c) const {
        return planes[c][static_cast<std::size_t>(y) * width + x];
    }
};

// Fixed normalization bounds per space and channel: RGB [0,255]^3;
// HSV [0,360) x [0,1]^2; LAB L in [0,100], a,b in [-128,127];
// I1I2I3 I1 in [0,1], I2,I3 in [-1/2,1/2].
std::pair<double, double> channel_range(ColorSpace space, int channel);

// Raw space values for one RGB pixel (inputs in [0,255]): H in degrees,
// L* in [0,100], I2 in [-1/2,1/2], and so on per channel_range.
std::array<double, 3> convert_pixel(ColorSpace space, double r, double g, double b);

// Convert, normalize each channel into [0,1] by its fixed range, and
// quantize to integers in [0,levels] by round(v*levels).
ColorPlanes to_color_space(const RawImage& img, ColorSpace space, int levels = 255);

} // namespace ssn
