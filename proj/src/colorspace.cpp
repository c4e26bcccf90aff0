#include "ssn/colorspace.hpp"

#include "ssn/error.hpp"

#include <algorithm>
#include <cmath>

namespace ssn {

namespace {

// sRGB linearization and CIE 1976 f(t), D65 reference white.
double srgb_to_linear(double v) {
    return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

double lab_f(double t) {
    constexpr double kDelta3 = 216.0 / 24389.0; // (6/29)^3
    return t > kDelta3 ? std::cbrt(t) : t * (24389.0 / 27.0) / 116.0 + 16.0 / 116.0;
}

constexpr double kD65X = 0.95047;
constexpr double kD65Y = 1.00000;
constexpr double kD65Z = 1.08883;

std::array<double, 3> rgb_to_lab(double r, double g, double b) {
    const double rl = srgb_to_linear(r);
    const double gl = srgb_to_linear(g);
    const double bl = srgb_to_linear(b);
    const double x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
    const double y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
    const double z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;
    const double fx = lab_f(x / kD65X);
    const double fy = lab_f(y / kD65Y);
    const double fz = lab_f(z / kD65Z);
    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

std::array<double, 3> rgb_to_hsv(double r, double g, double b) {
    const double v = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    const double c = v - mn;
    const double s = v <= 0.0 ? 0.0 : c / v;
    double h = 0.0; // undefined hue (s == 0) maps to 0
    if (c > 0.0) {
        if (v == r)
            h = 60.0 * std::fmod((g - b) / c + 6.0, 6.0);
        else if (v == g)
            h = 60.0 * ((b - r) / c + 2.0);
        else
            h = 60.0 * ((r - g) / c + 4.0);
        if (h >= 360.0)
            h -= 360.0;
    }
    return {h, s, v};
}

} // namespace

const char* color_space_name(ColorSpace s) {
    switch (s) {
        case ColorSpace::RGB: return "rgb";
        case ColorSpace::LAB: return "lab";
        case ColorSpace::HSV: return "hsv";
        case ColorSpace::I1I2I3: return "i1i2i3";
        case ColorSpace::GRAY: return "gray";
    }
    return "?";
}

ColorSpace color_space_from_name(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (n == "rgb") return ColorSpace::RGB;
    if (n == "lab") return ColorSpace::LAB;
    if (n == "hsv") return ColorSpace::HSV;
    if (n == "i1i2i3") return ColorSpace::I1I2I3;
    if (n == "gray" || n == "grey") return ColorSpace::GRAY;
    throw Error(ErrorCategory::Format, "unknown color space: " + name);
}

std::pair<double, double> channel_range(ColorSpace space, int channel) {
    switch (space) {
        case ColorSpace::RGB:
        case ColorSpace::GRAY:
            return {0.0, 255.0};
        case ColorSpace::HSV:
            return channel == 0 ? std::pair{0.0, 360.0} : std::pair{0.0, 1.0};
        case ColorSpace::LAB:
            return channel == 0 ? std::pair{0.0, 100.0} : std::pair{-128.0, 127.0};
        case ColorSpace::I1I2I3:
            return channel == 0 ? std::pair{0.0, 1.0} : std::pair{-0.5, 0.5};
    }
    throw Error(ErrorCategory::Internal, "bad color space");
}

std::array<double, 3> convert_pixel(ColorSpace space, double r, double g, double b) {
    const double rn = r / 255.0;
    const double gn = g / 255.0;
    const double bn = b / 255.0;
    switch (space) {
        case ColorSpace::RGB:
            return {r, g, b};
        case ColorSpace::LAB:
            return rgb_to_lab(rn, gn, bn);
        case ColorSpace::HSV:
            return rgb_to_hsv(rn, gn, bn);
        case ColorSpace::I1I2I3:
            return {(rn + gn + bn) / 3.0, (rn - gn) / 2.0,
                    (2.0 * gn - rn - bn) / 4.0};
        case ColorSpace::GRAY:
            break;
    }
    throw Error(ErrorCategory::Internal, "convert_pixel: bad space");
}

ColorPlanes to_color_space(const RawImage& img, ColorSpace space, int levels) {
    if (levels < 1)
        throw Error(ErrorCategory::Format, "levels must be >= 1");
    if (space == ColorSpace::GRAY && img.channels != 1)
        throw Error(ErrorCategory::Format,
                    "gray space requires a 1-channel image (no implicit "
                    "luminance reduction)");
    if (space != ColorSpace::GRAY && img.channels != 3)
        throw Error(ErrorCategory::Format,
                    std::string(color_space_name(space)) +
                        " space requires a 3-channel image");

    ColorPlanes out;
    out.width = img.width;
    out.height = img.height;
    out.channels = img.channels;
    out.levels = levels;
    out.space = space;
    out.planes.assign(img.channels, std::vector<std::int32_t>(img.pixel_count()));

    const double L = levels;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * img.width + x;
            if (space == ColorSpace::GRAY) {
                const double v = img.at(x, y, 0) / 255.0;
                out.planes[0][idx] = static_cast<std::int32_t>(std::lround(v * L));
                continue;
            }
            const auto raw = convert_pixel(space, img.at(x, y, 0),
                                           img.at(x, y, 1), img.at(x, y, 2));
            for (int c = 0; c < 3; ++c) {
                const auto [lo, hi] = channel_range(space, c);
                double v = (raw[c] - lo) / (hi - lo);
                v = std::clamp(v, 0.0, 1.0);
                out.planes[c][idx] = static_cast<std::int32_t>(std::lround(v * L));
            }
        }
    }
    return out;
}

} // namespace ssn
