#include "ssn/synth.hpp"

#include "ssn/error.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

namespace fs = std::filesystem;

namespace ssn {

namespace {

// Uniform doubles derived from raw engine words, so generated datasets do not
// depend on the standard library's distribution implementations.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double next_gaussian(std::mt19937_64& rng) {
    double u1 = next_unit(rng);
    if (u1 < 1e-300)
        u1 = 1e-300;
    const double u2 = next_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

} // namespace

Dataset make_grating_dataset(const GratingParams& params) {
    if (params.classes < 2 || params.samples_per_class < 1 || params.size < 8)
        throw Error(ErrorCategory::Format, "bad grating parameters");

    std::mt19937_64 rng(params.seed);

    // Distinct integral frequency pairs per class and channel; integral
    // frequencies keep the texture toroidal so random phases do not change
    // the class statistics.
    struct Wave {
        int fx, fy;
        double angle_mix;
    };
    std::vector<std::array<Wave, 3>> waves(params.classes);
    for (int k = 0; k < params.classes; ++k)
        for (int c = 0; c < 3; ++c)
            waves[k][c] = {1 + (k + 3 * c) % 9, 1 + (2 * k + 5 * c + k / 9) % 9,
                           0.5 + next_unit(rng)};

    Dataset ds;
    ds.class_count = params.classes;
    for (int k = 0; k < params.classes; ++k) {
        std::ostringstream name;
        name << "class" << (k < 10 ? "0" : "") << k;
        ds.class_names.push_back(name.str());
    }

    const int n = params.size;
    for (int k = 0; k < params.classes; ++k) {
        for (int s = 0; s < params.samples_per_class; ++s) {
            RawImage img;
            img.width = n;
            img.height = n;
            img.channels = 3;
            img.data.resize(static_cast<std::size_t>(n) * n * 3);
            double phase[3];
            for (double& p : phase)
                p = 2.0 * M_PI * next_unit(rng);
            for (int y = 0; y < n; ++y) {
                for (int x = 0; x < n; ++x) {
                    for (int c = 0; c < 3; ++c) {
                        const Wave& wv = waves[k][c];
                        const double arg =
                            2.0 * M_PI * (wv.fx * x + wv.fy * y) / n + phase[c];
                        double v = 127.5 +
                                   params.amplitude * std::sin(arg) * wv.angle_mix /
                                       1.5 +
                                   params.noise * next_gaussian(rng);
                        v = std::clamp(v, 0.0, 255.0);
                        img.at(x, y, c) = static_cast<std::uint8_t>(std::lround(v));
                    }
                }
            }
            std::ostringstream id;
            id << ds.class_names[k] << "/sample" << (s < 10 ? "0" : "") << s
               << ".png";
            ds.samples.push_back({std::move(img), k, id.str()});
        }
    }
    return ds;
}

void write_dataset_tree(const Dataset& ds, const std::string& root) {
    for (const auto& name : ds.class_names)
        fs::create_directories(fs::path(root) / name);
    for (const auto& s : ds.samples)
        save_image((fs::path(root) / s.id).string(), s.image);
}

} // namespace ssn
