#pragma once

#include "ssn/image.hpp"

#include <cstdint>
#include <string>

namespace ssn {

// Seeded synthetic color-texture dataset: per class, channel-wise sinusoidal
// gratings with distinct frequencies, randomized per-sample phases and
// additive noise. Used by desk-scale classification checks and the `synth`
// command.
struct GratingParams {
    int classes = 10;
    int samples_per_class = 20;
    int size = 64;
    std::uint64_t seed = 7;
    double amplitude = 80.0;
    double noise = 8.0;
};

Dataset make_grating_dataset(const GratingParams& params);

// Write a dataset as PNGs in class-per-subdir layout.
void write_dataset_tree(const Dataset& ds, const std::string& root);

} // namespace ssn
