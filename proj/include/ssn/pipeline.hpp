#pragma once

#include "ssn/classify.hpp"
#include "ssn/colorspace.hpp"
#include "ssn/descriptor.hpp"
#include "ssn/image.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ssn {

inline constexpr const char* kVersion = "0.1.0";

struct ExtractConfig {
    ColorSpace space = ColorSpace::RGB;
    Variant variant = Variant::WB;
    int max_radius = 6;
    int levels = 255;
    int jobs = 0;
    StatsOptions stats;
};

// Full single-image pipeline: color conversion, network measures, descriptor.
Descriptor extract_descriptor(const RawImage& img, const ExtractConfig& config);

struct ExtractResult {
    FeatureMatrix features;
    std::vector<FeatureLabel> layout;
};

// Image-level data-parallel extraction; row order matches the dataset order
// regardless of worker count.
ExtractResult extract_features(const Dataset& ds, const ExtractConfig& config);

// One row per sample: sample_id,label,<values...> under a header of layout
// labels. Doubles are written in shortest round-trip form, so identical runs
// produce identical bytes.
void write_descriptor_csv(const std::string& path, const ExtractResult& result);

// Same content as JSON: {"layout": [...], "samples": [{id,label,values}]}.
void write_descriptor_json(const std::string& path, const ExtractResult& result);

// Config echo, version and the k_max table for the extracted geometry.
void write_meta_json(const std::string& path, const ExtractConfig& config,
                     int channels);

// Re-extract and score the dataset under each color space; reports per-space
// LOOCV accuracy plus mean and population standard deviation across spaces.
ColorSpaceBenchReport colorspace_bench(const Dataset& ds,
                                       const std::vector<ColorSpace>& spaces,
                                       const ExtractConfig& base, double gamma);

} // namespace ssn
