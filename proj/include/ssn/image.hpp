#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ssn {

// 8-bit raster image, interleaved row-major storage. channels is 1 or 3;
// 3-channel data is ordered R,G,B.
struct RawImage {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;

    std::uint8_t at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }
};

// Decode a raster file (PNG, JPEG, BMP, TIFF). Color sources come back as
// 3-channel RGB, grayscale sources as 1 channel. 16-bit sources are scaled
// to [0,255] by integer division.
RawImage load_image(const std::string& path);

// Write an image (format chosen by extension). Used by the feature-map and
// synthetic-data commands.
void save_image(const std::string& path, const RawImage& img);

// Split into floor(w/pw) * floor(h/ph) non-overlapping patches in row-major
// order. Remainder pixels at the right/bottom edges are discarded.
std::vector<RawImage> split_patches(const RawImage& img, int patch_w, int patch_h);

struct Sample {
    RawImage image;
    int label = 0;
    std::string id;
};

struct Dataset {
    std::vector<Sample> samples;
    std::vector<std::string> class_names;
    int class_count = 0;
};

enum class DatasetLayout {
    ClassPerSubdir, // root/<class-name>/<image files>
    ManifestFile,   // CSV manifest: relative-path,label
};

// Load a labeled dataset. For ClassPerSubdir, `path` is the dataset root and
// labels are assigned by sorted class-name order. For ManifestFile, `path` is
// the manifest CSV; sample paths are resolved relative to its directory.
// Sample ordering is deterministic (lexicographic by path).
Dataset load_dataset(const std::string& path, DatasetLayout layout);

// Replace every sample by its non-overlapping patches; patch ids get a
// "#<row>_<col>" suffix.
Dataset split_dataset_patches(const Dataset& ds, int patch_w, int patch_h);

} // namespace ssn
