#include "ssn/image.hpp"

#include "ssn/error.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace ssn {

namespace {

bool has_image_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    static const std::set<std::string> kExts = {".png", ".jpg", ".jpeg",
                                                ".bmp", ".tif", ".tiff"};
    return kExts.count(ext) > 0;
}

RawImage from_mat(const cv::Mat& mat, const std::string& path) {
    cv::Mat m = mat;
    if (m.depth() == CV_16U) {
        // 16-bit to 8-bit by integer division (65535/255 = 257).
        cv::Mat tmp(m.rows, m.cols, CV_MAKETYPE(CV_8U, m.channels()));
        const int n = m.rows * m.cols * m.channels();
        const auto* src = reinterpret_cast<const std::uint16_t*>(m.ptr());
        auto* dst = tmp.ptr<std::uint8_t>();
        for (int i = 0; i < n; ++i)
            dst[i] = static_cast<std::uint8_t>(src[i] / 257);
        m = tmp;
    } else if (m.depth() != CV_8U) {
        throw Error(ErrorCategory::Decode,
                    "unsupported sample depth in " + path);
    }

    if (m.channels() == 4) {
        cv::Mat rgb;
        cv::mixChannels({m}, {rgb = cv::Mat(m.rows, m.cols, CV_8UC3)},
                        {0, 0, 1, 1, 2, 2});
        m = rgb;
    }
    if (m.channels() != 1 && m.channels() != 3)
        throw Error(ErrorCategory::Decode,
                    "unsupported channel count in " + path);

    RawImage img;
    img.width = m.cols;
    img.height = m.rows;
    img.channels = m.channels();
    img.data.resize(static_cast<std::size_t>(m.rows) * m.cols * m.channels());
    for (int y = 0; y < m.rows; ++y) {
        const std::uint8_t* row = m.ptr<std::uint8_t>(y);
        for (int x = 0; x < m.cols; ++x) {
            if (img.channels == 3) {
                // OpenCV decodes as BGR.
                img.at(x, y, 0) = row[x * 3 + 2];
                img.at(x, y, 1) = row[x * 3 + 1];
                img.at(x, y, 2) = row[x * 3 + 0];
            } else {
                img.at(x, y, 0) = row[x];
            }
        }
    }
    return img;
}

} // namespace

RawImage load_image(const std::string& path) {
    if (!fs::exists(path))
        throw Error(ErrorCategory::Io, "no such file: " + path);
    cv::Mat m = cv::imread(path, cv::IMREAD_UNCHANGED);
    if (m.empty())
        throw Error(ErrorCategory::Decode, "decode failure: " + path);
    if (m.cols <= 0 || m.rows <= 0)
        throw Error(ErrorCategory::Decode, "zero-dimension image: " + path);
    return from_mat(m, path);
}

void save_image(const std::string& path, const RawImage& img) {
    cv::Mat m(img.height, img.width, img.channels == 3 ? CV_8UC3 : CV_8UC1);
    for (int y = 0; y < img.height; ++y) {
        std::uint8_t* row = m.ptr<std::uint8_t>(y);
        for (int x = 0; x < img.width; ++x) {
            if (img.channels == 3) {
                row[x * 3 + 0] = img.at(x, y, 2);
                row[x * 3 + 1] = img.at(x, y, 1);
                row[x * 3 + 2] = img.at(x, y, 0);
            } else {
                row[x] = img.at(x, y, 0);
            }
        }
    }
    if (!cv::imwrite(path, m))
        throw Error(ErrorCategory::Io, "cannot write image: " + path);
}

std::vector<RawImage> split_patches(const RawImage& img, int patch_w, int patch_h) {
    if (patch_w < 1 || patch_h < 1)
        throw Error(ErrorCategory::Format, "patch size must be positive");
    if (patch_w > img.width || patch_h > img.height)
        throw Error(ErrorCategory::Format, "patch larger than image");

    const int nx = img.width / patch_w;
    const int ny = img.height / patch_h;
    std::vector<RawImage> out;
    out.reserve(static_cast<std::size_t>(nx) * ny);
    for (int py = 0; py < ny; ++py) {
        for (int px = 0; px < nx; ++px) {
            RawImage p;
            p.width = patch_w;
            p.height = patch_h;
            p.channels = img.channels;
            p.data.resize(static_cast<std::size_t>(patch_w) * patch_h * img.channels);
            for (int y = 0; y < patch_h; ++y)
                for (int x = 0; x < patch_w; ++x)
                    for (int c = 0; c < img.channels; ++c)
                        p.at(x, y, c) = img.at(px * patch_w + x, py * patch_h + y, c);
            out.push_back(std::move(p));
        }
    }
    return out;
}

namespace {

Dataset load_tree(const std::string& root) {
    if (!fs::is_directory(root))
        throw Error(ErrorCategory::Io, "no such directory: " + root);

    std::vector<std::string> class_names;
    for (const auto& entry : fs::directory_iterator(root))
        if (entry.is_directory())
            class_names.push_back(entry.path().filename().string());
    std::sort(class_names.begin(), class_names.end());
    if (class_names.empty())
        throw Error(ErrorCategory::Dataset, "no class subdirectories in " + root);

    Dataset ds;
    ds.class_names = class_names;
    ds.class_count = static_cast<int>(class_names.size());
    for (int label = 0; label < ds.class_count; ++label) {
        std::vector<fs::path> files;
        for (const auto& entry :
             fs::directory_iterator(fs::path(root) / class_names[label]))
            if (entry.is_regular_file() && has_image_extension(entry.path()))
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        if (files.empty())
            throw Error(ErrorCategory::Dataset,
                        "class has zero samples: " + class_names[label]);
        for (const auto& f : files) {
            Sample s;
            s.image = load_image(f.string());
            s.label = label;
            s.id = class_names[label] + "/" + f.filename().string();
            ds.samples.push_back(std::move(s));
        }
    }
    return ds;
}

Dataset load_manifest(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in)
        throw Error(ErrorCategory::Io, "cannot open manifest: " + manifest_path);
    const fs::path base = fs::path(manifest_path).parent_path();

    std::vector<std::pair<std::string, std::string>> entries; // path, class name
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto comma = line.rfind(',');
        if (comma == std::string::npos)
            throw Error(ErrorCategory::Format,
                        "manifest line " + std::to_string(lineno) +
                            ": expected 'relative-path,label'");
        const std::string rel = line.substr(0, comma);
        const std::string cls = line.substr(comma + 1);
        if (rel.empty() || cls.empty())
            throw Error(ErrorCategory::Format,
                        "manifest line " + std::to_string(lineno) +
                            ": empty path or label");
        if (!seen.insert(rel).second)
            throw Error(ErrorCategory::Dataset,
                        "duplicate manifest entry: " + rel);
        entries.emplace_back(rel, cls);
    }
    if (entries.empty())
        throw Error(ErrorCategory::Dataset, "empty manifest: " + manifest_path);
    std::sort(entries.begin(), entries.end());

    std::set<std::string> names;
    for (const auto& [rel, cls] : entries)
        names.insert(cls);

    Dataset ds;
    ds.class_names.assign(names.begin(), names.end());
    ds.class_count = static_cast<int>(ds.class_names.size());
    std::map<std::string, int> label_of;
    for (int i = 0; i < ds.class_count; ++i)
        label_of[ds.class_names[i]] = i;

    for (const auto& [rel, cls] : entries) {
        Sample s;
        s.image = load_image((base / rel).string());
        s.label = label_of[cls];
        s.id = rel;
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

} // namespace

Dataset load_dataset(const std::string& path, DatasetLayout layout) {
    switch (layout) {
        case DatasetLayout::ClassPerSubdir: return load_tree(path);
        case DatasetLayout::ManifestFile: return load_manifest(path);
    }
    throw Error(ErrorCategory::Internal, "bad dataset layout");
}

Dataset split_dataset_patches(const Dataset& ds, int patch_w, int patch_h) {
    Dataset out;
    out.class_names = ds.class_names;
    out.class_count = ds.class_count;
    for (const auto& s : ds.samples) {
        auto patches = split_patches(s.image, patch_w, patch_h);
        const int nx = s.image.width / patch_w;
        for (std::size_t i = 0; i < patches.size(); ++i) {
            std::ostringstream id;
            id << s.id << "#" << (i / nx) << "_" << (i % nx);
            out.samples.push_back({std::move(patches[i]), s.label, id.str()});
        }
    }
    return out;
}

} // namespace ssn
