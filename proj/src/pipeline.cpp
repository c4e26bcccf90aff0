#include "ssn/pipeline.hpp"

#include "ssn/error.hpp"
#include "ssn/format.hpp"
#include "ssn/network.hpp"
#include "ssn/parallel.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>

namespace ssn {

Descriptor extract_descriptor(const RawImage& img, const ExtractConfig& config) {
    const ColorPlanes planes = to_color_space(img, config.space, config.levels);
    const MeasureMaps maps = compute_measures(planes, config.max_radius);
    return assemble(maps, config.variant, config.max_radius, config.stats);
}

ExtractResult extract_features(const Dataset& ds, const ExtractConfig& config) {
    if (ds.samples.empty())
        throw Error(ErrorCategory::Dataset, "empty dataset");

    std::vector<Descriptor> descs(ds.samples.size());
    parallel_for(ds.samples.size(), config.jobs, [&](std::size_t i) {
        descs[i] = extract_descriptor(ds.samples[i].image, config);
    });

    const std::size_t dim = descs.front().size();
    for (const auto& d : descs)
        if (d.size() != dim)
            throw Error(ErrorCategory::Dataset,
                        "descriptor length differs across samples (mixed "
                        "channel counts?)");

    ExtractResult result;
    result.layout = descs.front().layout;
    result.features.x.resize(static_cast<Eigen::Index>(descs.size()),
                             static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < descs.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            result.features.x(static_cast<Eigen::Index>(i),
                              static_cast<Eigen::Index>(j)) = descs[i].values[j];
    result.features.labels.reserve(ds.samples.size());
    result.features.ids.reserve(ds.samples.size());
    for (const auto& s : ds.samples) {
        result.features.labels.push_back(s.label);
        result.features.ids.push_back(s.id);
    }
    result.features.class_count = ds.class_count;
    return result;
}

void write_descriptor_csv(const std::string& path, const ExtractResult& result) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCategory::Io, "cannot write " + path);

    out << "sample_id,label";
    for (const auto& label : result.layout)
        out << ',' << label.to_string();
    out << '\n';

    const auto& x = result.features.x;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        out << result.features.ids[static_cast<std::size_t>(i)] << ','
            << result.features.labels[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            out << ',' << format_double(x(i, j));
        out << '\n';
    }
}

void write_descriptor_json(const std::string& path, const ExtractResult& result) {
    nlohmann::json root;
    auto& layout = root["layout"] = nlohmann::json::array();
    for (const auto& label : result.layout)
        layout.push_back(label.to_string());
    auto& samples = root["samples"] = nlohmann::json::array();
    const auto& x = result.features.x;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        nlohmann::json s;
        s["id"] = result.features.ids[static_cast<std::size_t>(i)];
        s["label"] = result.features.labels[static_cast<std::size_t>(i)];
        auto& values = s["values"] = nlohmann::json::array();
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            values.push_back(x(i, j));
        samples.push_back(std::move(s));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCategory::Io, "cannot write " + path);
    out << root.dump(2) << '\n';
}

ColorSpaceBenchReport colorspace_bench(const Dataset& ds,
                                       const std::vector<ColorSpace>& spaces,
                                       const ExtractConfig& base, double gamma) {
    if (spaces.empty())
        throw Error(ErrorCategory::Format, "no color spaces given");

    ColorSpaceBenchReport report;
    for (const ColorSpace space : spaces) {
        ExtractConfig config = base;
        config.space = space;
        const ExtractResult extracted = extract_features(ds, config);
        const double acc = loocv_accuracy(extracted.features, gamma, base.jobs);
        report.rows.push_back({color_space_name(space), acc});
    }

    double mean = 0.0;
    for (const auto& row : report.rows)
        mean += row.accuracy;
    mean /= static_cast<double>(report.rows.size());
    double var = 0.0;
    for (const auto& row : report.rows)
        var += (row.accuracy - mean) * (row.accuracy - mean);
    var /= static_cast<double>(report.rows.size());
    report.mean = mean;
    report.stdev = std::sqrt(var);
    return report;
}

void write_meta_json(const std::string& path, const ExtractConfig& config,
                     int channels) {
    nlohmann::json root;
    root["version"] = kVersion;
    root["config"] = {
        {"space", color_space_name(config.space)},
        {"variant", variant_name(config.variant)},
        {"rn", config.max_radius},
        {"levels", config.levels},
        {"channels", channels},
    };
    auto& kmax = root["k_max"] = nlohmann::json::object();
    for (const Network net : {Network::N, Network::W, Network::B}) {
        auto& per_net = kmax[network_name(net)] = nlohmann::json::array();
        for (int r = 1; r <= config.max_radius; ++r)
            per_net.push_back(k_max(net, r, channels));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCategory::Io, "cannot write " + path);
    out << root.dump(2) << '\n';
}

} // namespace ssn
