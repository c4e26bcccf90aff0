// Command-line frontend: descriptor extraction, feature maps, edge lists,
// LDA/LOOCV evaluation and parameter sweeps.

#include "ssn/classify.hpp"
#include "ssn/colorspace.hpp"
#include "ssn/descriptor.hpp"
#include "ssn/error.hpp"
#include "ssn/format.hpp"
#include "ssn/image.hpp"
#include "ssn/network.hpp"
#include "ssn/pipeline.hpp"
#include "ssn/synth.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;

struct Options {
    std::string space = "rgb";
    std::string variant = "wb";
    int rn = 6;
    int levels = 255;
    std::string patch;
    double gamma = ssn::kDefaultShrinkage;
    int jobs = 0;
    std::string out;
    std::string json_out;
    std::string dir;
    std::string manifest;
    std::vector<std::string> inputs;
    std::string config_path;

    // featuremap / edgelist extras
    std::string net = "n";
    std::string measure = "k_in";
    std::vector<int> radii;

    // colorbench / sweep extras
    std::vector<std::string> spaces = {"rgb", "lab", "hsv", "i1i2i3"};
    int rn_min = 1;
    std::string dump_predictions;

    // synth extras
    int classes = 10;
    int samples = 20;
    int size = 64;
    std::uint64_t seed = 7;
};

struct OptionHandles {
    std::map<std::string, CLI::Option*> by_key;
};

// Shared flags; every subcommand takes the same extraction knobs plus an
// optional JSON config file (precedence: CLI flags > config file > defaults).
OptionHandles add_common_options(CLI::App* cmd, Options& opt, bool wants_dataset) {
    OptionHandles h;
    h.by_key["space"] =
        cmd->add_option("--space", opt.space, "Color space: rgb|lab|hsv|i1i2i3|gray")
            ->capture_default_str();
    h.by_key["variant"] =
        cmd->add_option("--variant", opt.variant, "Feature vector: n|w|b|wb|nwb")
            ->capture_default_str();
    h.by_key["rn"] = cmd->add_option("--rn", opt.rn, "Largest neighborhood radius")
                         ->check(CLI::PositiveNumber)
                         ->capture_default_str();
    h.by_key["levels"] =
        cmd->add_option("--levels", opt.levels, "Quantization levels L")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    h.by_key["jobs"] = cmd->add_option("--jobs", opt.jobs,
                                       "Worker threads (0 = all cores)")
                           ->capture_default_str();
    cmd->add_option("--config", opt.config_path, "JSON config file");
    if (wants_dataset) {
        h.by_key["patch"] =
            cmd->add_option("--patch", opt.patch,
                            "Split source images into WxH patches (e.g. 128x128)");
        h.by_key["gamma"] =
            cmd->add_option("--gamma", opt.gamma, "LDA shrinkage strength")
                ->capture_default_str();
        cmd->add_option("--dir", opt.dir, "Dataset root (class-per-subdir layout)");
        cmd->add_option("--manifest", opt.manifest,
                        "Dataset manifest CSV (relative-path,label)");
    }
    return h;
}

template <typename T>
void merge_key(const OptionHandles& h, const json& cfg, const std::string& key,
               T& value) {
    const auto it = h.by_key.find(key);
    if (it != h.by_key.end() && it->second->count() > 0)
        return; // explicit flag wins
    if (cfg.contains(key))
        value = cfg.at(key).get<T>();
}

void apply_config(const OptionHandles& h, Options& opt) {
    if (opt.config_path.empty())
        return;
    std::ifstream in(opt.config_path);
    if (!in)
        throw ssn::Error(ssn::ErrorCategory::Io,
                         "cannot open config: " + opt.config_path);
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& e) {
        throw ssn::Error(ssn::ErrorCategory::Format,
                         "bad config JSON: " + std::string(e.what()));
    }
    merge_key(h, cfg, "space", opt.space);
    merge_key(h, cfg, "variant", opt.variant);
    merge_key(h, cfg, "rn", opt.rn);
    merge_key(h, cfg, "levels", opt.levels);
    merge_key(h, cfg, "jobs", opt.jobs);
    merge_key(h, cfg, "patch", opt.patch);
    merge_key(h, cfg, "gamma", opt.gamma);
}

std::pair<int, int> parse_patch(const std::string& spec) {
    const auto x = spec.find('x');
    if (x == std::string::npos)
        throw ssn::Error(ssn::ErrorCategory::Format,
                         "patch must be WxH, got '" + spec + "'");
    try {
        return {std::stoi(spec.substr(0, x)), std::stoi(spec.substr(x + 1))};
    } catch (const std::exception&) {
        throw ssn::Error(ssn::ErrorCategory::Format,
                         "patch must be WxH, got '" + spec + "'");
    }
}

ssn::Dataset resolve_dataset(const Options& opt) {
    ssn::Dataset ds;
    if (!opt.manifest.empty()) {
        ds = ssn::load_dataset(opt.manifest, ssn::DatasetLayout::ManifestFile);
    } else if (!opt.dir.empty()) {
        ds = ssn::load_dataset(opt.dir, ssn::DatasetLayout::ClassPerSubdir);
    } else if (!opt.inputs.empty()) {
        ds.class_names = {"unlabeled"};
        ds.class_count = 1;
        for (const auto& path : opt.inputs)
            ds.samples.push_back({ssn::load_image(path), 0, path});
    } else {
        throw ssn::Error(ssn::ErrorCategory::Format,
                         "no input: give image paths, --dir or --manifest");
    }
    if (!opt.patch.empty()) {
        const auto [pw, ph] = parse_patch(opt.patch);
        ds = ssn::split_dataset_patches(ds, pw, ph);
    }
    return ds;
}

ssn::ExtractConfig extract_config(const Options& opt) {
    ssn::ExtractConfig config;
    config.space = ssn::color_space_from_name(opt.space);
    config.variant = ssn::variant_from_name(opt.variant);
    config.max_radius = opt.rn;
    config.levels = opt.levels;
    config.jobs = opt.jobs;
    return config;
}

int channels_of(const ssn::Dataset& ds) {
    return ds.samples.empty() ? 3 : ds.samples.front().image.channels;
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c)
        widths[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            std::cout << std::left << std::setw(static_cast<int>(widths[c] + 2))
                      << cells[c];
        std::cout << '\n';
    };
    line(header);
    for (const auto& row : rows)
        line(row);
}

std::string fmt_acc(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

int run_extract(const Options& opt) {
    const ssn::Dataset ds = resolve_dataset(opt);
    const ssn::ExtractConfig config = extract_config(opt);
    const ssn::ExtractResult result = ssn::extract_features(ds, config);

    const std::string out = opt.out.empty() ? "descriptors.csv" : opt.out;
    ssn::write_descriptor_csv(out, result);
    ssn::write_meta_json(out + ".meta.json", config, channels_of(ds));
    if (!opt.json_out.empty())
        ssn::write_descriptor_json(opt.json_out, result);
    std::cout << "wrote " << result.features.x.rows() << " descriptors of length "
              << result.features.x.cols() << " to " << out << '\n';
    return 0;
}

int run_featuremap(const Options& opt) {
    if (opt.inputs.size() != 1)
        throw ssn::Error(ssn::ErrorCategory::Format,
                         "featuremap expects exactly one image");
    const ssn::RawImage img = ssn::load_image(opt.inputs.front());
    const ssn::ColorPlanes planes = ssn::to_color_space(
        img, ssn::color_space_from_name(opt.space), opt.levels);
    const ssn::MeasureMaps maps = ssn::compute_measures(planes, opt.rn);

    std::vector<int> radii = opt.radii;
    if (radii.empty())
        for (int r = 1; r <= opt.rn; ++r)
            radii.push_back(r);

    ssn::Measure measure;
    if (opt.measure == "k_in") measure = ssn::Measure::KIn;
    else if (opt.measure == "s_in") measure = ssn::Measure::SIn;
    else if (opt.measure == "s_out") measure = ssn::Measure::SOut;
    else
        throw ssn::Error(ssn::ErrorCategory::Format,
                         "measure must be k_in|s_in|s_out");

    ssn::Network net;
    if (opt.net == "n") net = ssn::Network::N;
    else if (opt.net == "w") net = ssn::Network::W;
    else if (opt.net == "b") net = ssn::Network::B;
    else
        throw ssn::Error(ssn::ErrorCategory::Format, "net must be n|w|b");

    const std::string prefix = opt.out.empty() ? "featuremap" : opt.out;
    for (const auto& path : ssn::featuremap_export(maps, net, measure, radii, prefix))
        std::cout << path << '\n';
    return 0;
}

int run_edgelist(const Options& opt) {
    if (opt.inputs.size() != 1)
        throw ssn::Error(ssn::ErrorCategory::Format,
                         "edgelist expects exactly one image");
    const ssn::RawImage img = ssn::load_image(opt.inputs.front());
    const ssn::ColorPlanes planes = ssn::to_color_space(
        img, ssn::color_space_from_name(opt.space), opt.levels);

    std::uint64_t count = 0;
    if (opt.out.empty()) {
        count = ssn::export_edgelist(planes, opt.rn, std::cout);
    } else {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out)
            throw ssn::Error(ssn::ErrorCategory::Io, "cannot write " + opt.out);
        count = ssn::export_edgelist(planes, opt.rn, out);
    }
    std::cerr << count << " edges\n";
    return 0;
}

void dump_predictions(const std::string& path, const ssn::FeatureMatrix& features,
                      const ssn::LoocvResult& result) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ssn::Error(ssn::ErrorCategory::Io, "cannot write " + path);
    out << "sample_id,label,predicted\n";
    for (std::size_t i = 0; i < features.ids.size(); ++i)
        out << features.ids[i] << ',' << features.labels[i] << ','
            << result.predicted[i] << '\n';
}

int run_classify(const Options& opt) {
    const ssn::Dataset ds = resolve_dataset(opt);
    const ssn::ExtractConfig config = extract_config(opt);
    const ssn::ExtractResult extracted = ssn::extract_features(ds, config);
    const ssn::LoocvResult result =
        ssn::loocv(extracted.features, opt.gamma, opt.jobs);

    print_table({"samples", "classes", "dims", "accuracy"},
                {{std::to_string(extracted.features.ids.size()),
                  std::to_string(extracted.features.class_count),
                  std::to_string(extracted.features.x.cols()),
                  fmt_acc(result.accuracy)}});

    if (!opt.out.empty()) {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out)
            throw ssn::Error(ssn::ErrorCategory::Io, "cannot write " + opt.out);
        out << "samples,classes,dims,accuracy\n"
            << extracted.features.ids.size() << ','
            << extracted.features.class_count << ','
            << extracted.features.x.cols() << ','
            << ssn::format_double(result.accuracy) << '\n';
    }
    if (!opt.dump_predictions.empty())
        dump_predictions(opt.dump_predictions, extracted.features, result);
    return 0;
}

int run_colorbench(const Options& opt) {
    const ssn::Dataset ds = resolve_dataset(opt);
    const ssn::ExtractConfig config = extract_config(opt);
    std::vector<ssn::ColorSpace> spaces;
    for (const auto& name : opt.spaces)
        spaces.push_back(ssn::color_space_from_name(name));

    const ssn::ColorSpaceBenchReport report =
        ssn::colorspace_bench(ds, spaces, config, opt.gamma);

    std::vector<std::string> header, row;
    for (const auto& r : report.rows) {
        header.push_back(r.space);
        row.push_back(fmt_acc(r.accuracy));
    }
    header.push_back("mean");
    row.push_back(fmt_acc(report.mean));
    header.push_back("std");
    row.push_back(fmt_acc(report.stdev));
    print_table(header, {row});

    if (!opt.out.empty()) {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out)
            throw ssn::Error(ssn::ErrorCategory::Io, "cannot write " + opt.out);
        for (std::size_t i = 0; i < report.rows.size(); ++i)
            out << report.rows[i].space << ',';
        out << "mean,std\n";
        for (const auto& r : report.rows)
            out << ssn::format_double(r.accuracy) << ',';
        out << ssn::format_double(report.mean) << ','
            << ssn::format_double(report.stdev) << '\n';
    }
    return 0;
}

int run_sweep(const Options& opt) {
    const ssn::Dataset ds = resolve_dataset(opt);
    ssn::ExtractConfig config = extract_config(opt);
    if (opt.rn_min < 1 || opt.rn_min > opt.rn)
        throw ssn::Error(ssn::ErrorCategory::Format, "need 1 <= rn-min <= rn");

    // Extract once at the largest radius; smaller-radius descriptors are
    // column subsets because each ring is summarized independently.
    const ssn::ExtractResult full = ssn::extract_features(ds, config);

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> csv_lines;
    for (int rn = opt.rn_min; rn <= opt.rn; ++rn) {
        std::vector<Eigen::Index> cols;
        for (std::size_t j = 0; j < full.layout.size(); ++j)
            if (full.layout[j].radius <= rn)
                cols.push_back(static_cast<Eigen::Index>(j));

        ssn::FeatureMatrix sub;
        sub.labels = full.features.labels;
        sub.ids = full.features.ids;
        sub.class_count = full.features.class_count;
        sub.x.resize(full.features.x.rows(), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub.x.col(static_cast<Eigen::Index>(j)) = full.features.x.col(cols[j]);

        const double acc = ssn::loocv_accuracy(sub, opt.gamma, opt.jobs);
        rows.push_back({std::to_string(rn), std::to_string(cols.size()),
                        fmt_acc(acc)});
        csv_lines.push_back(std::to_string(rn) + ',' + std::to_string(cols.size()) +
                            ',' + ssn::format_double(acc));
    }
    print_table({"rn", "descriptors", "accuracy"}, rows);

    if (!opt.out.empty()) {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out)
            throw ssn::Error(ssn::ErrorCategory::Io, "cannot write " + opt.out);
        out << "rn,descriptors,accuracy\n";
        for (const auto& line : csv_lines)
            out << line << '\n';
    }
    return 0;
}

int run_synth(const Options& opt) {
    if (opt.out.empty())
        throw ssn::Error(ssn::ErrorCategory::Format, "synth needs --out DIR");
    ssn::GratingParams params;
    params.classes = opt.classes;
    params.samples_per_class = opt.samples;
    params.size = opt.size;
    params.seed = opt.seed;
    const ssn::Dataset ds = ssn::make_grating_dataset(params);
    ssn::write_dataset_tree(ds, opt.out);
    std::cout << "wrote " << ds.samples.size() << " images (" << ds.class_count
              << " classes) to " << opt.out << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spatio-spectral network color-texture descriptors"};
    app.require_subcommand(1);

    Options opt;

    auto* extract = app.add_subcommand(
        "extract", "Extract descriptors to CSV (one row per image)");
    auto extract_h = add_common_options(extract, opt, true);
    extract->add_option("images", opt.inputs, "Image files");
    extract->add_option("--out", opt.out, "Output CSV path");
    extract->add_option("--json", opt.json_out, "Also write JSON descriptors");

    auto* featuremap = app.add_subcommand(
        "featuremap", "Render vertex-measure feature maps as PNG");
    auto featuremap_h = add_common_options(featuremap, opt, false);
    featuremap->add_option("images", opt.inputs, "Image file");
    featuremap->add_option("--net", opt.net, "Network: n|w|b")->capture_default_str();
    featuremap->add_option("--measure", opt.measure, "Measure: k_in|s_in|s_out")
        ->capture_default_str();
    featuremap->add_option("--radii", opt.radii, "Radii to render (default 1..rn)");
    featuremap->add_option("--out", opt.out, "Output file prefix");

    auto* edgelist = app.add_subcommand(
        "edgelist", "Export the directed edge list of N as CSV");
    auto edgelist_h = add_common_options(edgelist, opt, false);
    edgelist->add_option("images", opt.inputs, "Image file");
    edgelist->add_option("--out", opt.out, "Output CSV path (default stdout)");

    auto* classify = app.add_subcommand(
        "classify", "Leave-one-out LDA accuracy on a labeled dataset");
    auto classify_h = add_common_options(classify, opt, true);
    classify->add_option("--out", opt.out, "Report CSV path");
    classify->add_option("--dump-predictions", opt.dump_predictions,
                         "Write per-fold predictions CSV");

    auto* colorbench = app.add_subcommand(
        "colorbench", "Classification accuracy across color spaces");
    auto colorbench_h = add_common_options(colorbench, opt, true);
    colorbench->add_option("--spaces", opt.spaces, "Spaces to evaluate")
        ->capture_default_str();
    colorbench->add_option("--out", opt.out, "Report CSV path");

    auto* sweep = app.add_subcommand(
        "sweep", "Accuracy as the radius parameter grows");
    auto sweep_h = add_common_options(sweep, opt, true);
    sweep->add_option("--rn-min", opt.rn_min, "Smallest radius to evaluate")
        ->capture_default_str();
    sweep->add_option("--out", opt.out, "Report CSV path");

    auto* synth = app.add_subcommand(
        "synth", "Generate a seeded synthetic color-texture dataset");
    synth->add_option("--out", opt.out, "Output directory")->required();
    synth->add_option("--classes", opt.classes, "Class count")->capture_default_str();
    synth->add_option("--samples", opt.samples, "Samples per class")
        ->capture_default_str();
    synth->add_option("--size", opt.size, "Image side length")->capture_default_str();
    synth->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (extract->parsed()) {
            apply_config(extract_h, opt);
            return run_extract(opt);
        }
        if (featuremap->parsed()) {
            apply_config(featuremap_h, opt);
            return run_featuremap(opt);
        }
        if (edgelist->parsed()) {
            apply_config(edgelist_h, opt);
            return run_edgelist(opt);
        }
        if (classify->parsed()) {
            apply_config(classify_h, opt);
            return run_classify(opt);
        }
        if (colorbench->parsed()) {
            apply_config(colorbench_h, opt);
            return run_colorbench(opt);
        }
        if (sweep->parsed()) {
            apply_config(sweep_h, opt);
            return run_sweep(opt);
        }
        if (synth->parsed())
            return run_synth(opt);
    } catch (const ssn::Error& e) {
        nlohmann::json err = {
            {"error",
             {{"category", ssn::error_category_name(e.category())},
              {"message", e.what()}}}};
        std::cerr << err.dump() << '\n';
        switch (e.category()) {
            case ssn::ErrorCategory::Io: return 2;
            case ssn::ErrorCategory::Decode: return 3;
            case ssn::ErrorCategory::Format: return 4;
            case ssn::ErrorCategory::Dataset: return 5;
            case ssn::ErrorCategory::Numeric: return 6;
            case ssn::ErrorCategory::Internal: return 7;
        }
        return 7;
    } catch (const std::exception& e) {
        nlohmann::json err = {
            {"error", {{"category", "internal"}, {"message", e.what()}}}};
        std::cerr << err.dump() << '\n';
        return 7;
    }
    return 0;
}
