#include "ssn/descriptor.hpp"

#include "ssn/error.hpp"
#include "ssn/image.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace ssn {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::N: return "n";
        case Variant::W: return "w";
        case Variant::B: return "b";
        case Variant::WB: return "wb";
        case Variant::NWB: return "nwb";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (n == "n") return Variant::N;
    if (n == "w") return Variant::W;
    if (n == "b") return Variant::B;
    if (n == "wb") return Variant::WB;
    if (n == "nwb") return Variant::NWB;
    throw Error(ErrorCategory::Format, "unknown variant: " + name);
}

std::vector<Network> variant_networks(Variant v) {
    switch (v) {
        case Variant::N: return {Network::N};
        case Variant::W: return {Network::W};
        case Variant::B: return {Network::B};
        case Variant::WB: return {Network::W, Network::B};
        case Variant::NWB: return {Network::N, Network::W, Network::B};
    }
    return {};
}

Distribution layer_distribution(const MeasureMaps& maps, Network net, int radius,
                                int layer, Measure measure) {
    if (radius < 1 || radius > maps.max_radius())
        throw Error(ErrorCategory::Format, "radius out of range");
    if (layer < 0 || layer >= maps.channels())
        throw Error(ErrorCategory::Format, "layer out of range");
    if (net == Network::B && maps.channels() == 1)
        throw Error(ErrorCategory::Format,
                    "between-channel network is empty for single-channel images");

    Distribution dist;
    dist.net = net;
    dist.measure = measure;
    dist.radius = radius;
    dist.layer = layer;
    dist.kmax = k_max(net, radius, maps.channels());

    const std::size_t total =
        static_cast<std::size_t>(maps.width()) * maps.height();
    assert(total > 0);

    if (measure == Measure::KIn) {
        dist.p.assign(static_cast<std::size_t>(dist.kmax) + 1, 0.0);
        for (const std::int32_t v : maps.k_in(net, radius, layer)) {
            assert(v >= 0 && v <= dist.kmax);
            dist.p[static_cast<std::size_t>(v)] += 1.0;
        }
    } else {
        const int nbins = dist.kmax * 10;
        dist.p.assign(static_cast<std::size_t>(nbins), 0.0);
        const auto values = measure == Measure::SIn ? maps.s_in(net, radius, layer)
                                                    : maps.s_out(net, radius, layer);
        const double scale = nbins / static_cast<double>(dist.kmax);
        for (const double v : values) {
            int bin = static_cast<int>(v * scale);
            bin = std::clamp(bin, 0, nbins - 1); // right-inclusive last bin
            dist.p[static_cast<std::size_t>(bin)] += 1.0;
        }
    }
    for (double& v : dist.p)
        v /= static_cast<double>(total);
    return dist;
}

namespace {

// Central moments of x weighted by w (w sums to 1 when x = P is summarized
// directly with uniform weights 1/n).
struct Moments {
    double mean, m2, m3, m4;
};

Moments central_moments(std::span<const double> x, std::span<const double> w) {
    double mean = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        mean += w[i] * x[i];
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - mean;
        const double d2 = d * d;
        m2 += w[i] * d2;
        m3 += w[i] * d2 * d;
        m4 += w[i] * d2 * d2;
    }
    return {mean, m2, m3, m4};
}

StatVector finish(const Moments& m, std::span<const double> p, KurtosisNorm norm) {
    StatVector out;
    out.mean = m.mean;
    out.stdev = std::sqrt(m.m2);
    for (const double v : p)
        out.energy += v * v;
    for (const double v : p)
        if (v > 0.0)
            out.entropy -= v * std::log2(v);
    // All-equal bins give sigma ~ 0 up to rounding noise; define the
    // standardized moments as 0 there.
    const double tiny = 1e-12 * std::max(std::abs(m.mean), 1e-300);
    if (out.stdev <= tiny) {
        out.skewness = 0.0;
        out.kurtosis = 0.0;
    } else {
        out.skewness = m.m3 / (out.stdev * out.stdev * out.stdev);
        out.kurtosis = norm == KurtosisNorm::FourthPower ? m.m4 / (m.m2 * m.m2)
                                                         : m.m4 / m.m2;
    }
    return out;
}

} // namespace

const char* stat_name(int index) {
    static const char* kNames[] = {"mean",    "stdev",    "energy",
                                   "entropy", "skewness", "kurtosis"};
    return index >= 0 && index < 6 ? kNames[index] : "?";
}

StatVector probability_stats(std::span<const double> p, KurtosisNorm norm) {
    if (p.empty())
        throw Error(ErrorCategory::Format, "empty distribution");
    const std::vector<double> uniform(p.size(), 1.0 / static_cast<double>(p.size()));
    return finish(central_moments(p, uniform), p, norm);
}

StatVector weighted_value_stats(std::span<const double> p,
                                std::span<const double> values,
                                KurtosisNorm norm) {
    if (p.empty() || p.size() != values.size())
        throw Error(ErrorCategory::Format, "bad distribution");
    return finish(central_moments(values, p), p, norm);
}

StatVector summarize(const Distribution& dist, const StatsOptions& opts) {
    if (opts.mode == StatsMode::BinProbabilities)
        return probability_stats(dist.p, opts.kurtosis);
    // Bin values: the integer degree, or the strength bin center.
    std::vector<double> values(dist.p.size());
    if (dist.measure == Measure::KIn) {
        for (std::size_t i = 0; i < values.size(); ++i)
            values[i] = static_cast<double>(i);
    } else {
        const double width = static_cast<double>(dist.kmax) /
                             static_cast<double>(dist.p.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            values[i] = (static_cast<double>(i) + 0.5) * width;
    }
    return weighted_value_stats(dist.p, values, opts.kurtosis);
}

Descriptor network_descriptor(const MeasureMaps& maps, Network net, int radius,
                              const StatsOptions& opts) {
    static const Measure kMeasures[] = {Measure::KIn, Measure::SIn, Measure::SOut};
    Descriptor desc;
    desc.values.reserve(static_cast<std::size_t>(maps.channels()) * 18);
    desc.layout.reserve(desc.values.capacity());
    for (int layer = 0; layer < maps.channels(); ++layer) {
        for (const Measure m : kMeasures) {
            const StatVector stats =
                summarize(layer_distribution(maps, net, radius, layer, m), opts);
            const auto arr = stats.to_array();
            for (int s = 0; s < kStatsPerDistribution; ++s) {
                desc.values.push_back(arr[static_cast<std::size_t>(s)]);
                desc.layout.push_back({net, radius, layer, m, s});
            }
        }
    }
    return desc;
}

Descriptor multiscale_descriptor(const MeasureMaps& maps, Network net,
                                 int max_radius, const StatsOptions& opts) {
    Descriptor desc;
    for (int r = 1; r <= max_radius; ++r) {
        Descriptor part = network_descriptor(maps, net, r, opts);
        desc.values.insert(desc.values.end(), part.values.begin(), part.values.end());
        desc.layout.insert(desc.layout.end(), part.layout.begin(), part.layout.end());
    }
    return desc;
}

Descriptor assemble(const MeasureMaps& maps, Variant variant, int max_radius,
                    const StatsOptions& opts) {
    if (max_radius < 1 || max_radius > maps.max_radius())
        throw Error(ErrorCategory::Format, "max radius out of range");
    Descriptor desc;
    for (const Network net : variant_networks(variant)) {
        Descriptor part = multiscale_descriptor(maps, net, max_radius, opts);
        desc.values.insert(desc.values.end(), part.values.begin(), part.values.end());
        desc.layout.insert(desc.layout.end(), part.layout.begin(), part.layout.end());
    }
    return desc;
}

std::string FeatureLabel::to_string() const {
    std::ostringstream os;
    os << network_name(net) << ".r" << radius << ".c" << (layer + 1) << '.'
       << measure_name(measure) << '.' << stat_name(stat);
    return os.str();
}

std::vector<std::string> featuremap_export(const MeasureMaps& maps, Network net,
                                           Measure measure,
                                           const std::vector<int>& radii,
                                           const std::string& prefix) {
    std::vector<std::string> written;
    for (const int radius : radii) {
        if (radius < 1 || radius > maps.max_radius())
            throw Error(ErrorCategory::Format, "feature map radius out of range");
        RawImage img;
        img.width = maps.width();
        img.height = maps.height();
        img.channels = maps.channels();
        img.data.resize(static_cast<std::size_t>(img.width) * img.height *
                        img.channels);
        for (int c = 0; c < maps.channels(); ++c) {
            std::vector<double> grid;
            if (measure == Measure::KIn) {
                const auto k = maps.k_in(net, radius, c);
                grid.assign(k.begin(), k.end());
            } else {
                const auto s = measure == Measure::SIn ? maps.s_in(net, radius, c)
                                                       : maps.s_out(net, radius, c);
                grid.assign(s.begin(), s.end());
            }
            const auto [mn, mx] = std::minmax_element(grid.begin(), grid.end());
            const double lo = *mn;
            const double span = *mx - lo;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double v = span > 0.0 ? (grid[i] - lo) / span : 0.0;
                img.data[i * img.channels + c] =
                    static_cast<std::uint8_t>(std::lround(v * 255.0));
            }
        }
        std::ostringstream name;
        name << prefix << '_' << network_name(net) << '_' << measure_name(measure)
             << "_r" << radius << ".png";
        save_image(name.str(), img);
        written.push_back(name.str());
    }
    return written;
}

} // namespace ssn
