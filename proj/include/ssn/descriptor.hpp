#pragma once

#include "ssn/network.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace ssn {

// Which networks enter the final feature vector.
enum class Variant { N, W, B, WB, NWB };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);
std::vector<Network> variant_networks(Variant v);

// Normalized histogram of one measure on one network layer. Degree uses one
// bin per integer value 0..k_max; strength uses k_max*10 uniform bins over
// [0, k_max] with a right-inclusive last bin.
struct Distribution {
    std::vector<double> p;
    Network net = Network::N;
    Measure measure = Measure::KIn;
    int radius = 1;
    int layer = 0;
    int kmax = 0;
};

Distribution layer_distribution(const MeasureMaps& maps, Network net, int radius,
                                int layer, Measure measure);

// How the four moment statistics are taken. BinProbabilities treats the
// vector of bin probabilities itself as the sample; MeasureWeighted takes
// P-weighted moments of the underlying bin values. Energy and entropy are
// functionals of P in both modes.
enum class StatsMode { BinProbabilities, MeasureWeighted };

// Kurtosis normalization: m4/sigma^4, or the variance-normalized variant
// m4/sigma^2 kept for A/B experiments.
enum class KurtosisNorm { FourthPower, Variance };

struct StatsOptions {
    StatsMode mode =
#ifdef SSN_MEASURE_MOMENTS
        StatsMode::MeasureWeighted;
#else
        StatsMode::BinProbabilities;
#endif
    KurtosisNorm kurtosis =
#ifdef SSN_KURTOSIS_VARIANCE_NORM
        KurtosisNorm::Variance;
#else
        KurtosisNorm::FourthPower;
#endif
};

// mean, stdev, energy, entropy, skewness, kurtosis
struct StatVector {
    double mean = 0;
    double stdev = 0;
    double energy = 0;
    double entropy = 0;
    double skewness = 0;
    double kurtosis = 0;

    std::array<double, 6> to_array() const {
        return {mean, stdev, energy, entropy, skewness, kurtosis};
    }
};

constexpr int kStatsPerDistribution = 6;
const char* stat_name(int index);

// Six statistics of the bin-probability vector P (population moments; when
// all bins are equal the skewness and kurtosis are defined as 0).
StatVector probability_stats(std::span<const double> p,
                             KurtosisNorm norm = KurtosisNorm::FourthPower);

// Same statistics with the moments taken over bin values weighted by P.
StatVector weighted_value_stats(std::span<const double> p,
                                std::span<const double> values,
                                KurtosisNorm norm = KurtosisNorm::FourthPower);

StatVector summarize(const Distribution& dist, const StatsOptions& opts = {});

// Position of one descriptor entry: (network, radius, layer, measure, stat).
struct FeatureLabel {
    Network net;
    int radius;
    int layer; // 0-based channel
    Measure measure;
    int stat;

    std::string to_string() const;
};

// Flat feature vector with a labeled layout (bijective with positions).
struct Descriptor {
    std::vector<double> values;
    std::vector<FeatureLabel> layout;

    std::size_t size() const { return values.size(); }
};

// Statistics of one network at one radius: per layer 1..z the three measures
// (k_in, s_in, s_out), six statistics each -> 18*z values.
Descriptor network_descriptor(const MeasureMaps& maps, Network net, int radius,
                              const StatsOptions& opts = {});

// Concatenation over radii 1..max_radius (radius step fixed at 1).
Descriptor multiscale_descriptor(const MeasureMaps& maps, Network net,
                                 int max_radius, const StatsOptions& opts = {});

// Final feature vector for a variant; length = #networks * z * 3 * 6 * r_n.
Descriptor assemble(const MeasureMaps& maps, Variant variant, int max_radius,
                    const StatsOptions& opts = {});

// Per radius, write a z-channel image whose channels are the min-max
// normalized measure grids, quantized to [0,255]. Files are named
// <prefix>_<net>_<measure>_r<radius>.png; returns the written paths.
std::vector<std::string> featuremap_export(const MeasureMaps& maps, Network net,
                                           Measure measure,
                                           const std::vector<int>& radii,
                                           const std::string& prefix);

} // namespace ssn
