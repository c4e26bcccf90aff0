#pragma once

#include "ssn/colorspace.hpp"
#include "ssn/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ssn {

// Vertex measures kept per network layer. k_out is retained for validation
// even though descriptors only use the first three (input degree determines
// output degree up to the neighbor count).
enum class Measure { KIn = 0, SIn = 1, SOut = 2 };

const char* measure_name(Measure m);

struct EdgeRule {
    int levels; // L
    int radius; // ring upper bound r
};

// Connection weight: absolute intensity difference scaled by spatial
// distance, normalized so neither factor cancels the other and the result
// spans [0,1] inside one ring:
//   ((|p_i - p_j| + 1)(d + 1) - 1) / ((L + 1)(r + 1) - 1)
double edge_weight(int p_i, int p_j, double d, const EdgeRule& rule);

// Per-vertex, per-channel, per-radius, per-network measure grids of the
// spatio-spectral network. Immutable after compute_measures builds it.
class MeasureMaps {
public:
    MeasureMaps() = default;

    int width() const { return width_; }
    int height() const { return height_; }
    int channels() const { return channels_; }
    int max_radius() const { return max_radius_; }
    int levels() const { return levels_; }

    std::span<const std::int32_t> k_in(Network net, int radius, int channel) const;
    std::span<const std::int32_t> k_out(Network net, int radius, int channel) const;
    std::span<const double> s_in(Network net, int radius, int channel) const;
    std::span<const double> s_out(Network net, int radius, int channel) const;

private:
    std::size_t plane(Network net, int radius, int channel) const;

    int width_ = 0;
    int height_ = 0;
    int channels_ = 0;
    int max_radius_ = 0;
    int levels_ = 0;
    std::vector<std::vector<std::int32_t>> k_in_;
    std::vector<std::vector<std::int32_t>> k_out_;
    std::vector<std::vector<double>> s_in_;
    std::vector<std::vector<double>> s_out_;

    friend MeasureMaps compute_measures(const ColorPlanes& planes, int max_radius);
};

// Build the directed multilayer network for rings 1..max_radius and
// accumulate k_in/k_out/s_in/s_out per vertex in a single streaming pass per
// ring, without materializing the graph. Edges point toward the higher
// intensity; equal intensities produce both directions. Neighbors outside
// the image are skipped (no padding).
MeasureMaps compute_measures(const ColorPlanes& planes, int max_radius);

// Emit every directed edge of N as `src_x,src_y,src_c,dst_x,dst_y,dst_c,weight`
// lines, source vertices in row-major order (channel innermost), neighbors in
// ring-then-offset order. Returns the number of edges written.
std::uint64_t export_edgelist(const ColorPlanes& planes, int max_radius,
                              std::ostream& sink);

} // namespace ssn
