#pragma once

#include <vector>

namespace ssn {

// The three edge populations of a spatio-spectral network: all edges (N),
// within-channel edges (W) and between-channel edges (B).
enum class Network { N = 0, W = 1, B = 2 };

const char* network_name(Network net);

struct ShellOffset {
    int dx;
    int dy;
    int dist_sq; // dx*dx + dy*dy
};

// Integer offsets of one radially symmetric ring: all (dx,dy) with
// (r-1)^2 < dx^2+dy^2 <= r^2, sorted by (dy,dx). The zero offset is never
// part of the spatial list; ring 1 additionally pairs a pixel with itself
// across channels, signalled by includes_zero_offset.
struct ShellGeometry {
    int radius = 0;
    std::vector<ShellOffset> offsets;
    bool includes_zero_offset = false;
    // Distinct squared distances occurring in this ring, ascending.
    // Contains 0 first when includes_zero_offset is set.
    std::vector<int> dist_sq_values;
};

ShellGeometry shell_offsets(int radius);

// Number of connection slots an interior vertex has at ring `radius`,
// counting the z-1 same-pixel cross-channel slots at every radius.
// Degree histograms are binned against this value so bins are comparable
// across images.
int k_max(Network net, int radius, int channels);

// Neighbors an interior vertex actually has at ring `radius`: the
// same-pixel cross-channel pairs exist only in ring 1, so for radius >= 2
// this is k_max minus the z-1 spectral slots.
int interior_neighbor_count(Network net, int radius, int channels);

} // namespace ssn
