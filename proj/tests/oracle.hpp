// Brute-force reference for the streaming network measures: materializes the
// full directed edge list by scanning every ordered vertex pair, then reduces
// per vertex. Kept deliberately naive and independent of the library's shell
// geometry and accumulation order.
#pragma once

#include "ssn/colorspace.hpp"
#include "ssn/geometry.hpp"

#include <cstdint>
#include <vector>

namespace ssn::testing {

struct OracleEdge {
    int src_x, src_y, src_c;
    int dst_x, dst_y, dst_c;
    int radius;  // ring this edge belongs to
    int dist_sq; // squared spatial distance
    int delta;   // |p(src) - p(dst)|
};

// Every directed edge of N for rings 1..max_radius. Equal intensities yield
// both directions. Ring membership: (r-1)^2 < d^2 <= r^2, plus the d = 0
// cross-channel pairs in ring 1.
std::vector<OracleEdge> oracle_edges(const ColorPlanes& planes, int max_radius);

struct OracleMaps {
    int width = 0, height = 0, channels = 0, max_radius = 0;
    // Indexed by [plane(net, radius, channel)][y*width + x].
    std::vector<std::vector<std::int64_t>> k_in, k_out;
    std::vector<std::vector<double>> s_in, s_out;

    std::size_t plane(Network net, int radius, int channel) const {
        return (static_cast<std::size_t>(net) * max_radius + (radius - 1)) *
                   channels + channel;
    }
};

OracleMaps oracle_measures(const ColorPlanes& planes, int max_radius);

// Neighbor counts of one vertex from direct enumeration: total neighbors in
// ring `radius` and how many of them have equal intensity.
struct NeighborCount {
    int total = 0;
    int equal = 0;
};
NeighborCount oracle_neighbors(const ColorPlanes& planes, int x, int y, int c,
                               int radius);

double oracle_edge_weight(const OracleEdge& e, int levels);

} // namespace ssn::testing
