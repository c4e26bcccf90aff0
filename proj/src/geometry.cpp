#include "ssn/geometry.hpp"

#include "ssn/error.hpp"

#include <algorithm>

namespace ssn {

const char* network_name(Network net) {
    switch (net) {
        case Network::N: return "N";
        case Network::W: return "W";
        case Network::B: return "B";
    }
    return "?";
}

ShellGeometry shell_offsets(int radius) {
    if (radius < 1)
        throw Error(ErrorCategory::Format, "shell radius must be >= 1");

    ShellGeometry geom;
    geom.radius = radius;
    geom.includes_zero_offset = (radius == 1);

    const int lo = (radius - 1) * (radius - 1);
    const int hi = radius * radius;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            const int d2 = dx * dx + dy * dy;
            if (d2 > lo && d2 <= hi)
                geom.offsets.push_back({dx, dy, d2});
        }
    }

    if (geom.includes_zero_offset)
        geom.dist_sq_values.push_back(0);
    for (const auto& o : geom.offsets)
        geom.dist_sq_values.push_back(o.dist_sq);
    std::sort(geom.dist_sq_values.begin(), geom.dist_sq_values.end());
    geom.dist_sq_values.erase(
        std::unique(geom.dist_sq_values.begin(), geom.dist_sq_values.end()),
        geom.dist_sq_values.end());
    return geom;
}

int k_max(Network net, int radius, int channels) {
    const int spatial = static_cast<int>(shell_offsets(radius).offsets.size());
    const int w = spatial;
    const int b = spatial * (channels - 1) + (channels - 1);
    switch (net) {
        case Network::W: return w;
        case Network::B: return b;
        case Network::N: return w + b;
    }
    return 0;
}

int interior_neighbor_count(Network net, int radius, int channels) {
    const int spatial = static_cast<int>(shell_offsets(radius).offsets.size());
    const int zero_pairs = (radius == 1) ? channels - 1 : 0;
    const int w = spatial;
    const int b = spatial * (channels - 1) + zero_pairs;
    switch (net) {
        case Network::W: return w;
        case Network::B: return b;
        case Network::N: return w + b;
    }
    return 0;
}

} // namespace ssn
