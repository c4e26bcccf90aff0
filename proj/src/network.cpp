#include "ssn/network.hpp"

#include "ssn/error.hpp"
#include "ssn/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>

namespace ssn {

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::KIn: return "k_in";
        case Measure::SIn: return "s_in";
        case Measure::SOut: return "s_out";
    }
    return "?";
}

double edge_weight(int p_i, int p_j, double d, const EdgeRule& rule) {
    const double num = (std::abs(p_i - p_j) + 1.0) * (d + 1.0) - 1.0;
    const double den = (rule.levels + 1.0) * (rule.radius + 1.0) - 1.0;
    return num / den;
}

std::size_t MeasureMaps::plane(Network net, int radius, int channel) const {
    const auto n = static_cast<std::size_t>(net);
    return (n * max_radius_ + (radius - 1)) * channels_ + channel;
}

std::span<const std::int32_t> MeasureMaps::k_in(Network net, int radius,
                                                int channel) const {
    return k_in_[plane(net, radius, channel)];
}
std::span<const std::int32_t> MeasureMaps::k_out(Network net, int radius,
                                                 int channel) const {
    return k_out_[plane(net, radius, channel)];
}
std::span<const double> MeasureMaps::s_in(Network net, int radius,
                                          int channel) const {
    return s_in_[plane(net, radius, channel)];
}
std::span<const double> MeasureMaps::s_out(Network net, int radius,
                                           int channel) const {
    return s_out_[plane(net, radius, channel)];
}

namespace {

struct HalfOffset {
    int dx;
    int dy;
    int kidx; // index into the ring's ascending distinct d^2 list
};

// One unordered pair is visited once; the half set keeps offsets with
// dy > 0, or dy == 0 and dx > 0.
std::vector<HalfOffset> half_offsets(const ShellGeometry& geom) {
    std::vector<HalfOffset> half;
    for (const auto& o : geom.offsets) {
        if (o.dy > 0 || (o.dy == 0 && o.dx > 0)) {
            const auto it = std::lower_bound(geom.dist_sq_values.begin(),
                                             geom.dist_sq_values.end(), o.dist_sq);
            half.push_back({o.dx, o.dy,
                            static_cast<int>(it - geom.dist_sq_values.begin())});
        }
    }
    return half;
}

// Integer accumulators for one ring, stored pixel-major so a pair update
// touches two small contiguous blocks instead of dozens of distant planes.
// Per pixel and (net, dir, channel) the block holds the degree followed by
// the sums of (|delta|+1) grouped by squared distance; the final strengths
// reduce those groups in ascending-d^2 order, which makes the result
// independent of edge visiting order (the brute-force oracle reproduces it
// bit for bit).
struct RingScratch {
    int z;
    int kcount;
    std::size_t block;  // ints per (net, dir, channel): degree + kcount sums
    std::size_t stride; // ints per pixel
    std::vector<std::int32_t> a;

    RingScratch(int z_, int kcount_, std::size_t grid_)
        : z(z_), kcount(kcount_), block(static_cast<std::size_t>(kcount_) + 1),
          stride(static_cast<std::size_t>(4) * z_ * block),
          a(stride * grid_, 0) {}

    std::size_t offset(int net, int dir, int c) const {
        return ((static_cast<std::size_t>(net) * 2 + dir) * z + c) * block;
    }
    // block layout: [0] degree, [1 + kidx] sum of (delta + 1) for that d^2
    std::int32_t* at(std::size_t pixel, int net, int dir, int c) {
        return a.data() + pixel * stride + offset(net, dir, c);
    }
};

} // namespace

MeasureMaps compute_measures(const ColorPlanes& planes, int max_radius) {
    if (max_radius < 1)
        throw Error(ErrorCategory::Format, "max radius must be >= 1");
    if (planes.channels < 1 || planes.planes.empty())
        throw Error(ErrorCategory::Format, "empty color planes");

    const int w = planes.width;
    const int h = planes.height;
    const int z = planes.channels;
    const std::size_t grid = static_cast<std::size_t>(w) * h;

    MeasureMaps maps;
    maps.width_ = w;
    maps.height_ = h;
    maps.channels_ = z;
    maps.max_radius_ = max_radius;
    maps.levels_ = planes.levels;
    const std::size_t nplanes = static_cast<std::size_t>(3) * max_radius * z;
    maps.k_in_.assign(nplanes, std::vector<std::int32_t>(grid, 0));
    maps.k_out_.assign(nplanes, std::vector<std::int32_t>(grid, 0));
    maps.s_in_.assign(nplanes, std::vector<double>(grid, 0.0));
    maps.s_out_.assign(nplanes, std::vector<double>(grid, 0.0));

    std::vector<const std::int32_t*> px(z);
    for (int c = 0; c < z; ++c)
        px[c] = planes.planes[c].data();

    for (int radius = 1; radius <= max_radius; ++radius) {
        const ShellGeometry geom = shell_offsets(radius);
        const auto half = half_offsets(geom);
        const int kcount = static_cast<int>(geom.dist_sq_values.size());
        RingScratch scratch(z, kcount, grid);

        auto connect = [&](int net, std::size_t i1, int c1, int p1,
                           std::size_t i2, int c2, int p2, int kidx) {
            const std::int32_t a = std::abs(p1 - p2) + 1;
            if (p1 <= p2) { // edge (i1,c1) -> (i2,c2)
                std::int32_t* out1 = scratch.at(i1, net, 1, c1);
                ++out1[0];
                out1[1 + kidx] += a;
                std::int32_t* in2 = scratch.at(i2, net, 0, c2);
                ++in2[0];
                in2[1 + kidx] += a;
            }
            if (p2 <= p1) { // edge (i2,c2) -> (i1,c1)
                std::int32_t* out2 = scratch.at(i2, net, 1, c2);
                ++out2[0];
                out2[1 + kidx] += a;
                std::int32_t* in1 = scratch.at(i1, net, 0, c1);
                ++in1[0];
                in1[1 + kidx] += a;
            }
        };

        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const std::size_t i1 = static_cast<std::size_t>(y) * w + x;
                if (geom.includes_zero_offset) {
                    // Same pixel across channels: d = 0, always between-channel.
                    for (int c1 = 0; c1 < z; ++c1)
                        for (int c2 = c1 + 1; c2 < z; ++c2)
                            connect(1, i1, c1, px[c1][i1], i1, c2, px[c2][i1], 0);
                }
                for (const auto& off : half) {
                    const int x2 = x + off.dx;
                    const int y2 = y + off.dy;
                    if (x2 < 0 || x2 >= w || y2 < 0 || y2 >= h)
                        continue;
                    const std::size_t i2 = static_cast<std::size_t>(y2) * w + x2;
                    for (int c1 = 0; c1 < z; ++c1) {
                        const int p1 = px[c1][i1];
                        for (int c2 = 0; c2 < z; ++c2)
                            connect(c1 == c2 ? 0 : 1, i1, c1, p1, i2, c2,
                                    px[c2][i2], off.kidx);
                    }
                }
            }
        }

        // Reduce integer accumulators to degrees and strengths:
        //   s * D = sum_k A_k * sqrt(k) + (sum_k A_k - degree)
        const double den = (planes.levels + 1.0) * (radius + 1.0) - 1.0;
        std::vector<double> sqrt_d(kcount);
        for (int k = 0; k < kcount; ++k)
            sqrt_d[k] = std::sqrt(static_cast<double>(geom.dist_sq_values[k]));

        for (int net = 0; net < 2; ++net) {
            const Network which = net == 0 ? Network::W : Network::B;
            for (int c = 0; c < z; ++c) {
                const std::size_t p = maps.plane(which, radius, c);
                for (int dir = 0; dir < 2; ++dir) {
                    auto& s = dir == 0 ? maps.s_in_[p] : maps.s_out_[p];
                    auto& deg = dir == 0 ? maps.k_in_[p] : maps.k_out_[p];
                    const std::int32_t* blk =
                        scratch.a.data() + scratch.offset(net, dir, c);
                    for (std::size_t i = 0; i < grid; ++i, blk += scratch.stride) {
                        double acc = 0.0;
                        std::int64_t suma = 0;
                        for (int k = 0; k < kcount; ++k) {
                            acc += static_cast<double>(blk[1 + k]) * sqrt_d[k];
                            suma += blk[1 + k];
                        }
                        deg[i] = blk[0];
                        s[i] = (acc + static_cast<double>(suma - blk[0])) / den;
                    }
                }
            }
        }

        // N is the disjoint union of W and B, so its measures are their sums.
        for (int c = 0; c < z; ++c) {
            const std::size_t pn = maps.plane(Network::N, radius, c);
            const std::size_t pw = maps.plane(Network::W, radius, c);
            const std::size_t pb = maps.plane(Network::B, radius, c);
            for (std::size_t i = 0; i < grid; ++i) {
                maps.k_in_[pn][i] = maps.k_in_[pw][i] + maps.k_in_[pb][i];
                maps.k_out_[pn][i] = maps.k_out_[pw][i] + maps.k_out_[pb][i];
                maps.s_in_[pn][i] = maps.s_in_[pw][i] + maps.s_in_[pb][i];
                maps.s_out_[pn][i] = maps.s_out_[pw][i] + maps.s_out_[pb][i];
            }
        }
    }
    return maps;
}

std::uint64_t export_edgelist(const ColorPlanes& planes, int max_radius,
                              std::ostream& sink) {
    if (max_radius < 1)
        throw Error(ErrorCategory::Format, "max radius must be >= 1");

    const int w = planes.width;
    const int h = planes.height;
    const int z = planes.channels;

    std::vector<ShellGeometry> shells;
    for (int r = 1; r <= max_radius; ++r)
        shells.push_back(shell_offsets(r));

    std::uint64_t count = 0;
    auto emit = [&](int x1, int y1, int c1, int x2, int y2, int c2, double d,
                    int radius) {
        const int p1 = planes.at(x1, y1, c1);
        const int p2 = planes.at(x2, y2, c2);
        if (p1 > p2)
            return;
        const double wgt = edge_weight(p1, p2, d, {planes.levels, radius});
        sink << x1 << ',' << y1 << ',' << c1 << ',' << x2 << ',' << y2 << ','
             << c2 << ',' << format_double(wgt) << '\n';
        ++count;
    };

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < z; ++c) {
                for (const auto& geom : shells) {
                    if (geom.includes_zero_offset)
                        for (int c2 = 0; c2 < z; ++c2)
                            if (c2 != c)
                                emit(x, y, c, x, y, c2, 0.0, geom.radius);
                    for (const auto& off : geom.offsets) {
                        const int x2 = x + off.dx;
                        const int y2 = y + off.dy;
                        if (x2 < 0 || x2 >= w || y2 < 0 || y2 >= h)
                            continue;
                        const double d = std::sqrt(static_cast<double>(off.dist_sq));
                        for (int c2 = 0; c2 < z; ++c2)
                            emit(x, y, c, x2, y2, c2, d, geom.radius);
                    }
                }
            }
        }
    }
    return count;
}

} // namespace ssn
