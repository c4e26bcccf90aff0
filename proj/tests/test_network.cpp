#include "ssn/network.hpp"

#include "ssn/error.hpp"
#include "ssn/format.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

using namespace ssn;
using ssn::testing::oracle_edges;
using ssn::testing::oracle_edge_weight;
using ssn::testing::oracle_measures;
using ssn::testing::oracle_neighbors;
using ssn::testing::random_planes;

namespace {

ColorPlanes constant_planes(int w, int h, int z, int value) {
    ColorPlanes p;
    p.width = w;
    p.height = h;
    p.channels = z;
    p.levels = 255;
    p.space = ColorSpace::RGB;
    p.planes.assign(z, std::vector<std::int32_t>(static_cast<std::size_t>(w) * h,
                                                 value));
    return p;
}

void check_equals_oracle(const ColorPlanes& planes, int rn) {
    const MeasureMaps maps = compute_measures(planes, rn);
    const auto oracle = oracle_measures(planes, rn);
    for (const Network net : {Network::N, Network::W, Network::B}) {
        for (int r = 1; r <= rn; ++r) {
            for (int c = 0; c < planes.channels; ++c) {
                const auto ki = maps.k_in(net, r, c);
                const auto ko = maps.k_out(net, r, c);
                const auto si = maps.s_in(net, r, c);
                const auto so = maps.s_out(net, r, c);
                const auto& oki = oracle.k_in[oracle.plane(net, r, c)];
                const auto& oko = oracle.k_out[oracle.plane(net, r, c)];
                const auto& osi = oracle.s_in[oracle.plane(net, r, c)];
                const auto& oso = oracle.s_out[oracle.plane(net, r, c)];
                for (std::size_t i = 0; i < ki.size(); ++i) {
                    REQUIRE(ki[i] == oki[i]);
                    REQUIRE(ko[i] == oko[i]);
                    REQUIRE(si[i] == osi[i]); // bitwise
                    REQUIRE(so[i] == oso[i]);
                }
            }
        }
    }
}

} // namespace

TEST_CASE("edge weight endpoints") {
    CHECK(edge_weight(42, 42, 0.0, {255, 1}) == 0.0);
    CHECK(edge_weight(0, 255, 1.0, {255, 1}) == 1.0);
    CHECK(edge_weight(0, 255, 3.0, {255, 3}) == 1.0);
    CHECK(edge_weight(10, 20, 1.0, {255, 1}) == doctest::Approx(21.0 / 511.0));
    CHECK(edge_weight(20, 10, 1.0, {255, 1}) == edge_weight(10, 20, 1.0, {255, 1}));
}

TEST_CASE("edge weights stay in [0,1] and vanish only at zero difference "
          "and distance") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 100000; ++trial) {
        const int levels = 1 + static_cast<int>(rng() % 1024);
        const int radius = 1 + static_cast<int>(rng() % 10);
        const int p1 = static_cast<int>(rng() % (levels + 1));
        const int p2 = static_cast<int>(rng() % (levels + 1));
        const double d = (rng() % 10000) / 9999.0 * radius;
        const double w = edge_weight(p1, p2, d, {levels, radius});
        REQUIRE(w >= 0.0);
        REQUIRE(w <= 1.0);
        if (w == 0.0) {
            REQUIRE(p1 == p2);
            REQUIRE(d == 0.0);
        }
    }
}

TEST_CASE("constant image saturates interior degrees") {
    const ColorPlanes planes = constant_planes(9, 9, 3, 77);
    const MeasureMaps maps = compute_measures(planes, 2);

    for (int y = 2; y < 7; ++y) {
        for (int x = 2; x < 7; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * 9 + x;
            for (int c = 0; c < 3; ++c) {
                // Every pair is equal, so both directions exist everywhere.
                CHECK(maps.k_in(Network::N, 1, c)[i] == k_max(Network::N, 1, 3));
                CHECK(maps.k_out(Network::N, 1, c)[i] == k_max(Network::N, 1, 3));
                CHECK(maps.k_in(Network::N, 2, c)[i] ==
                      interior_neighbor_count(Network::N, 2, 3));
                CHECK(maps.k_in(Network::W, 1, c)[i] == 4);
                CHECK(maps.k_in(Network::B, 1, c)[i] == 10);
                // Ring-1 within-channel strengths: four unit-distance edges
                // of weight 1/511 each.
                CHECK(maps.s_in(Network::W, 1, c)[i] == 4.0 / 511.0);
            }
        }
    }
}

TEST_CASE("identical channels contribute zero-weight d=0 edges") {
    // 1x1 image: the only pairs are the same-pixel cross-channel ones.
    const ColorPlanes planes = constant_planes(1, 1, 3, 9);
    const MeasureMaps maps = compute_measures(planes, 1);
    for (int c = 0; c < 3; ++c) {
        CHECK(maps.k_in(Network::B, 1, c)[0] == 2);
        CHECK(maps.k_out(Network::B, 1, c)[0] == 2);
        CHECK(maps.s_in(Network::B, 1, c)[0] == 0.0);
        CHECK(maps.s_out(Network::B, 1, c)[0] == 0.0);
        CHECK(maps.k_in(Network::W, 1, c)[0] == 0);
    }
}

TEST_CASE("5x5x3 random image equals the edge-list oracle") {
    check_equals_oracle(random_planes(5, 5, 3, 2024), 2);
}

TEST_CASE("streaming equals the oracle across a random corpus") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const int w = 1 + static_cast<int>(rng() % 7);
        const int h = 1 + static_cast<int>(rng() % 7);
        const int z = (rng() % 4 == 0) ? 1 : 3;
        const int rn = 1 + static_cast<int>(rng() % 3);
        check_equals_oracle(random_planes(w, h, z, rng()), rn);
    }
}

TEST_CASE("degree conservation against direct neighbor counts") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        const int w = 2 + static_cast<int>(rng() % 5);
        const int h = 2 + static_cast<int>(rng() % 5);
        const ColorPlanes planes = random_planes(w, h, 3, rng());
        const int rn = 2;
        const MeasureMaps maps = compute_measures(planes, rn);
        for (int r = 1; r <= rn; ++r)
            for (int c = 0; c < 3; ++c)
                for (int y = 0; y < h; ++y)
                    for (int x = 0; x < w; ++x) {
                        const std::size_t i = static_cast<std::size_t>(y) * w + x;
                        const auto count = oracle_neighbors(planes, x, y, c, r);
                        // Equal-intensity neighbors carry one edge in each
                        // direction, so they count twice.
                        REQUIRE(maps.k_in(Network::N, r, c)[i] +
                                    maps.k_out(Network::N, r, c)[i] ==
                                count.total + count.equal);
                    }
    }
}

TEST_CASE("tie-free image: k_in + k_out equals the neighbor count exactly") {
    // 49 distinct values over one channel eliminate equal-intensity pairs.
    ColorPlanes planes = constant_planes(7, 7, 1, 0);
    std::vector<std::int32_t> values(49);
    std::iota(values.begin(), values.end(), 0);
    std::shuffle(values.begin(), values.end(), std::mt19937(8));
    planes.planes[0] = values;

    const MeasureMaps maps = compute_measures(planes, 2);
    for (int r = 1; r <= 2; ++r)
        for (int y = 0; y < 7; ++y)
            for (int x = 0; x < 7; ++x) {
                const std::size_t i = static_cast<std::size_t>(y) * 7 + x;
                const auto count = oracle_neighbors(planes, x, y, 0, r);
                CHECK(count.equal == 0);
                CHECK(maps.k_in(Network::N, r, 0)[i] +
                          maps.k_out(Network::N, r, 0)[i] ==
                      count.total);
            }
    // Interior vertices reach the full geometric count.
    const auto center = oracle_neighbors(planes, 3, 3, 0, 2);
    CHECK(center.total == interior_neighbor_count(Network::N, 2, 1));
}

TEST_CASE("N decomposes into W plus B per vertex") {
    const ColorPlanes planes = random_planes(6, 5, 3, 77);
    const MeasureMaps maps = compute_measures(planes, 3);
    for (int r = 1; r <= 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < 30; ++i) {
                CHECK(maps.k_in(Network::N, r, c)[i] ==
                      maps.k_in(Network::W, r, c)[i] +
                          maps.k_in(Network::B, r, c)[i]);
                CHECK(maps.s_in(Network::N, r, c)[i] ==
                      maps.s_in(Network::W, r, c)[i] +
                          maps.s_in(Network::B, r, c)[i]);
                CHECK(maps.s_out(Network::N, r, c)[i] ==
                      maps.s_out(Network::W, r, c)[i] +
                          maps.s_out(Network::B, r, c)[i]);
            }
}

TEST_CASE("rings neither overlap nor miss pairs inside the disk") {
    const ColorPlanes planes = random_planes(6, 6, 3, 4242);
    const int rn = 3;
    // Each vertex's per-ring neighborhoods must tile its disk neighborhood.
    for (int y = 0; y < 6; ++y)
        for (int x = 0; x < 6; ++x) {
            int ring_sum = 0;
            for (int r = 1; r <= rn; ++r)
                ring_sum += oracle_neighbors(planes, x, y, 0, r).total;
            int disk = 0;
            for (int y2 = 0; y2 < 6; ++y2)
                for (int x2 = 0; x2 < 6; ++x2)
                    for (int c2 = 0; c2 < 3; ++c2) {
                        if (x2 == x && y2 == y && c2 == 0)
                            continue;
                        const int d2 = (x - x2) * (x - x2) + (y - y2) * (y - y2);
                        if (d2 <= rn * rn)
                            ++disk;
                    }
            CHECK(ring_sum == disk);
        }
}

TEST_CASE("within-channel measures are invariant to illumination shifts") {
    ColorPlanes base = random_planes(6, 6, 3, 909);
    for (auto& plane : base.planes)
        for (auto& v : plane)
            v = v % 200; // headroom so the shift cannot clip
    ColorPlanes shifted = base;
    for (auto& plane : shifted.planes)
        for (auto& v : plane)
            v += 40;

    const MeasureMaps a = compute_measures(base, 2);
    const MeasureMaps b = compute_measures(shifted, 2);
    for (int r = 1; r <= 2; ++r)
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < 36; ++i) {
                CHECK(a.k_in(Network::W, r, c)[i] == b.k_in(Network::W, r, c)[i]);
                CHECK(a.s_in(Network::W, r, c)[i] == b.s_in(Network::W, r, c)[i]);
                CHECK(a.s_out(Network::W, r, c)[i] == b.s_out(Network::W, r, c)[i]);
            }
}

TEST_CASE("transposing the image transposes the measure maps") {
    const ColorPlanes planes = random_planes(5, 7, 3, 31);
    ColorPlanes transposed;
    transposed.width = planes.height;
    transposed.height = planes.width;
    transposed.channels = planes.channels;
    transposed.levels = planes.levels;
    transposed.space = planes.space;
    transposed.planes.assign(3, std::vector<std::int32_t>(35));
    for (int y = 0; y < planes.height; ++y)
        for (int x = 0; x < planes.width; ++x)
            for (int c = 0; c < 3; ++c)
                transposed.planes[c][static_cast<std::size_t>(x) * planes.height +
                                     y] = planes.at(x, y, c);

    const MeasureMaps a = compute_measures(planes, 2);
    const MeasureMaps b = compute_measures(transposed, 2);
    for (const Network net : {Network::N, Network::W, Network::B})
        for (int r = 1; r <= 2; ++r)
            for (int c = 0; c < 3; ++c)
                for (int y = 0; y < planes.height; ++y)
                    for (int x = 0; x < planes.width; ++x) {
                        const std::size_t i =
                            static_cast<std::size_t>(y) * planes.width + x;
                        const std::size_t j =
                            static_cast<std::size_t>(x) * planes.height + y;
                        CHECK(a.k_in(net, r, c)[i] == b.k_in(net, r, c)[j]);
                        CHECK(a.s_in(net, r, c)[i] == b.s_in(net, r, c)[j]);
                        CHECK(a.s_out(net, r, c)[i] == b.s_out(net, r, c)[j]);
                    }
}

TEST_CASE("edge list export is deterministic and matches the oracle") {
    const ColorPlanes planes = random_planes(4, 4, 3, 88);
    std::ostringstream first, second;
    const std::uint64_t count1 = export_edgelist(planes, 2, first);
    const std::uint64_t count2 = export_edgelist(planes, 2, second);
    CHECK(first.str() == second.str());
    CHECK(count1 == count2);

    const auto edges = oracle_edges(planes, 2);
    CHECK(count1 == edges.size());

    // Same multiset of lines, independently formatted from the oracle edges.
    std::map<std::string, int> expected;
    for (const auto& e : edges) {
        std::ostringstream line;
        line << e.src_x << ',' << e.src_y << ',' << e.src_c << ',' << e.dst_x
             << ',' << e.dst_y << ',' << e.dst_c << ','
             << format_double(oracle_edge_weight(e, planes.levels));
        ++expected[line.str()];
    }
    std::istringstream in(first.str());
    std::string line;
    std::map<std::string, int> actual;
    while (std::getline(in, line))
        ++actual[line];
    CHECK(actual == expected);
}

TEST_CASE("invalid radius is rejected") {
    const ColorPlanes planes = random_planes(3, 3, 3, 1);
    CHECK_THROWS_AS(compute_measures(planes, 0), Error);
}

TEST_CASE("rings larger than the image are allowed") {
    const ColorPlanes planes = random_planes(3, 3, 3, 2);
    const MeasureMaps maps = compute_measures(planes, 5);
    // Ring 5 cannot fit inside 3x3; everything must be zero there.
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < 9; ++i) {
            CHECK(maps.k_in(Network::N, 5, c)[i] == 0);
            CHECK(maps.s_in(Network::N, 5, c)[i] == 0.0);
        }
}
