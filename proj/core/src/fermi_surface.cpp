#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "pairlight/band.hpp"

namespace pairlight {

namespace {

constexpr std::int64_t kNoSegment = -1;

// Edge bookkeeping on the (n+1) x (n+1) node lattice that closes the zone.
// Horizontal edges join (i, j)-(i+1, j); vertical edges join (i, j)-(i, j+1).
struct EdgeIndex {
    std::size_t n;

    std::size_t horizontal(std::size_t i, std::size_t j) const { return i * (n + 1) + j; }
    std::size_t vertical(std::size_t i, std::size_t j) const { return n * (n + 1) + i * n + j; }
    std::size_t count() const { return 2 * n * (n + 1); }
};

}  // namespace

FermiSurface fermi_surface(const BandParams& p, const KGrid& grid, Helicity xi) {
    const auto n = static_cast<std::size_t>(grid.n());
    const std::size_t nodes = n + 1;

    std::vector<double> axis(nodes);
    for (std::size_t i = 0; i < n; ++i) axis[i] = grid.coordinate(static_cast<int>(i));
    axis[n] = axis[0] + kTwoPi;

    // Values on the closed lattice; the extra row/column repeats index 0.
    std::vector<double> value(nodes * nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        for (std::size_t j = 0; j < nodes; ++j) {
            value[i * nodes + j] = helical_dispersion(grid[(i % n) * n + (j % n)], xi, p);
        }
    }
    auto at = [&](std::size_t i, std::size_t j) { return value[i * nodes + j]; };

    const EdgeIndex edges{n};
    std::vector<KPoint> crossing(edges.count());
    std::vector<std::array<std::int64_t, 2>> touching(edges.count(), {kNoSegment, kNoSegment});
    std::vector<std::array<std::size_t, 2>> segments;

    auto interpolate = [](double va, double vb) { return va / (va - vb); };
    auto record = [&](std::size_t e0, std::size_t e1) {
        const auto id = static_cast<std::int64_t>(segments.size());
        segments.push_back({e0, e1});
        for (std::size_t e : {e0, e1}) {
            auto& slot = touching[e];
            (slot[0] == kNoSegment ? slot[0] : slot[1]) = id;
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Corners counter-clockwise from (i, j).
            const std::array<double, 4> v{at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            const std::array<std::size_t, 4> edge{edges.horizontal(i, j), edges.vertical(i + 1, j),
                                                  edges.horizontal(i, j + 1), edges.vertical(i, j)};
            std::array<bool, 4> below{};
            for (int c = 0; c < 4; ++c) below[c] = v[c] < 0.0;

            std::array<int, 4> cut{};
            int cuts = 0;
            for (int e = 0; e < 4; ++e) {
                const int a = e;
                const int b = (e + 1) % 4;
                if (below[a] == below[b]) continue;
                cut[cuts++] = e;
                const double f = interpolate(v[a], v[b]);
                KPoint pos;
                switch (e) {
                    case 0: pos = {axis[i] + f * (axis[i + 1] - axis[i]), axis[j]}; break;
                    case 1: pos = {axis[i + 1], axis[j] + f * (axis[j + 1] - axis[j])}; break;
                    case 2: pos = {axis[i + 1] + f * (axis[i] - axis[i + 1]), axis[j + 1]}; break;
                    default: pos = {axis[i], axis[j + 1] + f * (axis[j] - axis[j + 1])}; break;
                }
                crossing[edge[e]] = pos;
            }

            if (cuts == 2) {
                record(edge[cut[0]], edge[cut[1]]);
            } else if (cuts == 4) {
                // Saddle: the cell-centre average decides which corners connect.
                const bool centre_below = 0.25 * (v[0] + v[1] + v[2] + v[3]) < 0.0;
                if (centre_below == below[0]) {
                    record(edge[0], edge[1]);
                    record(edge[2], edge[3]);
                } else {
                    record(edge[3], edge[0]);
                    record(edge[1], edge[2]);
                }
            }
        }
    }

    FermiSurface fs;
    fs.tolerance = (2.0 * p.t + p.lambda) * grid.spacing();

    std::vector<bool> used(segments.size(), false);
    auto walk = [&](std::size_t start_edge, std::int64_t start_segment) {
        ContourLine line;
        line.xi = xi;
        line.vertices.push_back(crossing[start_edge]);
        std::size_t here = start_edge;
        std::int64_t seg = start_segment;
        while (seg != kNoSegment && !used[static_cast<std::size_t>(seg)]) {
            used[static_cast<std::size_t>(seg)] = true;
            const auto& s = segments[static_cast<std::size_t>(seg)];
            const std::size_t next = s[0] == here ? s[1] : s[0];
            if (next == start_edge) {
                line.closed = true;
                break;
            }
            line.vertices.push_back(crossing[next]);
            const auto& slot = touching[next];
            seg = slot[0] == seg ? slot[1] : slot[0];
            here = next;
        }
        fs.contours.push_back(std::move(line));
    };

    // Open polylines start at edges touched by a single segment (zone edge).
    for (std::size_t e = 0; e < touching.size(); ++e) {
        const auto& slot = touching[e];
        if (slot[0] != kNoSegment && slot[1] == kNoSegment && !used[static_cast<std::size_t>(slot[0])]) {
            walk(e, slot[0]);
        }
    }
    for (std::size_t s = 0; s < segments.size(); ++s) {
        if (!used[s]) walk(segments[s][0], static_cast<std::int64_t>(s));
    }
    return fs;
}

}  // namespace pairlight
