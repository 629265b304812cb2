#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/rng.hpp"

// Random geometric graph sampling on the unit square S = [-1/2,1/2]^2:
// n points i.i.d. from a bounded density, edges between pairs at Euclidean
// distance strictly below r.

namespace longcycle {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double dist2(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Density on S: uniform, or a custom bounded evaluator with declared
// inf/sup bounds. Custom densities sample by rejection against the uniform
// envelope scaled by sup; every evaluation is checked against the declared
// bounds (the "rejection accounting" of the model contract).
class DensitySpec {
public:
    static DensitySpec uniform() { return DensitySpec{}; }

    static DensitySpec bounded_custom(std::function<double(double, double)> f,
                                      double inf_bound, double sup_bound) {
        if (!(inf_bound > 0.0) || !(sup_bound >= inf_bound) || !std::isfinite(sup_bound))
            throw std::invalid_argument("DensitySpec: need 0 < inf f <= sup f < inf");
        DensitySpec d;
        d.f_ = std::move(f);
        d.inf_ = inf_bound;
        d.sup_ = sup_bound;
        return d;
    }

    bool is_uniform() const { return !f_; }
    double inf_bound() const { return inf_; }
    double sup_bound() const { return sup_; }

    double evaluate(double x, double y) const {
        const double v = f_(x, y);
        if (!(v >= inf_ && v <= sup_))
            throw std::invalid_argument("DensitySpec: evaluator broke its declared bounds at (" +
                                        std::to_string(x) + "," + std::to_string(y) + ")");
        return v;
    }

private:
    std::function<double(double, double)> f_; // empty => uniform
    double inf_ = 1.0;
    double sup_ = 1.0;
};

struct PointCloud {
    std::vector<Point> points;
    double r = 0.0;

    int n() const { return static_cast<int>(points.size()); }
};

namespace detail {

inline Point sample_point(const DensitySpec& density, Rng& rng) {
    if (density.is_uniform()) {
        const double x = rng.uniform01() - 0.5;
        const double y = rng.uniform01() - 0.5;
        return {x, y};
    }
    for (;;) {
        const double x = rng.uniform01() - 0.5;
        const double y = rng.uniform01() - 0.5;
        const double u = rng.uniform01();
        if (u * density.sup_bound() < density.evaluate(x, y)) return {x, y};
    }
}

} // namespace detail

// Geometric edges via a bucket grid of cell width >= r: each pair is examined
// once (canonical i<j), candidates from the 3x3 cell neighborhood. The edge
// set is identical to the quadratic scan; only the examination order differs,
// and Graph canonicalizes adjacency order.
inline Graph geometric_edges(const std::vector<Point>& pts, double r) {
    const int n = static_cast<int>(pts.size());
    Graph g(n);
    const double r2 = r * r;
    int cells = std::max(1, static_cast<int>(std::floor(1.0 / r)));
    if (cells > n + 1) cells = n + 1; // no point in a grid finer than the data
    const double cw = 1.0 / cells;
    std::vector<std::vector<int>> bucket(static_cast<std::size_t>(cells) * cells);
    auto cell_of = [&](const Point& p) {
        int cx = static_cast<int>((p.x + 0.5) / cw);
        int cy = static_cast<int>((p.y + 0.5) / cw);
        cx = std::min(std::max(cx, 0), cells - 1);
        cy = std::min(std::max(cy, 0), cells - 1);
        return std::pair<int, int>(cx, cy);
    };
    for (int i = 0; i < n; ++i) {
        auto [cx, cy] = cell_of(pts[static_cast<std::size_t>(i)]);
        bucket[static_cast<std::size_t>(cy) * cells + cx].push_back(i);
    }
    for (int i = 0; i < n; ++i) {
        auto [cx, cy] = cell_of(pts[static_cast<std::size_t>(i)]);
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                const int nx = cx + dx, ny = cy + dy;
                if (nx < 0 || ny < 0 || nx >= cells || ny >= cells) continue;
                for (int j : bucket[static_cast<std::size_t>(ny) * cells + nx]) {
                    if (j <= i) continue;
                    if (dist2(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]) < r2)
                        g.add_edge(i, j);
                }
            }
        }
    }
    g.finalize();
    return g;
}

inline std::pair<PointCloud, Graph> sample_rgg(int n, double r, const DensitySpec& density,
                                               std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_rgg: n < 1");
    if (!(r > 0.0)) throw std::invalid_argument("sample_rgg: r must be positive");
    Rng rng(seed);
    PointCloud cloud;
    cloud.r = r;
    cloud.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cloud.points.push_back(detail::sample_point(density, rng));
    Graph g = geometric_edges(cloud.points, r);
    return {std::move(cloud), std::move(g)};
}

// ===== text format =====
// First line "n r", then one line "x y" per point, 17 significant digits.

inline void write_point_cloud(std::ostream& os, const PointCloud& cloud) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d %.17g\n", cloud.n(), cloud.r);
    os << buf;
    for (const auto& p : cloud.points) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x, p.y);
        os << buf;
    }
}

inline PointCloud read_point_cloud(std::istream& is) {
    PointCloud cloud;
    int n = 0;
    if (!(is >> n >> cloud.r)) throw std::invalid_argument("point cloud parse: bad header");
    cloud.points.resize(static_cast<std::size_t>(n));
    for (auto& p : cloud.points)
        if (!(is >> p.x >> p.y)) throw std::invalid_argument("point cloud parse: truncated");
    return cloud;
}

} // namespace longcycle
