#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "longcycle/rgg.hpp"

// Tiling layer: the unit square is cut into a k x k grid of side-s squares
// (s = 1/k), points are binned per the origin convention, and squares are
// classified dense (>= 8 vertices) or sparse. Also the side-selection rules:
// K_n band scaling, the epsilon1 rule for the long-cycle tiling and the t_n
// rule for the Hamiltonian tiling.

namespace longcycle {

// Least integer strictly greater than x ("strict ceiling"): integer x maps
// to x+1.
inline long long strict_ceil(double x) {
    const double f = std::floor(x);
    return static_cast<long long>(f) + 1;
}

inline int compute_Kn(int n, double r) {
    if (n < 1 || !(r > 0.0)) throw std::invalid_argument("compute_Kn: need n >= 1, r > 0");
    const double ratio = std::log(static_cast<double>(n)) / (n * r * r);
    long long k = strict_ceil(ratio);
    if (k < 1) k = 1;
    return static_cast<int>(k);
}

// Smallest k with 4/r < k < 5/r, i.e. s = 1/k makes eps1 = s/r lie strictly
// inside (1/5, 1/4). Guarantees the star-adjacency property 2*sqrt(2)*s < r.
struct SideChoice {
    double s = 0.0;
    int k = 0;
};

inline SideChoice choose_epsilon1(double r) {
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("choose_epsilon1: need 0 < r <= 1");
    const long long k = static_cast<long long>(std::floor(4.0 / r)) + 1;
    if (!(static_cast<double>(k) > 4.0 / r && static_cast<double>(k) < 5.0 / r))
        throw std::invalid_argument("choose_epsilon1: no integer in (4/r, 5/r) for r = " +
                                    std::to_string(r));
    return {1.0 / static_cast<double>(k), static_cast<int>(k)};
}

// Hamiltonian-regime side: 8 n t^2 = log n + 7 log log n + omega_n - delta_n
// with delta_n in (1,2) open and 1/t = k integer; smallest valid k. The
// integer constraint makes the rule infeasible for many (n, omega) pairs;
// that is reported, not fudged.
struct TnChoice {
    double t = 0.0;
    int k = 0;
    double delta_n = 0.0;
};

inline TnChoice choose_tn(int n, double omega_n) {
    if (n < 3) throw std::invalid_argument("choose_tn: n < 3");
    const double L = std::log(static_cast<double>(n)) +
                     7.0 * std::log(std::log(static_cast<double>(n))) + omega_n;
    if (!(L - 2.0 > 0.0))
        throw std::invalid_argument("choose_tn: target 8nt^2 not positive; omega too small");
    // delta in (1,2)  <=>  8n/k^2 in (L-2, L+... ) reversed:
    // k in ( sqrt(8n/(L-1)), sqrt(8n/(L-2)) ), open on both sides.
    const double lo = std::sqrt(8.0 * n / (L - 1.0));
    const double hi = std::sqrt(8.0 * n / (L - 2.0));
    const long long k = static_cast<long long>(std::floor(lo)) + 1;
    const double delta = L - 8.0 * n / (static_cast<double>(k) * k);
    if (!(static_cast<double>(k) > lo && static_cast<double>(k) < hi) ||
        !(delta > 1.0 && delta < 2.0))
        throw std::invalid_argument(
            "choose_tn: no integer 1/t gives delta_n in (1,2) for n = " + std::to_string(n) +
            ", omega = " + std::to_string(omega_n) + " (open interval for 1/t: (" +
            std::to_string(lo) + ", " + std::to_string(hi) + "))");
    return {1.0 / static_cast<double>(k), static_cast<int>(k), delta};
}

// Square (a,b) covers [-1/2+as, -1/2+(a+1)s) x [-1/2+bs, -1/2+(b+1)s); the
// top row and right column are closed so boundary points stay inside the
// partition. Square id = b*k + a.
class Tiling {
public:
    Tiling(const PointCloud& cloud, double s) : s_(s) {
        const double kd = 1.0 / s;
        k_ = static_cast<int>(std::llround(kd));
        if (k_ < 1 || std::abs(kd - static_cast<double>(k_)) > 1e-9 * kd)
            throw std::invalid_argument("Tiling: 1/s must be an integer");
        cells_.assign(static_cast<std::size_t>(k_) * k_, {});
        for (int i = 0; i < cloud.n(); ++i) {
            const auto& p = cloud.points[static_cast<std::size_t>(i)];
            if (p.x < -0.5 || p.x > 0.5 || p.y < -0.5 || p.y > 0.5)
                throw std::invalid_argument("Tiling: point outside the unit square");
            cells_[static_cast<std::size_t>(square_of(p.x, p.y))].push_back(i);
        }
        dense_.assign(cells_.size(), 0);
        for (std::size_t j = 0; j < cells_.size(); ++j)
            dense_[j] = cells_[j].size() >= 8 ? 1 : 0;
        n_points_ = cloud.n();
    }

    double s() const { return s_; }
    int k() const { return k_; }
    int n_points() const { return n_points_; }
    int square_count() const { return k_ * k_; }

    int square_of(double x, double y) const {
        int a = static_cast<int>(std::floor((x + 0.5) / s_));
        int b = static_cast<int>(std::floor((y + 0.5) / s_));
        a = std::min(std::max(a, 0), k_ - 1);
        b = std::min(std::max(b, 0), k_ - 1);
        return b * k_ + a;
    }

    int col(int id) const { return id % k_; }
    int row(int id) const { return id / k_; }
    int id(int a, int b) const { return b * k_ + a; }

    const std::vector<int>& vertices_in(int id) const {
        return cells_[static_cast<std::size_t>(id)];
    }
    bool dense(int id) const { return dense_[static_cast<std::size_t>(id)] != 0; }
    int dense_count() const {
        int c = 0;
        for (char d : dense_) c += d;
        return c;
    }

    // star = Chebyshev distance 1 (edge or corner shared); plus = edge shared.
    template <typename F>
    void for_star_neighbors(int id, F&& fn) const {
        const int a = col(id), b = row(id);
        for (int db = -1; db <= 1; ++db)
            for (int da = -1; da <= 1; ++da) {
                if (da == 0 && db == 0) continue;
                const int na = a + da, nb = b + db;
                if (na < 0 || nb < 0 || na >= k_ || nb >= k_) continue;
                fn(this->id(na, nb));
            }
    }

    template <typename F>
    void for_plus_neighbors(int id, F&& fn) const {
        const int a = col(id), b = row(id);
        constexpr int D[4][2] = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};
        for (const auto& d : D) {
            const int na = a + d[0], nb = b + d[1];
            if (na < 0 || nb < 0 || na >= k_ || nb >= k_) continue;
            fn(this->id(na, nb));
        }
    }

private:
    double s_;
    int k_ = 0;
    int n_points_ = 0;
    std::vector<std::vector<int>> cells_;
    std::vector<char> dense_;
};

inline Tiling build_tiling(const PointCloud& cloud, double s) { return Tiling(cloud, s); }

// Bands: full-width (or full-height) strips of `height` consecutive rows
// (columns). They tile the grid; when k is not divisible by the height, the
// last band is [k-height, k) and overlaps the previous one.
struct Band {
    int lo = 0;  // first row (horizontal) or column (vertical), inclusive
    int hi = 0;  // exclusive
    bool horizontal = true;
};

struct BandSet {
    std::vector<Band> bands;
    int height = 0;
    bool overlap = false; // last band overlaps the previous one
};

inline BandSet make_bands(int k, int height, bool horizontal) {
    if (k < 1 || height < 1) throw std::invalid_argument("make_bands: bad dimensions");
    BandSet bs;
    bs.height = height;
    if (height >= k) {
        bs.bands.push_back({0, k, horizontal});
        return bs;
    }
    for (int lo = 0; lo + height <= k; lo += height)
        bs.bands.push_back({lo, lo + height, horizontal});
    if (k % height != 0) {
        bs.bands.push_back({k - height, k, horizontal});
        bs.overlap = true;
    }
    // band count bound: per orientation at most floor(k/height) + 1
    if (static_cast<int>(bs.bands.size()) > k / height + 1)
        throw std::logic_error("make_bands: band count bound violated");
    return bs;
}

// Debug dump: one row of {D,S} per grid row, top row first; squares on a
// crossing print '#'. `marks` holds square ids to overlay.
inline void write_tiling_grid(std::ostream& os, const Tiling& t, const std::vector<int>& marks) {
    std::vector<char> mark(static_cast<std::size_t>(t.square_count()), 0);
    for (int id : marks) mark[static_cast<std::size_t>(id)] = 1;
    for (int b = t.k() - 1; b >= 0; --b) {
        std::string line;
        for (int a = 0; a < t.k(); ++a) {
            const int id = t.id(a, b);
            line += mark[static_cast<std::size_t>(id)] ? '#' : (t.dense(id) ? 'D' : 'S');
        }
        os << line << '\n';
    }
}

} // namespace longcycle
