#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/rng.hpp"

// Inhomogeneous Erdos-Renyi model: every unordered pair (i,j) carries its own
// probability p(i,j), sampled independently. Three model kinds plus the
// structural audit of the row-average / set-average density conditions.

namespace longcycle {

class EdgeProbModel {
public:
    enum class Kind { homogeneous, weighted_product, explicit_matrix };

    static EdgeProbModel homogeneous(int n, double p_n) {
        EdgeProbModel m(n, p_n, Kind::homogeneous);
        return m;
    }

    // p(i,j) = min(1, p_n * w_i * w_j), all weights positive.
    static EdgeProbModel weighted_product(int n, double p_n, std::vector<double> weights) {
        EdgeProbModel m(n, p_n, Kind::weighted_product);
        if (static_cast<int>(weights.size()) != n)
            throw std::invalid_argument("EdgeProbModel: weight count != n");
        for (double w : weights)
            if (!(w > 0.0)) throw std::invalid_argument("EdgeProbModel: weights must be positive");
        m.weights_ = std::move(weights);
        return m;
    }

    // Upper-triangular matrix of explicit probabilities, entry index (i,j), i<j.
    static EdgeProbModel explicit_matrix(int n, double p_n, std::vector<double> upper) {
        EdgeProbModel m(n, p_n, Kind::explicit_matrix);
        const std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
        if (upper.size() != want)
            throw std::invalid_argument("EdgeProbModel: need n(n-1)/2 upper-triangular entries");
        for (double p : upper)
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("EdgeProbModel: probability outside [0,1]");
        m.matrix_ = std::move(upper);
        return m;
    }

    int n() const { return n_; }
    double p_n() const { return p_n_; }
    Kind kind() const { return kind_; }

    double prob(int i, int j) const {
        if (i == j) throw std::invalid_argument("EdgeProbModel: p(i,i) is undefined");
        if (i > j) std::swap(i, j);
        switch (kind_) {
            case Kind::homogeneous: return p_n_;
            case Kind::weighted_product:
                return std::min(1.0, p_n_ * weights_[static_cast<std::size_t>(i)] *
                                         weights_[static_cast<std::size_t>(j)]);
            case Kind::explicit_matrix: return matrix_[pair_index(i, j)];
        }
        return 0.0; // unreachable
    }

private:
    EdgeProbModel(int n, double p_n, Kind kind) : n_(n), p_n_(p_n), kind_(kind) {
        if (n < 1) throw std::invalid_argument("EdgeProbModel: n < 1");
        if (!(p_n >= 0.0 && p_n <= 1.0))
            throw std::invalid_argument("EdgeProbModel: p_n outside [0,1]");
    }

    // Index of (i,j), i<j, in row-major upper-triangular order.
    std::size_t pair_index(int i, int j) const {
        const auto n = static_cast<std::size_t>(n_);
        const auto a = static_cast<std::size_t>(i);
        const auto b = static_cast<std::size_t>(j);
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    }

    int n_;
    double p_n_;
    Kind kind_;
    std::vector<double> weights_;
    std::vector<double> matrix_;
};

// Pairs iterate in fixed (i<j) ascending order, one uniform draw each, so the
// seed contract is order-stable: edge present iff u < p(i,j).
inline Graph sample_er(const EdgeProbModel& model, std::uint64_t seed) {
    const int n = model.n();
    Rng rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.uniform01() < model.prob(i, j)) g.add_edge(i, j);
        }
    }
    g.finalize();
    return g;
}

// Audit of the density conditions: beta3_hat from per-vertex row averages,
// beta1_hat from averages over vertex sets S with #S >= m0, i not in S.
struct ConditionAudit {
    double beta3_hat = 0.0;
    double beta1_hat = 0.0;
    int m0 = 0;
    bool feasible = true; // false when m0 > n-1: the set condition is vacuous
};

inline ConditionAudit audit_conditions(const EdgeProbModel& model, double beta2) {
    if (!(beta2 > 0.0 && beta2 <= 1.0))
        throw std::invalid_argument("audit_conditions: beta2 outside (0,1]");
    const int n = model.n();
    if (n < 2) throw std::invalid_argument("audit_conditions: n < 2");

    ConditionAudit a;
    a.m0 = static_cast<int>(std::ceil(beta2 * n * model.p_n()));
    if (a.m0 < 1) a.m0 = 1;
    if (a.m0 > n - 1) {
        a.feasible = false;
        return a;
    }

    double min_row_avg = std::numeric_limits<double>::infinity();
    double min_prefix_avg = std::numeric_limits<double>::infinity();
    std::vector<double> row(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        std::size_t idx = 0;
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double p = model.prob(i, j);
            row[idx++] = p;
            sum += p;
        }
        min_row_avg = std::min(min_row_avg, sum / (n - 1));
        // Minimum average over sets of size >= m0 is attained on the m0
        // smallest entries: prefix averages of an ascending sort are
        // non-decreasing in the prefix length.
        std::sort(row.begin(), row.end());
        double prefix = 0.0;
        for (int t = 0; t < a.m0; ++t) prefix += row[static_cast<std::size_t>(t)];
        min_prefix_avg = std::min(min_prefix_avg, prefix / a.m0);
    }
    const double pn = model.p_n();
    if (!(pn > 0.0)) throw std::invalid_argument("audit_conditions: p_n must be positive");
    a.beta3_hat = min_row_avg / pn;
    a.beta1_hat = min_prefix_avg / pn;
    return a;
}

} // namespace longcycle
