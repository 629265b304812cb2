#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

// Closed-form bound calculators: the Chernoff exponent q(delta), the two-sided
// tail bound built from it, and the longest-path / Hamiltonicity bounds of the
// main theorem together with their homogeneous corollary forms.

namespace longcycle {

// q(delta) defined through e^{-q} = min(e^d/(1+d)^{1+d}, e^{-d}/(1-d)^{1-d}),
// with (1-d)^{1-d} := 1 at d=1. Computed in log space; the second branch is
// the smaller one on (0,1), i.e. q equals the lower-tail exponent
// d + (1-d)ln(1-d).
inline double chernoff_q(double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("chernoff_q: delta must be in (0,1]");
    const double ln_b1 = delta - (1.0 + delta) * std::log1p(delta);
    const double ln_b2 =
        (delta == 1.0) ? -1.0 : -delta - (1.0 - delta) * std::log1p(-delta);
    return -std::min(ln_b1, ln_b2);
}

struct TailBound {
    double value = 0.0;  // min(1, 2 exp(-q(alpha) mu))
    bool clamped = false;
};

// Bound on P(|T_m - mu| >= mu*alpha) for sums of independent Bernoullis with
// mean mu. Note: dominance of the exact two-sided binomial tail is a *tested*
// claim, not assumed here (see the acceptance suite).
inline TailBound chernoff_tail_bound(double mu, double alpha) {
    if (!(mu > 0.0)) throw std::invalid_argument("chernoff_tail_bound: mu must be positive");
    TailBound b;
    b.value = 2.0 * std::exp(-chernoff_q(alpha) * mu);
    if (b.value > 1.0) {
        b.value = 1.0;
        b.clamped = true;
    }
    return b;
}

struct BoundParams {
    int n = 0;
    double p_n = 0.0;
    double beta1 = 1.0;
    double beta2 = 1.0;
    double delta = 0.5;
    std::optional<double> M;  // set when the np^2 = M log n regime is intended

    void validate() const {
        if (n < 3) throw std::invalid_argument("BoundParams: n < 3");
        if (!(p_n >= 0.0 && p_n <= 1.0)) throw std::invalid_argument("BoundParams: p_n outside [0,1]");
        if (!(beta1 > 0.0 && beta1 <= 1.0) || !(beta2 > 0.0 && beta2 <= 1.0) ||
            !(beta1 * beta2 > 0.0 && beta1 * beta2 <= 1.0))
            throw std::invalid_argument("BoundParams: beta1*beta2 must lie in (0,1]");
        if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("BoundParams: delta outside (0,1)");
        if (M && !(*M > 0.0)) throw std::invalid_argument("BoundParams: M must be positive");
    }
};

enum class BoundRegime { general, log_regime };

struct TheoremOneReport {
    double expected_Ln_lower = 0.0;          // E L_n >= n - 2n exp(-b1 b2 n p^2)
    double Ln_threshold = 0.0;               // L_n >= n - 2n exp(-b1 b2 (1-d) n p^2) ...
    double prob_lower = 0.0;                 // ... with probability >= 1 - exp(-b1 b2 d n p^2)
    std::optional<double> ham_prob_lower;    // 1 - 2/n^{M1-1} when M1 = M b1 b2 > 1
    BoundRegime regime = BoundRegime::general;
    bool clamped_expectation = false;
    bool clamped_probability = false;
    bool log_regime_unavailable = false;     // M given but M1 <= 1
};

inline TheoremOneReport theorem1_bounds(const BoundParams& params) {
    params.validate();
    const double n = params.n;
    const double bb = params.beta1 * params.beta2;
    const double np2 = n * params.p_n * params.p_n;

    TheoremOneReport r;
    r.expected_Ln_lower = n - 2.0 * n * std::exp(-bb * np2);
    if (r.expected_Ln_lower < 0.0) {
        r.expected_Ln_lower = 0.0;
        r.clamped_expectation = true;
    }
    r.Ln_threshold = n - 2.0 * n * std::exp(-bb * (1.0 - params.delta) * np2);
    if (r.Ln_threshold < 0.0) {
        r.Ln_threshold = 0.0;
        r.clamped_expectation = true;
    }
    r.prob_lower = 1.0 - std::exp(-bb * params.delta * np2);
    if (r.prob_lower < 0.0) {
        r.prob_lower = 0.0;
        r.clamped_probability = true;
    }

    if (params.M) {
        r.regime = BoundRegime::log_regime;
        const double M1 = *params.M * bb;
        if (M1 > 1.0) {
            double h = 1.0 - 2.0 / std::pow(n, M1 - 1.0);
            if (h < 0.0) {
                h = 0.0;
                r.clamped_probability = true;
            }
            r.ham_prob_lower = h;
        } else {
            r.log_regime_unavailable = true;
        }
    }
    return r;
}

// Homogeneous corollary forms, kept separate so tests can assert that they
// coincide with the theorem's outputs under the matching substitutions:
//   corollary expectation(d)  == theorem threshold(d)      (same formula)
//   corollary threshold(d)    == theorem threshold(2d)
//   corollary prob(d)         == theorem prob(d)
//   corollary ham(M1 -> M)    == theorem ham
struct CorollaryOneReport {
    double expected_Ln_lower = 0.0;  // n - 2n exp(-(1-d) n p^2), d in (0,1/2)
    double Ln_threshold = 0.0;       // n - 2n exp(-(1-2d) n p^2)
    double prob_lower = 0.0;         // 1 - exp(-d n p^2)
    std::optional<double> ham_prob_lower;  // 1 - 2/n^{M1-1}, any 1 < M1 < M
};

inline CorollaryOneReport corollary1_bounds(int n, double p, double delta,
                                            std::optional<double> M = std::nullopt,
                                            std::optional<double> M1 = std::nullopt) {
    if (n < 3) throw std::invalid_argument("corollary1_bounds: n < 3");
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("corollary1_bounds: delta outside (0,1/2)");
    const double np2 = static_cast<double>(n) * p * p;
    CorollaryOneReport r;
    r.expected_Ln_lower = n - 2.0 * n * std::exp(-(1.0 - delta) * np2);
    r.Ln_threshold = n - 2.0 * n * std::exp(-(1.0 - 2.0 * delta) * np2);
    r.prob_lower = 1.0 - std::exp(-delta * np2);
    if (M && M1) {
        if (!(*M1 > 1.0 && *M1 <= *M))
            throw std::invalid_argument("corollary1_bounds: need 1 < M1 <= M");
        r.ham_prob_lower = 1.0 - 2.0 / std::pow(static_cast<double>(n), *M1 - 1.0);
    }
    return r;
}

// Reference forms of the geometric-graph statements. Their constants are not
// pinned down by the theory (only their existence is), so they are caller
// inputs with default 1; the harness prints these side by side with the
// measured frequencies.
struct RggCycleBounds {
    double lc_threshold = 0.0; // n - n exp(-delta1 n r^2)
    double prob_lower = 0.0;   // 1 - exp(-delta2 n r^2), clamped to [0,1]
};

inline RggCycleBounds rgg_longcycle_bounds(int n, double r, double delta1 = 1.0,
                                           double delta2 = 1.0) {
    if (n < 1 || !(r > 0.0) || !(delta1 > 0.0) || !(delta2 > 0.0))
        throw std::invalid_argument("rgg_longcycle_bounds: bad parameters");
    const double nr2 = static_cast<double>(n) * r * r;
    RggCycleBounds b;
    b.lc_threshold = n - n * std::exp(-delta1 * nr2);
    b.prob_lower = std::min(1.0, std::max(0.0, 1.0 - std::exp(-delta2 * nr2)));
    return b;
}

// 1 - C exp(-omega), clamped to [0,1]: the Hamiltonicity probability form in
// the nr^2 = log n + 7 log log n + omega regime.
inline double rgg_hamiltonian_bound(double omega, double C = 1.0) {
    if (!(C > 0.0)) throw std::invalid_argument("rgg_hamiltonian_bound: C <= 0");
    return std::min(1.0, std::max(0.0, 1.0 - C * std::exp(-omega)));
}

} // namespace longcycle
