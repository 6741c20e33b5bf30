#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "afmc/rng.hpp"

namespace afmc {

enum class LawKind { rademacher, lazy_lattice, finite_lattice, gaussian_iid, pareto_lattice };

struct LawProperties {
    double sigma;      // NaN for pareto_lattice (infinite variance)
    double span;       // lattice span (gcd of support gaps); 0 for non-lattice laws
    double p_nonzero;  // 1 - P(xi = 0)
    bool aperiodic;
    double alpha;      // stability/tail index; 2 for finite-variance laws
};

// Distribution of one walk increment xi_k. Zero-mean by construction; lattice
// laws live on (span * Z) and optionally get divided by sigma when sampling
// ("standardize") so that downstream scaling is always S_k / n^{1/alpha}.
class IncrementLaw {
public:
    static IncrementLaw rademacher(bool standardize = false);
    static IncrementLaw lazy_lattice(double p0, bool standardize = false);
    static IncrementLaw finite_lattice(std::vector<int> support, std::vector<double> probs,
                                       bool standardize = false);
    static IncrementLaw gaussian_iid(int d);
    // Symmetric heavy-tailed lattice law, P(xi = +-k*h) proportional to
    // k^{-1-alpha}. The spacing h is calibrated so that n^{-1/alpha} S_n
    // converges to the stable law with characteristic function exp(-|u|^alpha).
    static IncrementLaw pareto_lattice(double alpha);

    LawKind kind() const { return kind_; }
    int dim() const { return dim_; }
    bool standardized() const { return standardize_; }
    double alpha() const { return alpha_; }
    double sigma() const { return sigma_; }
    double span() const { return span_; }
    double p_nonzero() const { return p_nonzero_; }
    bool aperiodic() const { return aperiodic_; }
    // smallest possible nonzero |xi| (before standardization); 0 for gaussian
    double min_abs_step() const { return min_abs_step_; }
    // what samples get divided by (sigma if standardize, else 1)
    double divisor() const;

    bool is_finite_lattice() const {
        return kind_ == LawKind::rademacher || kind_ == LawKind::lazy_lattice ||
               kind_ == LawKind::finite_lattice;
    }
    const std::vector<int>& support() const { return support_; }
    const std::vector<double>& probs() const { return probs_; }

    LawProperties properties() const;

    // one draw; law must be scalar (dim == 1)
    double sample1(RngStream& stream) const;
    // one draw into out (out.size() == dim)
    void sample(RngStream& stream, std::span<double> out) const;

private:
    IncrementLaw() = default;
    void finalize_lattice();

    LawKind kind_ = LawKind::rademacher;
    int dim_ = 1;
    bool standardize_ = false;
    double alpha_ = 2.0;
    double sigma_ = 1.0;
    double span_ = 0.0;
    double p_nonzero_ = 1.0;
    bool aperiodic_ = true;
    double min_abs_step_ = 0.0;

    std::vector<int> support_;   // lattice offsets, ascending
    std::vector<double> probs_;  // matching probabilities
    std::vector<double> cdf_;

    double pareto_h_ = 0.0;        // lattice spacing for pareto_lattice
    double pareto_zeta_ = 0.0;     // zeta(1 + alpha)
};

// One draw from the symmetric alpha-stable law with characteristic function
// exp(-|u|^alpha), via the Chambers-Mallows-Stuck transform.
double stable_variate(double alpha, RngStream& stream);

// Hurwitz zeta(s, a) for s > 1, a > 0 (Euler-Maclaurin); used by the
// pareto_lattice tail inversion and exposed for tests.
double hurwitz_zeta(double s, double a);

} // namespace afmc
