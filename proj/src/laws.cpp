#include "afmc/laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "afmc/errors.hpp"

namespace afmc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

int gcd_of_support_gaps(const std::vector<int>& support) {
    int g = 0;
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j)
            g = std::gcd(g, std::abs(support[j] - support[i]));
    return g;
}

} // namespace

double hurwitz_zeta(double s, double a) {
    if (s <= 1.0 || a <= 0.0) throw NumericError("hurwitz_zeta: need s > 1, a > 0");
    // raise the argument until the Euler-Maclaurin tail is accurate
    double head = 0.0;
    while (a < 16.0) {
        head += std::pow(a, -s);
        a += 1.0;
    }
    const double am = std::pow(a, -s);
    double tail = a * am / (s - 1.0) + 0.5 * am;
    const double a2 = 1.0 / (a * a);
    double term = s * am / a / 12.0;                                // B_2/2! s a^{-s-1}
    tail += term;
    term *= (s + 1.0) * (s + 2.0) * a2 / 20.0;                      // -> B_4/4! ...
    tail -= term;
    term *= (s + 3.0) * (s + 4.0) * a2 / 42.0;
    tail += term;
    return head + tail;
}

double IncrementLaw::divisor() const {
    return standardize_ ? sigma_ : 1.0;
}

void IncrementLaw::finalize_lattice() {
    if (support_.size() != probs_.size() || support_.empty())
        throw ConfigError("increment law: support/probs size mismatch");
    double total = 0.0, mean = 0.0, var = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (probs_[i] < 0.0) throw ConfigError("increment law: negative probability");
        total += probs_[i];
        mean += support_[i] * probs_[i];
    }
    if (std::abs(total - 1.0) > 1e-12) throw ConfigError("increment law: probs must sum to 1");
    if (std::abs(mean) > 1e-12) throw ConfigError("increment law: mean must be zero");
    for (std::size_t i = 0; i < support_.size(); ++i) var += support_[i] * support_[i] * probs_[i];
    sigma_ = std::sqrt(var);
    if (sigma_ == 0.0) throw ConfigError("increment law: degenerate (zero variance)");

    const int g = gcd_of_support_gaps(support_);
    span_ = double(g);
    aperiodic_ = (g == 1);
    p_nonzero_ = 1.0;
    min_abs_step_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (support_[i] == 0)
            p_nonzero_ -= probs_[i];
        else
            min_abs_step_ = std::min(min_abs_step_, double(std::abs(support_[i])));
    }
    cdf_.resize(probs_.size());
    std::partial_sum(probs_.begin(), probs_.end(), cdf_.begin());
    cdf_.back() = 1.0;
    alpha_ = 2.0;
}

IncrementLaw IncrementLaw::rademacher(bool standardize) {
    IncrementLaw law;
    law.kind_ = LawKind::rademacher;
    law.standardize_ = standardize;
    law.support_ = {-1, 1};
    law.probs_ = {0.5, 0.5};
    law.finalize_lattice();
    return law;
}

IncrementLaw IncrementLaw::lazy_lattice(double p0, bool standardize) {
    if (!(p0 > 0.0 && p0 < 1.0)) throw ConfigError("lazy_lattice: p0 must lie in (0,1)");
    IncrementLaw law;
    law.kind_ = LawKind::lazy_lattice;
    law.standardize_ = standardize;
    law.support_ = {-1, 0, 1};
    law.probs_ = {(1.0 - p0) / 2.0, p0, (1.0 - p0) / 2.0};
    law.finalize_lattice();
    return law;
}

IncrementLaw IncrementLaw::finite_lattice(std::vector<int> support, std::vector<double> probs,
                                          bool standardize) {
    IncrementLaw law;
    law.kind_ = LawKind::finite_lattice;
    law.standardize_ = standardize;
    // keep support sorted so the cdf scan is stable
    std::vector<std::size_t> order(support.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return support[a] < support[b]; });
    for (auto i : order) {
        law.support_.push_back(support[i]);
        law.probs_.push_back(probs[i]);
    }
    law.finalize_lattice();
    return law;
}

IncrementLaw IncrementLaw::gaussian_iid(int d) {
    if (d < 1) throw ConfigError("gaussian_iid: dimension must be >= 1");
    IncrementLaw law;
    law.kind_ = LawKind::gaussian_iid;
    law.dim_ = d;
    law.sigma_ = 1.0;
    law.span_ = 0.0;
    law.p_nonzero_ = 1.0;
    law.aperiodic_ = true;
    law.min_abs_step_ = 0.0;
    law.alpha_ = 2.0;
    return law;
}

IncrementLaw IncrementLaw::pareto_lattice(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw ConfigError("pareto_lattice: tail index must lie in (1,2)");
    IncrementLaw law;
    law.kind_ = LawKind::pareto_lattice;
    law.alpha_ = alpha;
    law.sigma_ = std::numeric_limits<double>::quiet_NaN();
    // Tail constant of the target law exp(-|u|^alpha):
    //   C_alpha = (1-alpha) / (Gamma(2-alpha) cos(pi alpha/2)),
    // and P(|xi| > x) ~ (h/x)^alpha / (alpha zeta(1+alpha)), so the spacing
    //   h = (alpha zeta(1+alpha) C_alpha)^{1/alpha}
    // puts the walk in the normal domain of attraction at scale 1.
    const double c_alpha =
        (1.0 - alpha) / (std::tgamma(2.0 - alpha) * std::cos(kPi * alpha / 2.0));
    law.pareto_zeta_ = hurwitz_zeta(1.0 + alpha, 1.0);
    law.pareto_h_ = std::pow(alpha * law.pareto_zeta_ * c_alpha, 1.0 / alpha);
    law.span_ = law.pareto_h_;
    law.min_abs_step_ = law.pareto_h_;
    law.p_nonzero_ = 1.0;
    law.aperiodic_ = true;
    return law;
}

LawProperties IncrementLaw::properties() const {
    return {sigma_, span_, p_nonzero_, aperiodic_, alpha_};
}

double IncrementLaw::sample1(RngStream& stream) const {
    if (dim_ != 1) throw ConfigError("sample1 called on a multivariate law");
    double value;
    sample(stream, {&value, 1});
    return value;
}

void IncrementLaw::sample(RngStream& stream, std::span<double> out) const {
    if (int(out.size()) != dim_) throw ConfigError("sample: output size != law dimension");
    switch (kind_) {
        case LawKind::gaussian_iid:
            for (int i = 0; i < dim_; ++i) out[i] = stream.gaussian();
            return;
        case LawKind::rademacher:
        case LawKind::lazy_lattice:
        case LawKind::finite_lattice: {
            const double u = stream.uniform01();
            std::size_t i = 0;
            while (i + 1 < cdf_.size() && u >= cdf_[i]) ++i;
            out[0] = double(support_[i]) / divisor();
            return;
        }
        case LawKind::pareto_lattice: {
            const bool negative = stream.next_u64() & 1u;
            const double u = stream.uniform_pos();
            // invert P(K >= k) = zeta(1+alpha, k) / zeta(1+alpha)
            const double target = u * pareto_zeta_;
            std::uint64_t lo = 1, hi = 2;
            while (hurwitz_zeta(1.0 + alpha_, double(hi)) >= target && hi < (1ull << 50)) hi *= 2;
            while (lo + 1 < hi) {
                const std::uint64_t mid = lo + (hi - lo) / 2;
                if (hurwitz_zeta(1.0 + alpha_, double(mid)) >= target)
                    lo = mid;
                else
                    hi = mid;
            }
            out[0] = (negative ? -double(lo) : double(lo)) * pareto_h_;
            return;
        }
    }
    throw ConfigError("sample: unknown law kind");
}

double stable_variate(double alpha, RngStream& stream) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::domain_error("stable_variate: alpha must lie in (0,2]");
    const double u = kPi * (stream.uniform01() - 0.5); // uniform on (-pi/2, pi/2)
    if (alpha == 1.0) return std::tan(u);
    const double e = stream.exponential();
    const double s = std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha);
    return s * std::pow(std::cos((1.0 - alpha) * u) / e, (1.0 - alpha) / alpha);
}

} // namespace afmc
