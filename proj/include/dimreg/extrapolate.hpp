#pragma once

// Polynomial-in-eps extrapolation of values sampled on a decreasing eps
// grid.  The catalogue entries are analytic in eps once the poles have
// cancelled, so a low-degree fit through the smallest samples recovers the
// eps -> 0 limit with an error estimate from the next-lower degree.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dimreg {

struct EpsSample {
    double eps;
    double value;
};

class EpsSeries {
  public:
    explicit EpsSeries(std::vector<EpsSample> samples)
        : samples_(std::move(samples)) {
        if (samples_.size() < 3)
            throw std::invalid_argument("EpsSeries: need at least 3 samples");
        for (size_t i = 0; i < samples_.size(); ++i) {
            if (!(samples_[i].eps > 0.0))
                throw std::invalid_argument("EpsSeries: eps must be positive");
            if (i > 0) {
                const double ratio = samples_[i - 1].eps / samples_[i].eps;
                if (!(ratio > 1.0))
                    throw std::invalid_argument(
                        "EpsSeries: eps must be strictly decreasing");
                if (ratio < 1.5 || ratio > 4.0)
                    throw std::invalid_argument(
                        "EpsSeries: neighbour ratio outside [1.5, 4]");
            }
        }
    }

    const std::vector<EpsSample>& samples() const { return samples_; }

  private:
    std::vector<EpsSample> samples_;
};

struct Extrapolation {
    double limit;
    double err_estimate;
};

namespace detail {

// value of the interpolating polynomial through the last (degree+1) samples,
// evaluated at eps = 0
inline double lagrange_at_zero(const std::vector<EpsSample>& samples,
                               int degree) {
    const size_t n = samples.size();
    const size_t first = n - static_cast<size_t>(degree) - 1;
    double total = 0.0;
    for (size_t i = first; i < n; ++i) {
        double w = 1.0;
        for (size_t j = first; j < n; ++j) {
            if (j == i) continue;
            const double denom = samples[j].eps - samples[i].eps;
            if (denom == 0.0)
                throw std::invalid_argument("richardson: degenerate eps grid");
            w *= samples[j].eps / denom;
        }
        total += w * samples[i].value;
    }
    return total;
}

}  // namespace detail

inline constexpr int kDefaultRichardsonDegree = 3;
inline constexpr std::array<double, 5> kDefaultEpsGrid = {0.2, 0.1, 0.05,
                                                          0.025, 0.0125};

inline Extrapolation richardson(const EpsSeries& series,
                                int degree = kDefaultRichardsonDegree) {
    const auto& s = series.samples();
    if (degree < 1)
        throw std::invalid_argument("richardson: degree must be >= 1");
    if (static_cast<size_t>(degree) + 1 > s.size())
        throw std::invalid_argument("richardson: degree needs degree+1 samples");
    const double limit = detail::lagrange_at_zero(s, degree);
    const double lower = degree == 1 ? s.back().value
                                     : detail::lagrange_at_zero(s, degree - 1);
    return {limit, std::fabs(limit - lower)};
}

}  // namespace dimreg
