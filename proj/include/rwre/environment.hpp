#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rwre/errors.hpp"

namespace rwre {

/// Absolute site index on the integer line.
using site_t = std::int64_t;

/// Sampled right-step probabilities are kept inside [kProbClamp, 1-kProbClamp]
/// so that log p, log q and log(p/q) stay finite on every window.
inline constexpr double kProbClamp = 1e-6;

/// A finite window of right-step probabilities p_k, k in [lo, hi], attached
/// to absolute sites of the integer line. Immutable after construction and
/// cheap to copy; the shift acts as an O(1) re-indexed view over shared
/// storage. Reading a site outside the window throws, never defaults.
class EnvironmentWindow {
public:
    /// Takes the probabilities of sites lo, lo+1, ..., lo+probs.size()-1.
    /// Values must lie in (0,1); they are clamped into
    /// [kProbClamp, 1-kProbClamp].
    EnvironmentWindow(site_t lo, std::vector<double> probs);

    site_t lo() const noexcept { return lo_; }
    site_t hi() const noexcept { return lo_ + static_cast<site_t>(size_) - 1; }

    double p(site_t site) const {
        check_site(site);
        return (*data_)[static_cast<std::size_t>(site - data_lo_)];
    }
    double q(site_t site) const { return 1.0 - p(site); }

    /// log(p_k / q_k).
    double log_ratio(site_t site) const;

    bool covers(site_t span_lo, site_t span_hi) const noexcept {
        return span_lo >= lo_ && span_hi <= hi();
    }

    /// Throws WindowError naming the missing sites unless [span_lo, span_hi]
    /// lies inside the window.
    void require(site_t span_lo, site_t span_hi, const char* who) const;

    /// View shifted by k: site i of the result reads site i+k of this window.
    EnvironmentWindow shifted(site_t k) const noexcept;

private:
    EnvironmentWindow() = default;
    void check_site(site_t site) const;

    std::shared_ptr<const std::vector<double>> data_;
    site_t data_lo_ = 0; // site of data_[0]
    site_t lo_ = 0;
    std::size_t size_ = 0;
};

inline EnvironmentWindow shift_view(const EnvironmentWindow& env, site_t k) {
    return env.shifted(k);
}

inline double log_ratio(const EnvironmentWindow& env, site_t site) {
    return env.log_ratio(site);
}

/// Copy of the sites [lo, hi] of env as a standalone window.
EnvironmentWindow subwindow(const EnvironmentWindow& env, site_t lo, site_t hi);

/// Space reversal of a finite window: output site k holds q at site
/// lo+hi-k, i.e. for a window over [0, n] the image of {p_k} is
/// {q_{n-k}}. Applying it twice returns the input exactly.
EnvironmentWindow reverse_involution(const EnvironmentWindow& env);

/// A finite window of nonzero reals c_k (the coefficient sequence feeding
/// the continued-fraction recursions). Positive windows are the ordinary
/// case; signed windows arise from the generating-function transcription
/// and are flagged so operations that need positivity can enforce it.
class CWindow {
public:
    CWindow(site_t lo, std::vector<double> values);

    site_t lo() const noexcept { return lo_; }
    site_t hi() const noexcept { return lo_ + static_cast<site_t>(size_) - 1; }

    double c(site_t site) const {
        check_site(site);
        return (*data_)[static_cast<std::size_t>(site - data_lo_)];
    }

    bool all_positive() const noexcept { return all_positive_; }

    /// Throws ConfigError unless every value in the window is positive.
    void require_positive(const char* who) const;

    bool covers(site_t span_lo, site_t span_hi) const noexcept {
        return span_lo >= lo_ && span_hi <= hi();
    }
    void require(site_t span_lo, site_t span_hi, const char* who) const;

    CWindow shifted(site_t k) const noexcept;

private:
    CWindow() = default;
    void check_site(site_t site) const;

    std::shared_ptr<const std::vector<double>> data_;
    site_t data_lo_ = 0;
    site_t lo_ = 0;
    std::size_t size_ = 0;
    bool all_positive_ = false;
};

inline CWindow shift_view(const CWindow& cw, site_t k) { return cw.shifted(k); }

/// c-window sharing the sites of env with c_k := p_k (any probability
/// window is a positive c-sequence).
CWindow c_from_probabilities(const EnvironmentWindow& env);

} // namespace rwre
