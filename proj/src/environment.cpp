#include "rwre/environment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rwre {

namespace {

std::string span_text(site_t lo, site_t hi) {
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

} // namespace

EnvironmentWindow::EnvironmentWindow(site_t lo, std::vector<double> probs) {
    if (probs.empty())
        throw ConfigError("EnvironmentWindow: empty probability window");
    for (double& v : probs) {
        if (!std::isfinite(v) || v <= 0.0 || v >= 1.0)
            throw ConfigError("EnvironmentWindow: probability " +
                              std::to_string(v) + " outside (0,1)");
        v = std::clamp(v, kProbClamp, 1.0 - kProbClamp);
    }
    size_ = probs.size();
    data_ = std::make_shared<const std::vector<double>>(std::move(probs));
    data_lo_ = lo;
    lo_ = lo;
}

void EnvironmentWindow::check_site(site_t site) const {
    if (site < lo_ || site > hi())
        throw WindowError("environment read at site " + std::to_string(site) +
                          " outside window " + span_text(lo_, hi()));
}

double EnvironmentWindow::log_ratio(site_t site) const {
    const double pk = p(site);
    return std::log(pk / (1.0 - pk));
}

void EnvironmentWindow::require(site_t span_lo, site_t span_hi,
                                const char* who) const {
    if (!covers(span_lo, span_hi))
        throw WindowError(std::string(who) + ": insufficient window, needs sites " +
                          span_text(span_lo, span_hi) + " but has " +
                          span_text(lo_, hi()));
}

EnvironmentWindow EnvironmentWindow::shifted(site_t k) const noexcept {
    EnvironmentWindow out;
    out.data_ = data_;
    out.size_ = size_;
    out.data_lo_ = data_lo_ - k;
    out.lo_ = lo_ - k;
    return out;
}

EnvironmentWindow subwindow(const EnvironmentWindow& env, site_t lo, site_t hi) {
    env.require(lo, hi, "subwindow");
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (site_t k = lo; k <= hi; ++k) probs.push_back(env.p(k));
    return EnvironmentWindow(lo, std::move(probs));
}

EnvironmentWindow reverse_involution(const EnvironmentWindow& env) {
    const site_t lo = env.lo(), hi = env.hi();
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (site_t k = lo; k <= hi; ++k) probs.push_back(env.q(lo + hi - k));
    return EnvironmentWindow(lo, std::move(probs));
}

CWindow::CWindow(site_t lo, std::vector<double> values) {
    if (values.empty()) throw ConfigError("CWindow: empty window");
    bool positive = true;
    for (double v : values) {
        if (!std::isfinite(v) || v == 0.0)
            throw ConfigError("CWindow: coefficient " + std::to_string(v) +
                              " must be nonzero and finite");
        positive = positive && v > 0.0;
    }
    size_ = values.size();
    data_ = std::make_shared<const std::vector<double>>(std::move(values));
    data_lo_ = lo;
    lo_ = lo;
    all_positive_ = positive;
}

void CWindow::check_site(site_t site) const {
    if (site < lo_ || site > hi())
        throw WindowError("coefficient read at site " + std::to_string(site) +
                          " outside window " + span_text(lo_, hi()));
}

void CWindow::require_positive(const char* who) const {
    if (!all_positive_)
        throw ConfigError(std::string(who) + ": requires a positive c-window");
}

void CWindow::require(site_t span_lo, site_t span_hi, const char* who) const {
    if (!covers(span_lo, span_hi))
        throw WindowError(std::string(who) + ": insufficient window, needs sites " +
                          span_text(span_lo, span_hi) + " but has " +
                          span_text(lo_, hi()));
}

CWindow CWindow::shifted(site_t k) const noexcept {
    CWindow out;
    out.data_ = data_;
    out.size_ = size_;
    out.data_lo_ = data_lo_ - k;
    out.lo_ = lo_ - k;
    out.all_positive_ = all_positive_;
    return out;
}

CWindow c_from_probabilities(const EnvironmentWindow& env) {
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(env.hi() - env.lo() + 1));
    for (site_t k = env.lo(); k <= env.hi(); ++k) vals.push_back(env.p(k));
    return CWindow(env.lo(), std::move(vals));
}

} // namespace rwre
