#include "rwre/gf.hpp"

#include <cmath>
#include <string>

namespace rwre {

namespace {

void check_u(double u, const char* who) {
    if (!(u > 0.0 && u <= 1.0))
        throw ConfigError(std::string(who) + ": u must be in (0,1], got " +
                          std::to_string(u));
}

double safe_div(double num, double den, const char* who) {
    if (std::abs(den) < kDenominatorFloor)
        throw DegeneracyError(std::string(who) + ": denominator " +
                              std::to_string(den) + " below floor");
    return num / den;
}

// Entry validation: values stay in (0,1] and grow with n. Both hold
// exactly in real arithmetic; the slack absorbs last-bit rounding.
void check_entry(double value, double prev, const char* who) {
    if (!(value > 0.0 && value <= 1.0 + 1e-12) ||
        value < prev * (1.0 - 1e-13))
        throw DegeneracyError(std::string(who) + ": entry " +
                              std::to_string(value) +
                              " violates range/monotonicity");
}

} // namespace

GFTable::GFTable(double u, int depth, site_t site_lo, site_t site_hi)
    : u_(u), depth_(depth), site_lo_(site_lo), site_hi_(site_hi),
      width_(static_cast<std::size_t>(site_hi - site_lo + 1)),
      fs_(width_ * static_cast<std::size_t>(depth + 1)),
      fps_(width_ * static_cast<std::size_t>(depth + 1)) {}

std::size_t GFTable::index(int n, site_t site) const {
    if (n < 0 || n > depth_ || site < site_lo_ || site > site_hi_)
        throw WindowError("GFTable access (n=" + std::to_string(n) +
                          ", site=" + std::to_string(site) +
                          ") outside stored block");
    return static_cast<std::size_t>(n) * width_ +
           static_cast<std::size_t>(site - site_lo_);
}

GFTable compute_gf_table(const EnvironmentWindow& env, double u, int depth,
                         site_t site_lo, site_t site_hi) {
    check_u(u, "compute_gf_table");
    if (depth < 0) throw ConfigError("compute_gf_table: negative depth");
    if (site_lo > site_hi)
        throw ConfigError("compute_gf_table: site_lo > site_hi");
    env.require(site_lo - depth, site_hi + depth, "compute_gf_table");

    GFTable table(u, depth, site_lo, site_hi);

    // f part works over [site_lo - depth, site_hi]: depth n is valid on
    // [site_lo - depth + n, site_hi], which always contains [site_lo, site_hi].
    {
        const site_t wlo = site_lo - depth;
        std::vector<double> work(static_cast<std::size_t>(site_hi - wlo + 1));
        for (site_t j = wlo; j <= site_hi; ++j)
            work[static_cast<std::size_t>(j - wlo)] = u * env.p(j);
        for (site_t j = site_lo; j <= site_hi; ++j)
            table.f_ref(0, j) = work[static_cast<std::size_t>(j - wlo)];
        for (int n = 1; n <= depth; ++n) {
            for (site_t j = site_hi; j >= wlo + n; --j) {
                const std::size_t jj = static_cast<std::size_t>(j - wlo);
                const double prev = work[jj];
                const double value =
                    safe_div(u * env.p(j), 1.0 - u * env.q(j) * work[jj - 1],
                             "compute_gf_table");
                check_entry(value, prev, "compute_gf_table");
                work[jj] = value;
            }
            for (site_t j = site_lo; j <= site_hi; ++j)
                table.f_ref(n, j) = work[static_cast<std::size_t>(j - wlo)];
        }
    }

    // Mirror for f' over [site_lo, site_hi + depth], sweeping upward.
    {
        const site_t whi = site_hi + depth;
        std::vector<double> work(static_cast<std::size_t>(whi - site_lo + 1));
        for (site_t j = site_lo; j <= whi; ++j)
            work[static_cast<std::size_t>(j - site_lo)] = u * env.q(j);
        for (site_t j = site_lo; j <= site_hi; ++j)
            table.fprime_ref(0, j) = work[static_cast<std::size_t>(j - site_lo)];
        for (int n = 1; n <= depth; ++n) {
            for (site_t j = site_lo; j <= whi - n; ++j) {
                const std::size_t jj = static_cast<std::size_t>(j - site_lo);
                const double prev = work[jj];
                const double value =
                    safe_div(u * env.q(j), 1.0 - u * env.p(j) * work[jj + 1],
                             "compute_gf_table");
                check_entry(value, prev, "compute_gf_table");
                work[jj] = value;
            }
            for (site_t j = site_lo; j <= site_hi; ++j)
                table.fprime_ref(n, j) =
                    work[static_cast<std::size_t>(j - site_lo)];
        }
    }

    return table;
}

double gf_value(const EnvironmentWindow& env, double u, int n, site_t base,
                HitSide side) {
    check_u(u, "gf_value");
    if (n < 0) throw ConfigError("gf_value: negative depth");
    if (side == HitSide::Up) {
        env.require(base - n, base, "gf_value");
        double v = u * env.p(base - n);
        for (int k = 1; k <= n; ++k) {
            const site_t s = base - n + k;
            v = safe_div(u * env.p(s), 1.0 - u * env.q(s) * v, "gf_value");
        }
        return v;
    }
    env.require(base, base + n, "gf_value");
    double v = u * env.q(base + n);
    for (int k = 1; k <= n; ++k) {
        const site_t s = base + n - k;
        v = safe_div(u * env.q(s), 1.0 - u * env.p(s) * v, "gf_value");
    }
    return v;
}

LimitResult limit_gf(const EnvironmentWindow& env, double u, site_t site,
                     double tol, HitSide side, int max_depth) {
    check_u(u, "limit_gf");
    if (!(tol > 0.0)) throw ConfigError("limit_gf: tol must be positive");
    env.require(site, site, "limit_gf");

    // Work in "distance from site" coordinates so both sides share one loop:
    // dist d maps to site-d (Up) or site+d (Down).
    const site_t reach =
        side == HitSide::Up ? site - env.lo() : env.hi() - site;
    site_t cap = reach;
    if (max_depth >= 0 && static_cast<site_t>(max_depth) < cap)
        cap = max_depth;

    auto a = [&](site_t d) {
        const site_t s = side == HitSide::Up ? site - d : site + d;
        return u * (side == HitSide::Up ? env.p(s) : env.q(s));
    };
    auto b = [&](site_t d) {
        const site_t s = side == HitSide::Up ? site - d : site + d;
        return u * (side == HitSide::Up ? env.q(s) : env.p(s));
    };

    std::vector<double> vals(static_cast<std::size_t>(cap) + 1);
    for (site_t d = 0; d <= cap; ++d)
        vals[static_cast<std::size_t>(d)] = a(d);

    double prev_inc = 0.0;
    for (site_t n = 1; n <= cap; ++n) {
        const double before = vals[0];
        // depth n valid for d <= cap - n; d ascending keeps the depth n-1
        // value at d+1 intact until used.
        for (site_t d = 0; d <= cap - n; ++d) {
            const std::size_t dd = static_cast<std::size_t>(d);
            vals[dd] =
                safe_div(a(d), 1.0 - b(d) * vals[dd + 1], "limit_gf");
        }
        const double inc = vals[0] - before;
        if (inc < tol) {
            // Monotone increments contract roughly geometrically; report the
            // extrapolated tail alongside the certified increment.
            double tail = inc;
            if (prev_inc > 0.0 && inc > 0.0 && inc < prev_inc) {
                const double rate = inc / prev_inc;
                tail = inc * rate / (1.0 - rate);
            }
            return LimitResult{vals[0], static_cast<int>(n), inc, tail};
        }
        prev_inc = inc;
    }
    throw ConvergenceError(
        "limit_gf: window exhausted at depth " + std::to_string(cap) +
            " before increment fell below " + std::to_string(tol) +
            " (last increment " + std::to_string(prev_inc) + ")",
        prev_inc);
}

double conditional_gf(const EnvironmentWindow& env, double u, site_t site,
                      double tol, HitSide side) {
    const double num = limit_gf(env, u, site, tol, side).value;
    const double den = limit_gf(env, 1.0, site, tol, side).value;
    if (den < kDenominatorFloor)
        throw DegeneracyError("conditional_gf: hitting probability " +
                              std::to_string(den) + " too small to condition on");
    return num / den;
}

double crossing_gf_up(const EnvironmentWindow& env, site_t start, site_t lower,
                      site_t upper, double u) {
    check_u(u, "crossing_gf_up");
    if (!(lower < start && start < upper))
        throw ConfigError("crossing_gf_up: need lower < start < upper");
    env.require(lower + 1, upper - 1, "crossing_gf_up");

    // w(x) = E_x(u^{tau_upper}; tau_upper < tau_lower);
    // w(x) = gamma_x w(x-1) + phi_x, eliminated from the upper barrier.
    const std::size_t count = static_cast<std::size_t>(upper - lower - 1);
    std::vector<double> gamma(count), phi(count);
    double gamma_above = 0.0, phi_above = 1.0;
    for (site_t x = upper - 1; x > lower; --x) {
        const double den = safe_div(
            1.0, 1.0 - u * env.p(x) * gamma_above, "crossing_gf_up");
        const std::size_t i = static_cast<std::size_t>(x - lower - 1);
        gamma[i] = u * env.q(x) * den;
        phi[i] = u * env.p(x) * phi_above * den;
        gamma_above = gamma[i];
        phi_above = phi[i];
    }
    double w = 0.0; // w(lower)
    for (site_t x = lower + 1; x <= start; ++x) {
        const std::size_t i = static_cast<std::size_t>(x - lower - 1);
        w = gamma[i] * w + phi[i];
    }
    return w;
}

double crossing_gf_down(const EnvironmentWindow& env, site_t start,
                        site_t lower, site_t upper, double u) {
    check_u(u, "crossing_gf_down");
    if (!(lower < start && start < upper))
        throw ConfigError("crossing_gf_down: need lower < start < upper");
    env.require(lower + 1, upper - 1, "crossing_gf_down");

    const std::size_t count = static_cast<std::size_t>(upper - lower - 1);
    std::vector<double> gamma(count), phi(count);
    double gamma_below = 0.0, phi_below = 1.0;
    for (site_t x = lower + 1; x < upper; ++x) {
        const double den = safe_div(
            1.0, 1.0 - u * env.q(x) * gamma_below, "crossing_gf_down");
        const std::size_t i = static_cast<std::size_t>(x - lower - 1);
        gamma[i] = u * env.p(x) * den;
        phi[i] = u * env.q(x) * phi_below * den;
        gamma_below = gamma[i];
        phi_below = phi[i];
    }
    double w = 0.0; // w(upper)
    for (site_t x = upper - 1; x >= start; --x) {
        const std::size_t i = static_cast<std::size_t>(x - lower - 1);
        w = gamma[i] * w + phi[i];
    }
    return w;
}

BarrierQuadruple barrier_quadruple(const EnvironmentWindow& env, double u,
                                   int n) {
    check_u(u, "barrier_quadruple");
    if (n < 1) throw ConfigError("barrier_quadruple: n must be >= 1");
    env.require(0, n, "barrier_quadruple");
    BarrierQuadruple out;
    out.depth = n;
    out.u = u;
    out.up_from_top = gf_value(env, u, n, n, HitSide::Up);
    out.down_from_base = gf_value(env, u, n - 1, 0, HitSide::Down);
    out.up_to_top = crossing_gf_up(env, 0, -1, n, u);
    out.up_past_top = crossing_gf_up(env, 0, -1, n + 1, u);
    return out;
}

} // namespace rwre
