#pragma once

#include <vector>

#include "rwre/environment.hpp"

namespace rwre {

/// Which one-step barrier the killed generating function targets.
///   Up:   f[n]  = E(u^{tau_1};    tau_1    < tau_{-n-1})
///   Down: f'[n] = E(u^{tau_{-1}}; tau_{-1} < tau_{n+1})
enum class HitSide { Up, Down };

/// Denominators below this floor abort with DegeneracyError.
inline constexpr double kDenominatorFloor = 1e-14;

/// Killed hitting-time generating functions f[n](S^k e), f'[n](S^k e) for
/// 0 <= n <= depth and k in [site_lo, site_hi], at fixed discount u.
class GFTable {
public:
    GFTable(double u, int depth, site_t site_lo, site_t site_hi);

    double u() const noexcept { return u_; }
    int depth() const noexcept { return depth_; }
    site_t site_lo() const noexcept { return site_lo_; }
    site_t site_hi() const noexcept { return site_hi_; }

    /// f[n](S^site e)
    double f(int n, site_t site) const { return fs_[index(n, site)]; }
    /// f'[n](S^site e)
    double fprime(int n, site_t site) const { return fps_[index(n, site)]; }

    double& f_ref(int n, site_t site) { return fs_[index(n, site)]; }
    double& fprime_ref(int n, site_t site) { return fps_[index(n, site)]; }

private:
    std::size_t index(int n, site_t site) const;

    double u_;
    int depth_;
    site_t site_lo_, site_hi_;
    std::size_t width_;
    std::vector<double> fs_, fps_;
};

/// Fills the table by the one-step recursions
///   f[n]  = a / (1 - b * f[n-1] o S^{-1}),   f[0]  = a = p u,
///   f'[n] = b / (1 - a * f'[n-1] o S),       f'[0] = b = q u,
/// for u in (0,1]. Needs env to cover [site_lo - depth, site_hi + depth].
GFTable compute_gf_table(const EnvironmentWindow& env, double u, int depth,
                         site_t site_lo, site_t site_hi);

/// Single value f[n](S^base e) (side Up) or f'[n](S^base e) (side Down),
/// computed by one O(n) chain. Needs env sites [base-n, base] (Up) or
/// [base, base+n] (Down).
double gf_value(const EnvironmentWindow& env, double u, int n, site_t base,
                HitSide side);

struct LimitResult {
    double value;
    int depth;             // first depth whose increment fell below tol
    double last_increment; // f[depth] - f[depth-1]
    double tail_estimate;  // geometric extrapolation of the remaining tail
};

/// Truncated limit f(e) = lim_n f[n](S^site e): iterates until the (monotone)
/// increment drops below tol, or throws ConvergenceError when the window (or
/// max_depth, if nonnegative) is exhausted first.
LimitResult limit_gf(const EnvironmentWindow& env, double u, site_t site,
                     double tol, HitSide side = HitSide::Up,
                     int max_depth = -1);

/// Conditional generating function g = f(u) / f(1), where f(1) is the
/// hitting probability computed by the same truncation rule. Throws
/// DegeneracyError when the conditioning probability is below the floor.
double conditional_gf(const EnvironmentWindow& env, double u, site_t site,
                      double tol, HitSide side = HitSide::Up);

/// E_start(u^{tau_upper}; tau_upper < tau_lower), lower < start < upper.
/// Tridiagonal elimination run from the upper barrier downward; transition
/// probabilities are read on (lower, upper) exclusive.
double crossing_gf_up(const EnvironmentWindow& env, site_t start, site_t lower,
                      site_t upper, double u);

/// E_start(u^{tau_lower}; tau_lower < tau_upper); elimination from the
/// lower barrier upward.
double crossing_gf_down(const EnvironmentWindow& env, site_t start,
                        site_t lower, site_t upper, double u);

/// The four two-barrier quantities of the reversal argument on the window
/// p_0..p_n (barriers -1 and n+1):
///   up_from_top   = E^n(u^{tau_{n+1}}; tau_{n+1} < tau_{-1}) = f[n] o S^n
///   down_from_base= E^0(u^{tau_{-1}}; tau_{-1} < tau_n)      = f'[n-1]
///   up_to_top     = E^0(u^{tau_n};     tau_n     < tau_{-1})
///   up_past_top   = E^0(u^{tau_{n+1}}; tau_{n+1} < tau_{-1})
/// The first two come from the generating-function chains, the last two
/// from the independent two-barrier elimination, so the Markov identities
/// relating them are cross-algorithm checks.
struct BarrierQuadruple {
    double up_from_top;
    double down_from_base;
    double up_to_top;
    double up_past_top;
    int depth;
    double u;
};

BarrierQuadruple barrier_quadruple(const EnvironmentWindow& env, double u,
                                   int n);

} // namespace rwre
