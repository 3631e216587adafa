#include "gtmm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace gtmm {

// ---------------------------------------------------------------------------
// DegreeProfile
// ---------------------------------------------------------------------------

DegreeProfile DegreeProfile::abelian(double group_order) {
    if (group_order < 1) throw StructuralError("group order must be >= 1");
    DegreeProfile p;
    p.kind_ = Kind::Abelian;
    p.group_order_ = group_order;
    p.d_max_ = 1;
    return p;
}

DegreeProfile DegreeProfile::bounded(double d_max, double group_order) {
    if (d_max < 1 || group_order < 1)
        throw StructuralError("degree bound and group order must be >= 1");
    DegreeProfile p;
    p.kind_ = Kind::Bound;
    p.d_max_ = d_max;
    p.group_order_ = group_order;
    return p;
}

DegreeProfile DegreeProfile::exact(std::vector<std::int64_t> degrees,
                                   std::optional<double> group_order) {
    if (degrees.empty()) throw StructuralError("degree list must be nonempty");
    double sum_sq = 0;
    double dmax = 1;
    for (auto d : degrees) {
        if (d < 1) throw StructuralError("character degrees must be >= 1");
        sum_sq += static_cast<double>(d) * static_cast<double>(d);
        dmax = std::max(dmax, static_cast<double>(d));
    }
    if (group_order && std::abs(sum_sq - *group_order) > 1e-6 * std::max(1.0, *group_order))
        throw StructuralError("degree list rejected: sum of squares " +
                              std::to_string(sum_sq) + " != group order " +
                              std::to_string(*group_order));
    DegreeProfile p;
    p.kind_ = Kind::ExactList;
    p.degrees_ = std::move(degrees);
    p.d_max_ = dmax;
    p.group_order_ = group_order.value_or(sum_sq);
    return p;
}

namespace {

/// ln(sum exp(x_i)) without overflow.
double log_sum_exp(const std::vector<double>& xs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : xs) m = std::max(m, x);
    if (!std::isfinite(m)) return m;
    double s = 0;
    for (double x : xs) s += std::exp(x - m);
    return m + std::log(s);
}

} // namespace

double DegreeProfile::log_sum_pow(double omega) const {
    switch (kind_) {
    case Kind::Abelian:
        return std::log(group_order_);
    case Kind::Bound:
        // sum d^omega <= d^{omega-2} * sum d^2 = d^{omega-2} |G|
        return (omega - 2.0) * std::log(d_max_) + std::log(group_order_);
    case Kind::ExactList: {
        std::vector<double> terms;
        terms.reserve(degrees_.size());
        for (auto d : degrees_) terms.push_back(omega * std::log(static_cast<double>(d)));
        return log_sum_exp(terms);
    }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Constraint solver
// ---------------------------------------------------------------------------

bool OmegaBound::sound() const {
    if (capped || floored) return true;
    return residual_minus <= 1e-12 && residual_plus > 0;
}

namespace {

constexpr double grid_step = 1e-2;
constexpr double bisect_tol = 1e-9;
constexpr double cert_offset = 1e-6;

/// Finds the largest omega in [2,3] with f(omega) <= 0.  f is the log-space
/// constraint (left side minus right side of the defining inequality).
OmegaBound solve_constraint(const std::function<double(double)>& f, std::string form,
                            nlohmann::json inputs) {
    OmegaBound out;
    out.form = std::move(form);
    out.inputs = std::move(inputs);

    const int steps = static_cast<int>(std::lround(1.0 / grid_step));
    std::vector<double> vals(steps + 1);
    bool all_zero = true;
    for (int i = 0; i <= steps; ++i) {
        vals[i] = f(2.0 + grid_step * i);
        if (std::abs(vals[i]) > 1e-12) all_zero = false;
    }
    for (int i = 0; i < steps; ++i)
        if ((vals[i] <= 0) != (vals[i + 1] <= 0))
            out.crossings.push_back(2.0 + grid_step * (i + 0.5));

    if (vals[0] > 1e-12)
        throw InfeasibleError("constraint already violated at omega = 2 (residual " +
                              std::to_string(vals[0]) +
                              "); the input cannot come from a verified construction");

    if (all_zero) {
        out.value = 3.0;
        out.capped = true;
        out.note = "degenerate: constraint holds with equality for all omega";
        return out;
    }
    if (vals[steps] <= 0) {
        out.value = 3.0;
        out.capped = true;
        out.residual = vals[steps];
        out.note = "no nontrivial bound";
        return out;
    }

    // Largest feasible grid point followed by an infeasible one.
    int lo_idx = 0;
    for (int i = steps - 1; i >= 0; --i) {
        if (vals[i] <= 0) {
            lo_idx = i;
            break;
        }
    }
    double lo = 2.0 + grid_step * lo_idx;
    double hi = lo + grid_step;
    while (hi - lo > bisect_tol) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) <= 0)
            lo = mid;
        else
            hi = mid;
    }
    out.value = lo;
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    out.residual = f(out.value);
    out.residual_minus = f(std::max(2.0, out.value - cert_offset));
    out.residual_plus = f(std::min(3.0, out.value + cert_offset));
    if (out.crossings.size() > 1)
        out.note = "constraint is not single-crossing; largest feasible value returned";
    return out;
}

/// Closed-form value clamped to [2,3] with certificate residuals from f.
OmegaBound closed_form(double raw, const std::function<double(double)>& f, std::string form,
                       nlohmann::json inputs, const char* cap_note) {
    OmegaBound out;
    out.form = std::move(form);
    out.inputs = std::move(inputs);
    if (raw >= 3.0) {
        out.value = 3.0;
        out.capped = true;
        out.note = cap_note;
    } else if (raw <= 2.0) {
        out.value = 2.0;
        out.floored = raw < 2.0;
        if (out.floored) out.note = "value clamped to the omega >= 2 floor";
    } else {
        out.value = raw;
    }
    out.bracket_lo = out.bracket_hi = out.value;
    if (f) {
        out.residual = f(out.value);
        out.residual_minus = f(std::max(2.0, out.value - cert_offset));
        out.residual_plus = f(std::min(3.0, out.value + cert_offset));
        if (f(2.0) > 1e-12)
            throw InfeasibleError("constraint already violated at omega = 2");
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

OmegaBound solve_omega_tpp(double n, double m, double p, const DegreeProfile& profile) {
    if (n < 1 || m < 1 || p < 1) throw StructuralError("realized shape must be >= 1");
    const double log_nmp = std::log(n) + std::log(m) + std::log(p);
    auto f = [&, log_nmp](double omega) {
        return (omega / 3.0) * log_nmp - profile.log_sum_pow(omega);
    };
    nlohmann::json inputs{{"n", n}, {"m", m}, {"p", p}};
    if (profile.kind() == DegreeProfile::Kind::ExactList) {
        inputs["degrees"] = profile.degrees();
        return solve_constraint(f, "tpp", std::move(inputs));
    }
    inputs["d_max"] = profile.d_max();
    inputs["group_order"] = profile.group_order();
    // (nmp)^{omega/3} <= d^{omega-2} |G| is log-linear in omega.
    const double a = log_nmp / 3.0 - std::log(profile.d_max());
    const double b = std::log(profile.group_order()) - 2.0 * std::log(profile.d_max());
    double raw = a <= 0 ? 3.0 : b / a;
    return closed_form(raw, f, "tpp", std::move(inputs), "no nontrivial bound");
}

OmegaBound solve_omega_asi(const std::vector<std::array<double, 3>>& shapes,
                           const DegreeProfile& profile) {
    if (shapes.empty()) throw StructuralError("need at least one realized shape");
    std::vector<double> log_volumes;
    for (const auto& s : shapes) {
        if (s[0] < 1 || s[1] < 1 || s[2] < 1) throw StructuralError("shape must be >= 1");
        log_volumes.push_back(std::log(s[0]) + std::log(s[1]) + std::log(s[2]));
    }
    auto f = [&, log_volumes](double omega) {
        std::vector<double> terms;
        terms.reserve(log_volumes.size());
        for (double lv : log_volumes) terms.push_back((omega / 3.0) * lv);
        return log_sum_exp(terms) - profile.log_sum_pow(omega);
    };
    nlohmann::json inputs{{"shapes", shapes}, {"group_order", profile.group_order()}};
    return solve_constraint(f, "asi", std::move(inputs));
}

OmegaBound solve_omega_sdpp(const std::vector<double>& pair_products,
                            const DegreeProfile& profile) {
    if (pair_products.empty()) throw StructuralError("need at least one pair");
    std::vector<double> log_products;
    for (double p : pair_products) {
        if (p < 1) throw StructuralError("pair size product must be >= 1");
        log_products.push_back(std::log(p));
    }
    auto f = [&, log_products](double omega) {
        std::vector<double> terms;
        terms.reserve(log_products.size());
        for (double lp : log_products) terms.push_back((omega / 2.0) * lp);
        return log_sum_exp(terms) - 1.5 * profile.log_sum_pow(omega);
    };
    nlohmann::json inputs{{"pair_products", pair_products},
                          {"group_order", profile.group_order()}};
    return solve_constraint(f, "sdpp", std::move(inputs));
}

OmegaBound solve_omega_sdpp_asymptotic(int m) {
    if (m < 2) throw StructuralError("sdpp asymptotic bound needs m >= 2");
    nlohmann::json inputs{{"m", m}};
    if (m == 2) {
        // alpha -> 0: the family carries no volume and yields nothing.
        return closed_form(3.0, nullptr, "sdpp-asymptotic", std::move(inputs),
                           "alpha = 0: no nontrivial bound");
    }
    const double alpha = std::log2(static_cast<double>(m - 1));
    const double beta = std::log2(static_cast<double>(m));
    return closed_form((3.0 * beta - 2.0) / alpha, nullptr, "sdpp-asymptotic",
                       std::move(inputs), "no nontrivial bound");
}

OmegaBound omega_from_strong_usp(std::int64_t size, int k, int m) {
    if (size < 1 || k < 1) throw StructuralError("puzzle size and width must be >= 1");
    if (m < 3) throw StructuralError("finite strong-USP bound needs m >= 3");
    const double log_m1 = std::log(static_cast<double>(m - 1));
    const double log_fact = std::lgamma(static_cast<double>(size) + 1.0);
    double raw = 3.0 * std::log(static_cast<double>(m)) / log_m1 -
                 3.0 * log_fact / (static_cast<double>(size) * k * log_m1);
    nlohmann::json inputs{{"size", size}, {"k", k}, {"m", m}};
    return closed_form(raw, nullptr, "strong-usp", std::move(inputs), "no nontrivial bound");
}

OmegaBound omega_from_capacity(double c, double m) {
    if (c <= 1.0) throw StructuralError("capacity must exceed 1");
    if (m < 3) throw StructuralError("capacity bound needs m >= 3");
    double raw = 3.0 * (std::log(m) - std::log(c)) / std::log(m - 1.0);
    nlohmann::json inputs{{"capacity", c}, {"m", m}};
    return closed_form(raw, nullptr, "capacity", std::move(inputs), "no nontrivial bound");
}

OmegaBound omega_from_alpha_beta(double alpha, double beta) {
    if (alpha <= 0) throw StructuralError("alpha must be positive");
    if (alpha > beta + 1e-9 || alpha + 2.0 > 2.0 * beta + 1e-9)
        throw InfeasibleError("alpha/beta violate the feasibility inequalities");
    nlohmann::json inputs{{"alpha", alpha}, {"beta", beta}};
    return closed_form((3.0 * beta - 2.0) / alpha, nullptr, "alpha-beta", std::move(inputs),
                       "no nontrivial bound");
}

OmegaBound chart_bound_scan(int l_lo, int l_hi, double capacity) {
    if (l_lo < 3 || l_hi < l_lo) throw StructuralError("chart scan needs 3 <= lo <= hi");
    if (capacity <= 1.0) throw StructuralError("capacity must exceed 1");
    double best = 3.0;
    int best_l = l_lo;
    nlohmann::json scan = nlohmann::json::array();
    for (int l = l_lo; l <= l_hi; ++l) {
        double value;
        if (l == 3) {
            value = 3.0; // ln(l-2) = 0: the symbol sets carry no volume
        } else {
            value = 3.0 * (std::log(static_cast<double>(l)) - std::log(capacity)) /
                    std::log(static_cast<double>(l - 2));
            value = std::clamp(value, 2.0, 3.0);
        }
        scan.push_back(nlohmann::json{{"l", l}, {"value", value}});
        if (value < best) {
            best = value;
            best_l = l;
        }
    }
    nlohmann::json inputs{{"l_lo", l_lo}, {"l_hi", l_hi}, {"capacity", capacity},
                          {"best_l", best_l}, {"scan", scan}};
    auto out = closed_form(best, nullptr, "chart-scan", std::move(inputs),
                           "no nontrivial bound in the scanned range");
    out.note = out.note.empty() ? ("minimum at l = " + std::to_string(best_l)) : out.note;
    return out;
}

double wreath_degree_power(int n, double s, double omega) {
    if (n < 1 || s < 1) throw StructuralError("wreath degree power needs n, s >= 1");
    return std::exp((omega - 1.0) * std::lgamma(static_cast<double>(n) + 1.0) +
                    static_cast<double>(n) * std::log(s));
}

CapacityConstants capacity_constants() {
    const double v = 3.0 / std::pow(2.0, 2.0 / 3.0);
    return CapacityConstants{v, v, std::pow(2.0, 2.0 / 3.0)};
}

} // namespace gtmm
