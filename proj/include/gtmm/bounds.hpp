#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtmm/errors.hpp"

namespace gtmm {

/// Character degree information for the bound solvers, in one of three
/// forms: an exact degree list, the (largest degree, group order) bound, or
/// the abelian marker (all degrees 1, sum d^omega = |G|).
class DegreeProfile {
public:
    enum class Kind { ExactList, Bound, Abelian };

    static DegreeProfile abelian(double group_order);
    static DegreeProfile bounded(double d_max, double group_order);
    /// Validates sum d_i^2 = |G| when the order is supplied.
    static DegreeProfile exact(std::vector<std::int64_t> degrees,
                               std::optional<double> group_order = {});

    Kind kind() const { return kind_; }
    double d_max() const { return d_max_; }
    double group_order() const { return group_order_; }
    const std::vector<std::int64_t>& degrees() const { return degrees_; }

    /// ln of sum d_i^omega, computed in log space.
    double log_sum_pow(double omega) const;

private:
    Kind kind_ = Kind::Abelian;
    std::vector<std::int64_t> degrees_;
    double d_max_ = 1;
    double group_order_ = 1;
};

/// A solved exponent bound with a machine-checkable certificate.  The
/// defining inequality is feasible at value - 1e-6 and infeasible at
/// value + 1e-6 (residuals recorded), unless capped at 3 (no nontrivial
/// bound) or floored at 2.
struct OmegaBound {
    double value = 3.0;
    std::string form;
    nlohmann::json inputs;
    double residual = 0.0;       // constraint value at `value` (<= 0 feasible)
    double residual_minus = 0.0; // constraint at value - 1e-6
    double residual_plus = 0.0;  // constraint at value + 1e-6
    double bracket_lo = 2.0;
    double bracket_hi = 3.0;
    bool capped = false;
    bool floored = false;
    bool conditional = false;    // premise construction not re-verified
    std::vector<double> crossings;
    std::string note;

    bool sound() const;
};

/// Largest omega in [2,3] with (n m p)^{omega/3} <= sum d_i^omega.
/// Degree-list profiles are solved by 1e-2 grid scan plus bisection to 1e-9;
/// the bound/abelian forms admit a log-linear closed form.
OmegaBound solve_omega_tpp(double n, double m, double p, const DegreeProfile& profile);

/// Asymptotic sum inequality: sum_i (a_i b_i c_i)^{omega/3} <= sum d^omega.
OmegaBound solve_omega_asi(const std::vector<std::array<double, 3>>& shapes,
                           const DegreeProfile& profile);

/// sum_i (|A_i||B_i|)^{omega/2} <= (sum d^omega)^{3/2}.
OmegaBound solve_omega_sdpp(const std::vector<double>& pair_products,
                            const DegreeProfile& profile);

/// Limit bound of the binomial coordinate-subset family:
/// omega <= (3 log2 m - 2) / log2(m-1).
OmegaBound solve_omega_sdpp_asymptotic(int m);

/// Finite strong-USP bound for a puzzle of the given size and width:
/// omega <= 3 log m / log(m-1) - 3 log(size!) / (size k log(m-1)), m >= 3.
OmegaBound omega_from_strong_usp(std::int64_t size, int k, int m);

/// Capacity bound: omega <= 3 (log m - log c) / log(m-1).
OmegaBound omega_from_capacity(double c, double m);

/// Abelian SDPP parameter bound: omega <= (3 beta - 2) / alpha.
OmegaBound omega_from_alpha_beta(double alpha, double beta);

/// min over l in [lo, hi] of 3 (ln l - ln c) / ln(l-2); l = 3 contributes no
/// nontrivial bound (the denominator vanishes).
OmegaBound chart_bound_scan(int l_lo, int l_hi, double capacity);

/// (n!)^{omega-1} * s^n evaluated in log space (degree-sum bound for the
/// wreath product Sym(n) ⋉ H^n given sum d^omega = s for H).
double wreath_degree_power(int n, double s, double omega);

struct CapacityConstants {
    double usp_upper;    // 3 / 2^{2/3}
    double usp;          // attained: 3 / 2^{2/3}
    double strong_lower; // 2^{2/3}
};
CapacityConstants capacity_constants();

} // namespace gtmm
