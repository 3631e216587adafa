#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "gtmm/properties.hpp"
#include "gtmm/puzzles.hpp"

namespace gtmm {

/// The triangular array {(a,b,c) in Z^3 : a+b+c = n-1, a,b,c >= 0}, with
/// points numbered in lexicographic order.  |points| = n(n+1)/2.
struct TriangleSet {
    int n = 0;
    std::vector<std::array<int, 3>> points;

    static TriangleSet make(int n);
    std::size_t size() const { return points.size(); }
};

// ---------------------------------------------------------------------------
// Triple-product constructions
// ---------------------------------------------------------------------------

/// TPP subsets S_i of Sym(2) ⋉ (Cyc_n^3)^2, where the swap acts on the two
/// copies of Cyc_n^3.  S_i = { (a,b)z^j : a in H_i \ {0}, b in H_{i+1} } with
/// H_i the coordinate subgroups (indices mod 3), so |S_i| = 2n(n-1).
SubsetTriple build_swap_wreath_triple(int n);

/// The three coordinate-preserving subgroups of Sym(triangle(n)), as subsets.
/// |H_i| is the product of the factorials of the coordinate-i fiber sizes.
SubsetTriple build_triangle_subgroups(int n, std::uint64_t subgroup_cap = 1'000'000);

/// Strong USP of size 2^k and width 2k: rows over {1,3}^k x {2,3}^k with
/// u_i = 1 iff u_{i+k} = 2.
Puzzle build_easy_strong_usp(int k);

/// Strong USP of size 2^{k-1}(2^k+1) and width 3k from the triangular array
/// with n = 2^k: blocks of k columns over {1,2}, {2,3}, {1,3}, block patterns
/// numbered lexicographically.
Puzzle build_triangle_strong_usp(int k);

/// Converts a strong USP into TPP subsets of Sym(U) ⋉ (Cyc_m^k)^U, where the
/// base part at (u, j) must be nonzero exactly when u_j = i.
/// |S_i| = |U|! * (m-1)^{count of symbol i in U}.  Throws ResourceLimitError
/// when the sets exceed `materialize_cap` elements.
SubsetTriple strong_usp_to_tpp(const Puzzle& u, int m,
                               std::uint64_t materialize_cap = 2'000'000);

/// Exact set sizes for strong_usp_to_tpp without materializing.
std::array<mpz_class, 3> strong_usp_to_tpp_sizes(const Puzzle& u, int m);

// ---------------------------------------------------------------------------
// Simultaneous double product constructions
// ---------------------------------------------------------------------------

/// n pairs in Cyc_n^k x Cyc_n: A_i = {(x, i)}, B_i = {(0, i)}.
SubsetPairFamily build_sdpp_trivial(int n, int k);

/// C(2l, l) pairs in Cyc_m^{2l}: A_S supported exactly on the l-subset S,
/// B_S = A_{complement of S}; |A_S||B_S| = (m-1)^{2l}.
SubsetPairFamily build_sdpp_binomial(int m, int l);

/// Converts n SDPP pairs into TPP subsets of Sym(triangle(n)) ⋉ (H^3)^Δ via
/// the per-point triples (A_{v1} x {1} x B_{v3}, B_{v1} x A_{v2} x {1},
/// {1} x B_{v2} x A_{v3}).  Abelian H only.
SubsetTriple sdpp_to_tpp(const SubsetPairFamily& f,
                         std::uint64_t materialize_cap = 2'000'000);

/// alpha = min_i log_n(|A_i||B_i|), beta = log_n |H|.  Checks the
/// feasibility inequalities alpha <= beta and alpha + 2 <= 2 beta.
struct AlphaBeta {
    double alpha = 0;
    double beta = 0;
    std::size_t n = 0;
    bool inequalities_hold = false;
};
AlphaBeta alpha_beta(const SubsetPairFamily& f);

// ---------------------------------------------------------------------------
// Simultaneous triple product constructions
// ---------------------------------------------------------------------------

/// Two triples in Cyc_n^3 built from the coordinate subgroups minus zero:
/// (H1*, H2*, H3*) and (H2*, H3*, H1*).
SubsetTripleFamily build_stpp_example(int n);

/// STPP family in Cyc_l^k from a local strong USP: A_u supported exactly on
/// the 1-entries of u, B_u on the 2-entries, C_u on the 3-entries.
/// Verifies the local strong USP precondition.
SubsetTripleFamily local_strong_usp_to_stpp(const Puzzle& u, int l);

/// The Cyc_l chart over symbols {1,2,3} whose allowed-triple set contains
/// the seven local-USP triples (l >= 3).
Chart local_usp_chart(int l);

/// STPP family in H^k from a chart and a chart-USP: per-row product sets
/// A_u = prod_i A(u_i) etc.  Verifies the chart-USP precondition.
SubsetTripleFamily chart_to_stpp(const Chart& chart, const Puzzle& u);

/// Converts an STPP family over an abelian H into TPP subsets of
/// Sym(n) ⋉ H^n (one coordinate per family entry).
SubsetTriple stpp_to_tpp(const SubsetTripleFamily& f,
                         std::uint64_t materialize_cap = 2'000'000);

// ---------------------------------------------------------------------------
// Progression-free machinery
// ---------------------------------------------------------------------------

/// 3-term-progression-free subset of {1, ..., floor(n/2)}: the integers
/// whose base-3 digits are 0/1, intersected with the range.
std::vector<int> build_no3ap_set(int n);

/// Exact maximum 3AP-free subset of {1..limit} by branch and bound; intended
/// for small ranges (test oracle support).
std::vector<int> max_no3ap_subset(int limit);

bool is_3ap_free(const std::vector<int>& t);

/// {(a,b,c) in triangle(n) : b-a in T}; triangle-free means no u,v,w with
/// u1=w1, v2=u2, w3=v3 besides u=v=w.
std::vector<std::array<int, 3>> triangle_free_from(const TriangleSet& tri,
                                                   const std::vector<int>& t);
std::vector<std::array<int, 3>> build_triangle_free(int n);

/// Brute-force triangle-freeness check; returns a violating (u,v,w) if any.
std::optional<std::array<std::array<int, 3>, 3>> find_triangle(
    const std::vector<std::array<int, 3>>& s);

} // namespace gtmm
