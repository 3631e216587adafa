#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gtmm/errors.hpp"
#include "gtmm/group.hpp"

namespace gtmm {

// ---------------------------------------------------------------------------
// Subset families
// ---------------------------------------------------------------------------

/// Three nonempty subsets of one group, stored deduplicated and sorted in the
/// canonical element order.  Realized shape is <|s1|,|s2|,|s3|>.
struct SubsetTriple {
    GroupSpec group;
    std::vector<GroupElement> s1, s2, s3;
};

struct SubsetPair {
    std::vector<GroupElement> a, b;
};

struct SubsetPairFamily {
    GroupSpec group;
    std::vector<SubsetPair> pairs;
};

struct TripleEntry {
    std::vector<GroupElement> a, b, c;
};

struct SubsetTripleFamily {
    GroupSpec group;
    std::vector<TripleEntry> triples;
};

/// Validates, sorts and deduplicates a subset; rejects empty input.
std::vector<GroupElement> canonical_subset(const Group& group, std::vector<GroupElement> s);

SubsetTriple make_triple(GroupSpec group, std::vector<GroupElement> s1,
                         std::vector<GroupElement> s2, std::vector<GroupElement> s3);
SubsetPairFamily make_pair_family(GroupSpec group, std::vector<SubsetPair> pairs);
SubsetTripleFamily make_triple_family(GroupSpec group, std::vector<TripleEntry> triples);

// ---------------------------------------------------------------------------
// Witnesses
// ---------------------------------------------------------------------------

/// One quotient q = numer * denom^{-1} with both factors taken from the same
/// subset.
struct QuotientFactor {
    GroupElement numer, denom;
};

/// Violation of a product property: the product of the recorded quotients is
/// the identity while the side condition (nontriviality or index equality)
/// fails.  Replaying the factors through the group law reproduces this.
struct ProductWitness {
    std::vector<std::size_t> indices; // family indices, empty for plain tpp/dpp
    std::vector<QuotientFactor> factors;
};

/// Puzzle-permutation violation: the three row permutations (one-line, row
/// index to row index) admit no (row, column) satisfying the defining count.
struct PermTripleWitness {
    std::vector<std::uint32_t> pi1, pi2, pi3;
};

/// Row-triple violation for the local checkers: no coordinate of (u,v,w) is
/// an allowed symbol triple.
struct RowTripleWitness {
    std::vector<std::uint8_t> u, v, w;
};

struct Witness {
    std::string property;
    std::variant<ProductWitness, PermTripleWitness, RowTripleWitness> data;
};

/// nullopt means the property holds.
using CheckResult = std::optional<Witness>;

/// Recomputes the violation recorded in a product witness through gmul.
bool replay_product_witness(const Group& group, const Witness& w);

// ---------------------------------------------------------------------------
// Quotient sets and property checkers
// ---------------------------------------------------------------------------

/// Right quotient set Q(S) = { s1 * s2^{-1} }, sorted canonically.  Contains
/// the identity and is closed under inverse.
std::vector<GroupElement> quotient_set(const Group& group, const std::vector<GroupElement>& s);

/// Triple product property: q1 q2 q3 = 1 with q_i in Q(S_i) forces
/// q1 = q2 = q3 = 1.  Hash join on Q(S3) with early exit; the outer loop may
/// be partitioned across `threads` workers with first-witness-wins merged in
/// partition order, so the verdict is deterministic.
CheckResult check_tpp(const SubsetTriple& t, Budget& budget, int threads = 1);

/// Double product property for one pair of subsets.
CheckResult check_dpp(const Group& group, const std::vector<GroupElement>& a,
                      const std::vector<GroupElement>& b, Budget& budget);

/// Simultaneous double product property.  Uses the equivalent reformulation:
/// the sets A_i^{-1} B_i are disjoint from the sets A_i^{-1} B_k with i != k.
CheckResult check_sdpp(const SubsetPairFamily& f, Budget& budget);

/// Literal two-condition definition of the SDPP, quantifying over all index
/// triples (i, j, k).  Test oracle for the hash-based reformulation.
CheckResult check_sdpp_definition(const SubsetPairFamily& f, Budget& budget);

/// Simultaneous triple product property, with a meet-in-the-middle join on
/// the (b_k')^{-1} c_k factor.
CheckResult check_stpp(const SubsetTripleFamily& f, Budget& budget);

// ---------------------------------------------------------------------------
// Closure operations
// ---------------------------------------------------------------------------

/// Componentwise Cartesian product in the direct-product group; preserves
/// the triple product property.
SubsetTriple product_triples(const SubsetTriple& t, const SubsetTriple& u);
SubsetPairFamily product_pair_families(const SubsetPairFamily& f, const SubsetPairFamily& g);
SubsetTripleFamily product_triple_families(const SubsetTripleFamily& f,
                                           const SubsetTripleFamily& g);

/// Reorders the three subsets by sigma (a permutation of {0,1,2}); the TPP
/// status is preserved.
SubsetTriple permute_triple(const SubsetTriple& t, const std::array<int, 3>& sigma);

} // namespace gtmm
