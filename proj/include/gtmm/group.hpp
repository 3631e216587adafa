#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "gtmm/errors.hpp"

namespace gtmm {

// ---------------------------------------------------------------------------
// Element payloads
// ---------------------------------------------------------------------------

/// Residue vector of a product of cyclic groups, one entry per modulus.
using AbelianVec = std::vector<std::int64_t>;

/// Permutation of {0, ..., n-1} in one-line notation: i maps to map[i].
struct Perm {
    std::vector<std::uint32_t> map;

    static Perm identity(std::size_t n);
    std::size_t degree() const { return map.size(); }
    /// Function composition: (a.then_apply(b))(i) = a(b(i)).
    Perm compose(const Perm& rhs) const;
    Perm inverse() const;
    bool is_identity() const;
    bool is_valid() const;

    auto operator<=>(const Perm&) const = default;
};

/// Element of Sym(n) ⋉ B^n stored in the normal form pi·f (symmetric part
/// first).  The base tuple f is flattened row-major: h[i*arity + j] is
/// coordinate j of the base element at index position i.  The group law is
/// (pi1, f1)(pi2, f2) = (pi1∘pi2, f1^pi2 + f2) with (f^s)_i = f_{s(i)}.
struct WreathElement {
    Perm pi;
    std::vector<std::int64_t> h;

    auto operator<=>(const WreathElement&) const = default;
};

struct GroupElement;

/// Element of a direct product of two (non-flattened) groups.
struct PairElement {
    std::vector<GroupElement> parts; // exactly two

    bool operator==(const PairElement&) const;
    std::strong_ordering operator<=>(const PairElement&) const;
};

/// A value in one concrete finite group.  Elements do not carry their group:
/// the owning Group interprets them, and shape mismatches are structural
/// errors.
struct GroupElement {
    std::variant<AbelianVec, Perm, WreathElement, PairElement> value;

    bool operator==(const GroupElement&) const = default;
    std::strong_ordering operator<=>(const GroupElement&) const = default;
};

struct ElementHash {
    std::size_t operator()(const GroupElement&) const;
};

// ---------------------------------------------------------------------------
// Group specifications
// ---------------------------------------------------------------------------

/// Direct product of cyclic groups Cyc_{m1} x ... x Cyc_{mr}.
struct AbelianSpec {
    std::vector<std::int64_t> moduli; // each >= 1

    std::size_t arity() const { return moduli.size(); }
    bool operator==(const AbelianSpec&) const = default;
};

/// Finite index set {0, ..., size-1} with deterministic order.  When the set
/// is the triangular array {(a,b,c) >= 0 : a+b+c = n-1}, `triangle_n` records
/// n; points are numbered in lexicographic (a,b,c) order.
struct IndexSet {
    std::size_t size = 0;
    std::optional<int> triangle_n;

    bool operator==(const IndexSet&) const = default;
};

struct SymSpec {
    IndexSet index;

    bool operator==(const SymSpec&) const = default;
};

/// Sym(index) ⋉ base^index, the symmetric group permuting coordinates of a
/// power of an abelian group.  Order = |index|! * |base|^{|index|}.
struct WreathSpec {
    AbelianSpec base;
    IndexSet index;

    bool operator==(const WreathSpec&) const = default;
};

struct GroupSpec;

struct ProductSpec {
    std::vector<GroupSpec> parts; // exactly two

    bool operator==(const ProductSpec&) const;
};

struct GroupSpec {
    std::variant<AbelianSpec, SymSpec, WreathSpec, ProductSpec> value;

    bool operator==(const GroupSpec&) const = default;

    bool is_abelian() const;
};

GroupSpec abelian_group(std::vector<std::int64_t> moduli);
GroupSpec symmetric_group(std::size_t n);
GroupSpec symmetric_group(IndexSet index);
GroupSpec wreath_group(AbelianSpec base, IndexSet index);

/// Direct product.  Abelian x abelian flattens the moduli lists (so N-fold
/// powers stay canonical); anything else keeps a nested pair.
GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);

/// Builds the element of direct_product(a_spec, b_spec) with components x, y.
GroupElement product_element(const GroupSpec& a_spec, const GroupSpec& b_spec,
                             const GroupElement& x, const GroupElement& y);

// ---------------------------------------------------------------------------
// Group operations
// ---------------------------------------------------------------------------

/// Exact arithmetic in one finite group.  All values are immutable and every
/// operation is pure, so concurrent use needs no synchronization.
class Group {
public:
    static constexpr std::uint64_t default_enumeration_cap = 10'000'000;

    explicit Group(GroupSpec spec);

    const GroupSpec& spec() const { return spec_; }

    GroupElement identity() const;
    GroupElement mul(const GroupElement& x, const GroupElement& y) const;
    GroupElement inv(const GroupElement& x) const;
    bool is_identity(const GroupElement& x) const;

    /// Full membership check; throws StructuralError with a description.
    void validate(const GroupElement& x) const;

    /// Exact order if it does not exceed `cap`, otherwise nullopt.
    std::optional<std::uint64_t> order_if_at_most(std::uint64_t cap) const;
    double log_order() const;

    /// Deterministic enumeration (lexicographic in the canonical element
    /// order).  Throws ResourceLimitError if the order exceeds `cap`.
    void for_each(const std::function<void(const GroupElement&)>& fn,
                  std::uint64_t cap = default_enumeration_cap) const;
    std::vector<GroupElement> elements(std::uint64_t cap = default_enumeration_cap) const;

private:
    GroupSpec spec_;
};

/// All permutations of {0..n-1} mapping each class onto itself: the direct
/// product of the symmetric groups on the classes.  Indices not covered by
/// any class stay fixed.  Deterministic (lexicographic) order.
std::vector<GroupElement> class_preserving_permutations(
    const std::vector<std::vector<std::uint32_t>>& classes, std::size_t n,
    std::uint64_t cap = Group::default_enumeration_cap);

/// Converts from the h·pi presentation (base part written on the left, as in
/// semidirect products H ⋊ Sym(n)) to the stored pi·f normal form.
GroupElement wreath_from_h_pi(const WreathSpec& spec,
                              const std::vector<AbelianVec>& h, const Perm& pi);

/// Recovers the h part of the h·pi presentation from a stored element.
std::vector<AbelianVec> wreath_h_part(const WreathSpec& spec, const GroupElement& x);

} // namespace gtmm
