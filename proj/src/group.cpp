#include "gtmm/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gtmm {

// ---------------------------------------------------------------------------
// Perm
// ---------------------------------------------------------------------------

Perm Perm::identity(std::size_t n) {
    Perm p;
    p.map.resize(n);
    std::iota(p.map.begin(), p.map.end(), 0u);
    return p;
}

Perm Perm::compose(const Perm& rhs) const {
    Perm out;
    out.map.resize(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) out.map[i] = map[rhs.map[i]];
    return out;
}

Perm Perm::inverse() const {
    Perm out;
    out.map.resize(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) out.map[map[i]] = static_cast<std::uint32_t>(i);
    return out;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] != i) return false;
    return true;
}

bool Perm::is_valid() const {
    std::vector<bool> seen(map.size(), false);
    for (auto v : map) {
        if (v >= map.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// ---------------------------------------------------------------------------
// PairElement / ProductSpec comparisons (out of line: recursive types)
// ---------------------------------------------------------------------------

bool PairElement::operator==(const PairElement& rhs) const { return parts == rhs.parts; }

std::strong_ordering PairElement::operator<=>(const PairElement& rhs) const {
    return parts <=> rhs.parts;
}

bool ProductSpec::operator==(const ProductSpec& rhs) const { return parts == rhs.parts; }

bool GroupSpec::is_abelian() const {
    if (std::holds_alternative<AbelianSpec>(value)) return true;
    if (const auto* p = std::get_if<ProductSpec>(&value))
        return p->parts[0].is_abelian() && p->parts[1].is_abelian();
    return false;
}

// ---------------------------------------------------------------------------
// Hashing
// ---------------------------------------------------------------------------

namespace {

void hash_mix(std::size_t& h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

std::size_t hash_element(const GroupElement& e) {
    std::size_t h = e.value.index() + 1;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AbelianVec>) {
                for (auto x : v) hash_mix(h, static_cast<std::size_t>(x));
            } else if constexpr (std::is_same_v<T, Perm>) {
                for (auto x : v.map) hash_mix(h, x);
            } else if constexpr (std::is_same_v<T, WreathElement>) {
                for (auto x : v.pi.map) hash_mix(h, x);
                for (auto x : v.h) hash_mix(h, static_cast<std::size_t>(x));
            } else {
                for (const auto& p : v.parts) hash_mix(h, hash_element(p));
            }
        },
        e.value);
    return h;
}

} // namespace

std::size_t ElementHash::operator()(const GroupElement& e) const { return hash_element(e); }

// ---------------------------------------------------------------------------
// Spec constructors and products
// ---------------------------------------------------------------------------

GroupSpec abelian_group(std::vector<std::int64_t> moduli) {
    for (auto m : moduli)
        if (m < 1) throw StructuralError("abelian modulus must be >= 1");
    return GroupSpec{AbelianSpec{std::move(moduli)}};
}

GroupSpec symmetric_group(std::size_t n) { return GroupSpec{SymSpec{IndexSet{n, {}}}}; }

GroupSpec symmetric_group(IndexSet index) { return GroupSpec{SymSpec{index}}; }

GroupSpec wreath_group(AbelianSpec base, IndexSet index) {
    for (auto m : base.moduli)
        if (m < 1) throw StructuralError("abelian modulus must be >= 1");
    return GroupSpec{WreathSpec{std::move(base), index}};
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
    const auto* aa = std::get_if<AbelianSpec>(&a.value);
    const auto* bb = std::get_if<AbelianSpec>(&b.value);
    if (aa && bb) {
        AbelianSpec out = *aa;
        out.moduli.insert(out.moduli.end(), bb->moduli.begin(), bb->moduli.end());
        return GroupSpec{std::move(out)};
    }
    return GroupSpec{ProductSpec{{a, b}}};
}

GroupElement product_element(const GroupSpec& a_spec, const GroupSpec& b_spec,
                             const GroupElement& x, const GroupElement& y) {
    const auto* aa = std::get_if<AbelianSpec>(&a_spec.value);
    const auto* bb = std::get_if<AbelianSpec>(&b_spec.value);
    if (aa && bb) {
        const auto& xv = std::get<AbelianVec>(x.value);
        const auto& yv = std::get<AbelianVec>(y.value);
        AbelianVec out = xv;
        out.insert(out.end(), yv.begin(), yv.end());
        return GroupElement{std::move(out)};
    }
    return GroupElement{PairElement{{x, y}}};
}

// ---------------------------------------------------------------------------
// Group
// ---------------------------------------------------------------------------

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

AbelianVec abelian_add(const AbelianSpec& spec, const AbelianVec& x, const AbelianVec& y) {
    AbelianVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_reduce(x[i] + y[i], spec.moduli[i]);
    return out;
}

AbelianVec abelian_neg(const AbelianSpec& spec, const AbelianVec& x) {
    AbelianVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_reduce(-x[i], spec.moduli[i]);
    return out;
}

[[noreturn]] void shape_error(const char* what) {
    throw StructuralError(std::string("element does not match group spec: ") + what);
}

struct MulVisitor {
    const GroupSpec& spec;

    GroupElement operator()(const AbelianSpec& s, const GroupElement& x,
                            const GroupElement& y) const {
        const auto* xv = std::get_if<AbelianVec>(&x.value);
        const auto* yv = std::get_if<AbelianVec>(&y.value);
        if (!xv || !yv || xv->size() != s.arity() || yv->size() != s.arity())
            shape_error("abelian vector");
        return GroupElement{abelian_add(s, *xv, *yv)};
    }

    GroupElement operator()(const SymSpec& s, const GroupElement& x, const GroupElement& y) const {
        const auto* xp = std::get_if<Perm>(&x.value);
        const auto* yp = std::get_if<Perm>(&y.value);
        if (!xp || !yp || xp->degree() != s.index.size || yp->degree() != s.index.size)
            shape_error("permutation");
        return GroupElement{xp->compose(*yp)};
    }

    GroupElement operator()(const WreathSpec& s, const GroupElement& x,
                            const GroupElement& y) const {
        const auto* xw = std::get_if<WreathElement>(&x.value);
        const auto* yw = std::get_if<WreathElement>(&y.value);
        const std::size_t n = s.index.size;
        const std::size_t r = s.base.arity();
        if (!xw || !yw || xw->pi.degree() != n || yw->pi.degree() != n ||
            xw->h.size() != n * r || yw->h.size() != n * r)
            shape_error("wreath pair");
        WreathElement out;
        out.pi = xw->pi.compose(yw->pi);
        out.h.resize(n * r);
        // (f1^{pi2} + f2)_i = f1_{pi2(i)} + f2_i
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t src = yw->pi.map[i];
            for (std::size_t j = 0; j < r; ++j)
                out.h[i * r + j] =
                    mod_reduce(xw->h[src * r + j] + yw->h[i * r + j], s.base.moduli[j]);
        }
        return GroupElement{std::move(out)};
    }

    GroupElement operator()(const ProductSpec& s, const GroupElement& x,
                            const GroupElement& y) const {
        const auto* xp = std::get_if<PairElement>(&x.value);
        const auto* yp = std::get_if<PairElement>(&y.value);
        if (!xp || !yp || xp->parts.size() != 2 || yp->parts.size() != 2) shape_error("pair");
        Group ga(s.parts[0]), gb(s.parts[1]);
        return GroupElement{PairElement{{ga.mul(xp->parts[0], yp->parts[0]),
                                         gb.mul(xp->parts[1], yp->parts[1])}}};
    }
};

} // namespace

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {}

GroupElement Group::identity() const {
    return std::visit(
        [](const auto& s) -> GroupElement {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbelianSpec>) {
                return GroupElement{AbelianVec(s.arity(), 0)};
            } else if constexpr (std::is_same_v<T, SymSpec>) {
                return GroupElement{Perm::identity(s.index.size)};
            } else if constexpr (std::is_same_v<T, WreathSpec>) {
                return GroupElement{WreathElement{
                    Perm::identity(s.index.size),
                    std::vector<std::int64_t>(s.index.size * s.base.arity(), 0)}};
            } else {
                return GroupElement{PairElement{
                    {Group(s.parts[0]).identity(), Group(s.parts[1]).identity()}}};
            }
        },
        spec_.value);
}

GroupElement Group::mul(const GroupElement& x, const GroupElement& y) const {
    return std::visit([&](const auto& s) { return MulVisitor{spec_}(s, x, y); }, spec_.value);
}

GroupElement Group::inv(const GroupElement& x) const {
    return std::visit(
        [&](const auto& s) -> GroupElement {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbelianSpec>) {
                const auto* xv = std::get_if<AbelianVec>(&x.value);
                if (!xv || xv->size() != s.arity()) shape_error("abelian vector");
                return GroupElement{abelian_neg(s, *xv)};
            } else if constexpr (std::is_same_v<T, SymSpec>) {
                const auto* xp = std::get_if<Perm>(&x.value);
                if (!xp || xp->degree() != s.index.size) shape_error("permutation");
                return GroupElement{xp->inverse()};
            } else if constexpr (std::is_same_v<T, WreathSpec>) {
                const auto* xw = std::get_if<WreathElement>(&x.value);
                const std::size_t n = s.index.size;
                const std::size_t r = s.base.arity();
                if (!xw || xw->pi.degree() != n || xw->h.size() != n * r)
                    shape_error("wreath pair");
                // (pi, f)^{-1} = (pi^{-1}, (-f)^{pi^{-1}})
                WreathElement out;
                out.pi = xw->pi.inverse();
                out.h.resize(n * r);
                for (std::size_t i = 0; i < n; ++i) {
                    const std::size_t src = out.pi.map[i];
                    for (std::size_t j = 0; j < r; ++j)
                        out.h[i * r + j] = mod_reduce(-xw->h[src * r + j], s.base.moduli[j]);
                }
                return GroupElement{std::move(out)};
            } else {
                const auto* xp = std::get_if<PairElement>(&x.value);
                if (!xp || xp->parts.size() != 2) shape_error("pair");
                return GroupElement{PairElement{{Group(s.parts[0]).inv(xp->parts[0]),
                                                 Group(s.parts[1]).inv(xp->parts[1])}}};
            }
        },
        spec_.value);
}

bool Group::is_identity(const GroupElement& x) const { return x == identity(); }

void Group::validate(const GroupElement& x) const {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbelianSpec>) {
                const auto* xv = std::get_if<AbelianVec>(&x.value);
                if (!xv || xv->size() != s.arity()) shape_error("abelian vector");
                for (std::size_t i = 0; i < xv->size(); ++i)
                    if ((*xv)[i] < 0 || (*xv)[i] >= s.moduli[i]) shape_error("residue range");
            } else if constexpr (std::is_same_v<T, SymSpec>) {
                const auto* xp = std::get_if<Perm>(&x.value);
                if (!xp || xp->degree() != s.index.size || !xp->is_valid())
                    shape_error("permutation");
            } else if constexpr (std::is_same_v<T, WreathSpec>) {
                const auto* xw = std::get_if<WreathElement>(&x.value);
                const std::size_t n = s.index.size;
                const std::size_t r = s.base.arity();
                if (!xw || xw->pi.degree() != n || !xw->pi.is_valid() || xw->h.size() != n * r)
                    shape_error("wreath pair");
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (xw->h[i * r + j] < 0 || xw->h[i * r + j] >= s.base.moduli[j])
                            shape_error("wreath residue range");
            } else {
                const auto* xp = std::get_if<PairElement>(&x.value);
                if (!xp || xp->parts.size() != 2) shape_error("pair");
                Group(s.parts[0]).validate(xp->parts[0]);
                Group(s.parts[1]).validate(xp->parts[1]);
            }
        },
        spec_.value);
}

namespace {

// Saturating multiply: returns nullopt past cap.
std::optional<std::uint64_t> mul_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (a == 0 || b == 0) return std::uint64_t{0};
    if (a > cap / b) return std::nullopt;
    return a * b;
}

std::optional<std::uint64_t> order_capped(const GroupSpec& spec, std::uint64_t cap);

std::optional<std::uint64_t> abelian_order_capped(const AbelianSpec& s, std::uint64_t cap) {
    std::uint64_t o = 1;
    for (auto m : s.moduli) {
        auto r = mul_capped(o, static_cast<std::uint64_t>(m), cap);
        if (!r) return std::nullopt;
        o = *r;
    }
    return o;
}

std::optional<std::uint64_t> factorial_capped(std::uint64_t n, std::uint64_t cap) {
    std::uint64_t o = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        auto r = mul_capped(o, i, cap);
        if (!r) return std::nullopt;
        o = *r;
    }
    return o;
}

std::optional<std::uint64_t> order_capped(const GroupSpec& spec, std::uint64_t cap) {
    return std::visit(
        [&](const auto& s) -> std::optional<std::uint64_t> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbelianSpec>) {
                return abelian_order_capped(s, cap);
            } else if constexpr (std::is_same_v<T, SymSpec>) {
                return factorial_capped(s.index.size, cap);
            } else if constexpr (std::is_same_v<T, WreathSpec>) {
                auto f = factorial_capped(s.index.size, cap);
                if (!f) return std::nullopt;
                std::uint64_t o = *f;
                for (std::size_t i = 0; i < s.index.size; ++i) {
                    auto b = abelian_order_capped(s.base, cap);
                    if (!b) return std::nullopt;
                    auto r = mul_capped(o, *b, cap);
                    if (!r) return std::nullopt;
                    o = *r;
                }
                return o;
            } else {
                auto a = order_capped(s.parts[0], cap);
                auto b = order_capped(s.parts[1], cap);
                if (!a || !b) return std::nullopt;
                return mul_capped(*a, *b, cap);
            }
        },
        spec.value);
}

double log_order_of(const GroupSpec& spec) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbelianSpec>) {
                double lg = 0;
                for (auto m : s.moduli) lg += std::log(static_cast<double>(m));
                return lg;
            } else if constexpr (std::is_same_v<T, SymSpec>) {
                return std::lgamma(static_cast<double>(s.index.size) + 1.0);
            } else if constexpr (std::is_same_v<T, WreathSpec>) {
                double base = 0;
                for (auto m : s.base.moduli) base += std::log(static_cast<double>(m));
                return std::lgamma(static_cast<double>(s.index.size) + 1.0) +
                       static_cast<double>(s.index.size) * base;
            } else {
                return log_order_of(s.parts[0]) + log_order_of(s.parts[1]);
            }
        },
        spec.value);
}

bool next_abelian(const AbelianSpec& s, AbelianVec& v) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (++v[i] < s.moduli[i]) return true;
        v[i] = 0;
    }
    return false;
}

} // namespace

std::optional<std::uint64_t> Group::order_if_at_most(std::uint64_t cap) const {
    return order_capped(spec_, cap);
}

double Group::log_order() const { return log_order_of(spec_); }

void Group::for_each(const std::function<void(const GroupElement&)>& fn,
                     std::uint64_t cap) const {
    auto order = order_if_at_most(cap);
    if (!order) {
        throw ResourceLimitError("group enumeration: order exceeds cap " + std::to_string(cap) +
                                 " (log order = " + std::to_string(log_order()) + ")");
    }
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbelianSpec>) {
                AbelianVec v(s.arity(), 0);
                do {
                    fn(GroupElement{v});
                } while (next_abelian(s, v));
            } else if constexpr (std::is_same_v<T, SymSpec>) {
                Perm p = Perm::identity(s.index.size);
                do {
                    fn(GroupElement{p});
                } while (std::next_permutation(p.map.begin(), p.map.end()));
            } else if constexpr (std::is_same_v<T, WreathSpec>) {
                const std::size_t n = s.index.size;
                AbelianSpec flat;
                flat.moduli.reserve(n * s.base.arity());
                for (std::size_t i = 0; i < n; ++i)
                    flat.moduli.insert(flat.moduli.end(), s.base.moduli.begin(),
                                       s.base.moduli.end());
                Perm p = Perm::identity(n);
                do {
                    AbelianVec v(flat.arity(), 0);
                    do {
                        fn(GroupElement{WreathElement{p, v}});
                    } while (next_abelian(flat, v));
                } while (std::next_permutation(p.map.begin(), p.map.end()));
            } else {
                Group ga(s.parts[0]), gb(s.parts[1]);
                ga.for_each(
                    [&](const GroupElement& x) {
                        gb.for_each(
                            [&](const GroupElement& y) {
                                fn(GroupElement{PairElement{{x, y}}});
                            },
                            cap);
                    },
                    cap);
            }
        },
        spec_.value);
}

std::vector<GroupElement> Group::elements(std::uint64_t cap) const {
    std::vector<GroupElement> out;
    if (auto order = order_if_at_most(cap)) out.reserve(*order);
    for_each([&](const GroupElement& e) { out.push_back(e); }, cap);
    return out;
}

std::vector<GroupElement> class_preserving_permutations(
    const std::vector<std::vector<std::uint32_t>>& classes, std::size_t n, std::uint64_t cap) {
    std::uint64_t order = 1;
    for (const auto& cls : classes) {
        auto f = factorial_capped(cls.size(), cap);
        if (!f) throw ResourceLimitError("class-preserving subgroup exceeds enumeration cap");
        auto r = mul_capped(order, *f, cap);
        if (!r) throw ResourceLimitError("class-preserving subgroup exceeds enumeration cap");
        order = *r;
    }
    std::vector<GroupElement> out;
    out.reserve(order);
    std::vector<std::uint32_t> cur(n);
    std::iota(cur.begin(), cur.end(), 0u);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == classes.size()) {
            out.push_back(GroupElement{Perm{cur}});
            return;
        }
        auto images = classes[c];
        std::sort(images.begin(), images.end());
        do {
            for (std::size_t t = 0; t < images.size(); ++t) cur[classes[c][t]] = images[t];
            rec(c + 1);
        } while (std::next_permutation(images.begin(), images.end()));
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Wreath presentation helpers
// ---------------------------------------------------------------------------

GroupElement wreath_from_h_pi(const WreathSpec& spec, const std::vector<AbelianVec>& h,
                              const Perm& pi) {
    const std::size_t n = spec.index.size;
    const std::size_t r = spec.base.arity();
    if (h.size() != n || pi.degree() != n) shape_error("wreath h/pi sizes");
    // h·pi = (pi, h^pi) with (h^pi)_i = h_{pi(i)}
    WreathElement out;
    out.pi = pi;
    out.h.resize(n * r);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& src = h[pi.map[i]];
        if (src.size() != r) shape_error("wreath base vector");
        for (std::size_t j = 0; j < r; ++j) out.h[i * r + j] = mod_reduce(src[j], spec.base.moduli[j]);
    }
    return GroupElement{std::move(out)};
}

std::vector<AbelianVec> wreath_h_part(const WreathSpec& spec, const GroupElement& x) {
    const auto* xw = std::get_if<WreathElement>(&x.value);
    const std::size_t n = spec.index.size;
    const std::size_t r = spec.base.arity();
    if (!xw || xw->pi.degree() != n || xw->h.size() != n * r) shape_error("wreath pair");
    // x = (pi, f) = h·pi with h = f^{pi^{-1}}
    Perm pinv = xw->pi.inverse();
    std::vector<AbelianVec> h(n, AbelianVec(r));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = pinv.map[i];
        for (std::size_t j = 0; j < r; ++j) h[i][j] = xw->h[src * r + j];
    }
    return h;
}

} // namespace gtmm
