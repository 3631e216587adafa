#include "gtmm/algebra.hpp"

#include <cmath>
#include <numbers>

namespace gtmm {

void algebra_insert(AlgebraElement& u, const GroupElement& g, const mpz_class& c) {
    if (c == 0) return;
    auto it = u.find(g);
    if (it == u.end()) {
        u.emplace(g, c);
        return;
    }
    it->second += c;
    if (it->second == 0) u.erase(it);
}

AlgebraElement algebra_add(const AlgebraElement& u, const AlgebraElement& v) {
    AlgebraElement out = u;
    for (const auto& [g, c] : v) algebra_insert(out, g, c);
    return out;
}

AlgebraElement algebra_mul(const Group& group, const AlgebraElement& u, const AlgebraElement& v) {
    AlgebraElement out;
    for (const auto& [x, cx] : u) {
        for (const auto& [y, cy] : v) {
            algebra_insert(out, group.mul(x, y), cx * cy);
        }
    }
    return out;
}

std::vector<mpz_class> algebra_dense(const Group& group, const AlgebraElement& u,
                                     std::uint64_t cap) {
    auto order = group.order_if_at_most(cap);
    if (!order) throw ResourceLimitError("algebra_dense: group order exceeds cap");
    std::vector<mpz_class> out(*order);
    std::size_t i = 0;
    // Canonical enumeration is sorted, and the map is sorted the same way,
    // so a single merge pass suffices.
    auto it = u.begin();
    group.for_each(
        [&](const GroupElement& g) {
            if (it != u.end() && it->first == g) {
                out[i] = it->second;
                ++it;
            }
            ++i;
        },
        cap);
    if (it != u.end()) throw StructuralError("algebra element has support outside the group");
    return out;
}

namespace {

const AbelianSpec& require_abelian(const Group& group) {
    const auto* s = std::get_if<AbelianSpec>(&group.spec().value);
    if (!s) throw UnsupportedError("DFT requires an abelian group spec");
    return *s;
}

std::uint64_t checked_order(const Group& group, std::uint64_t cap) {
    auto order = group.order_if_at_most(cap);
    if (!order) throw ResourceLimitError("DFT: group order exceeds cap " + std::to_string(cap));
    return *order;
}

// One axis of the multidimensional transform, applied in place over the
// lexicographically indexed dense array.
void axis_dft(std::vector<std::complex<double>>& a, std::size_t stride, std::size_t m,
              double sign) {
    const std::size_t total = a.size();
    const std::size_t block = stride * m;
    std::vector<std::complex<double>> twiddle(m * m);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t g = 0; g < m; ++g) {
            double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(t * g) /
                         static_cast<double>(m);
            twiddle[t * m + g] = {std::cos(ang), std::sin(ang)};
        }
    std::vector<std::complex<double>> tmp(m);
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t t = 0; t < m; ++t) {
                std::complex<double> acc = 0;
                for (std::size_t g = 0; g < m; ++g)
                    acc += twiddle[t * m + g] * a[base + off + g * stride];
                tmp[t] = acc;
            }
            for (std::size_t t = 0; t < m; ++t) a[base + off + t * stride] = tmp[t];
        }
    }
}

void full_dft(const AbelianSpec& spec, std::vector<std::complex<double>>& a, double sign) {
    std::size_t stride = a.size();
    for (std::size_t axis = 0; axis < spec.arity(); ++axis) {
        const std::size_t m = static_cast<std::size_t>(spec.moduli[axis]);
        stride /= m;
        axis_dft(a, stride, m, sign);
    }
}

} // namespace

std::vector<std::complex<double>> abelian_dft(const Group& group, const AlgebraElement& u,
                                              std::uint64_t cap) {
    const AbelianSpec& spec = require_abelian(group);
    const std::uint64_t order = checked_order(group, cap);
    std::vector<std::complex<double>> a(order, 0.0);
    for (const auto& [g, c] : u) {
        const auto& v = std::get<AbelianVec>(g.value);
        std::size_t idx = 0;
        for (std::size_t j = 0; j < spec.arity(); ++j)
            idx = idx * static_cast<std::size_t>(spec.moduli[j]) + static_cast<std::size_t>(v[j]);
        a[idx] += c.get_d();
    }
    full_dft(spec, a, -1.0);
    return a;
}

std::vector<std::complex<double>> abelian_idft(const Group& group,
                                               const std::vector<std::complex<double>>& f,
                                               std::uint64_t cap) {
    const AbelianSpec& spec = require_abelian(group);
    const std::uint64_t order = checked_order(group, cap);
    if (f.size() != order) throw StructuralError("idft: wrong coefficient vector length");
    std::vector<std::complex<double>> a = f;
    full_dft(spec, a, +1.0);
    const double scale = 1.0 / static_cast<double>(order);
    for (auto& x : a) x *= scale;
    return a;
}

} // namespace gtmm
