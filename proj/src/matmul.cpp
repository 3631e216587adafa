#include "gtmm/matmul.hpp"

#include <unordered_map>

namespace gtmm {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix naive_matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw StructuralError("naive_matmul: inner dimensions differ");
    IntMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t t = 0; t < a.cols; ++t) {
            const std::int64_t av = a.at(i, t);
            if (av == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                std::int64_t prod;
                if (__builtin_mul_overflow(av, b.at(t, j), &prod) ||
                    __builtin_add_overflow(out.at(i, j), prod, &out.at(i, j)))
                    throw ResourceLimitError("naive_matmul: 64-bit overflow");
            }
        }
    }
    return out;
}

namespace {

std::int64_t mpz_to_i64(const mpz_class& v) {
    if (!v.fits_slong_p()) throw ResourceLimitError("matrix entry exceeds 64-bit range");
    return static_cast<std::int64_t>(v.get_si());
}

/// Embeds one block: sum over (s, t) of M[s][t] * delta_{s^{-1} t}.
void embed_block(const Group& group, const std::vector<GroupElement>& rows_set,
                 const std::vector<GroupElement>& cols_set, const IntMatrix& m,
                 AlgebraElement& acc) {
    for (std::size_t r = 0; r < rows_set.size(); ++r) {
        const GroupElement inv_row = group.inv(rows_set[r]);
        for (std::size_t c = 0; c < cols_set.size(); ++c) {
            const std::int64_t v = m.at(r, c);
            if (v == 0) continue;
            algebra_insert(acc, group.mul(inv_row, cols_set[c]), mpz_class(v));
        }
    }
}

IntMatrix extract_block(const Group& group, const std::vector<GroupElement>& rows_set,
                        const std::vector<GroupElement>& cols_set, const AlgebraElement& w) {
    IntMatrix out(rows_set.size(), cols_set.size());
    for (std::size_t r = 0; r < rows_set.size(); ++r) {
        const GroupElement inv_row = group.inv(rows_set[r]);
        for (std::size_t c = 0; c < cols_set.size(); ++c) {
            auto it = w.find(group.mul(inv_row, cols_set[c]));
            if (it != w.end()) out.at(r, c) = mpz_to_i64(it->second);
        }
    }
    return out;
}

void check_support_budget(const AlgebraElement& u, const AlgebraElement& v,
                          std::uint64_t budget) {
    const std::uint64_t cost = static_cast<std::uint64_t>(u.size()) * v.size();
    if (cost > budget)
        throw ResourceLimitError("convolution support product " + std::to_string(cost) +
                                 " exceeds budget " + std::to_string(budget));
}

} // namespace

IntMatrix multiply_via_tpp(const SubsetTriple& t, const IntMatrix& a, const IntMatrix& b,
                           const MatmulOptions& options) {
    if (a.rows != t.s1.size() || a.cols != t.s2.size() || b.rows != t.s2.size() ||
        b.cols != t.s3.size())
        throw StructuralError("multiply_via_tpp: matrix dimensions must match the "
                              "realized shape <" +
                              std::to_string(t.s1.size()) + "," + std::to_string(t.s2.size()) +
                              "," + std::to_string(t.s3.size()) + ">");
    if (!options.assume_verified) {
        Budget budget{options.check_budget, 0};
        if (check_tpp(t, budget))
            throw StructuralError("multiply_via_tpp: the subsets fail the triple product "
                                  "property; pass assume_verified only for pre-verified input");
    }
    Group group(t.group);
    AlgebraElement u, v;
    embed_block(group, t.s1, t.s2, a, u);
    embed_block(group, t.s2, t.s3, b, v);
    check_support_budget(u, v, options.convolution_budget);
    AlgebraElement w = algebra_mul(group, u, v);
    return extract_block(group, t.s1, t.s3, w);
}

std::vector<IntMatrix> multiply_via_stpp(
    const SubsetTripleFamily& f, const std::vector<std::pair<IntMatrix, IntMatrix>>& inputs,
    const MatmulOptions& options) {
    if (inputs.size() != f.triples.size())
        throw StructuralError("multiply_via_stpp: need one matrix pair per triple");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto& [a, b] = inputs[i];
        const auto& t = f.triples[i];
        if (a.rows != t.a.size() || a.cols != t.b.size() || b.rows != t.b.size() ||
            b.cols != t.c.size())
            throw StructuralError("multiply_via_stpp: pair " + std::to_string(i) +
                                  " does not match the realized shape");
    }
    if (!options.assume_verified) {
        Budget budget{options.check_budget, 0};
        if (check_stpp(f, budget))
            throw StructuralError("multiply_via_stpp: the family fails the simultaneous "
                                  "triple product property");
    }
    Group group(f.group);
    AlgebraElement u, v;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        embed_block(group, f.triples[i].a, f.triples[i].b, inputs[i].first, u);
        embed_block(group, f.triples[i].b, f.triples[i].c, inputs[i].second, v);
    }
    check_support_budget(u, v, options.convolution_budget);
    AlgebraElement w = algebra_mul(group, u, v);
    std::vector<IntMatrix> out;
    out.reserve(inputs.size());
    for (const auto& t : f.triples) out.push_back(extract_block(group, t.a, t.c, w));
    return out;
}

namespace {

OpCountReport report_common(const Group& group, std::uint64_t support_left,
                            std::uint64_t support_right, std::uint64_t naive) {
    OpCountReport r;
    r.log_group_order = group.log_order();
    if (auto o = group.order_if_at_most(Group::default_enumeration_cap)) r.group_order = *o;
    r.support_left = support_left;
    r.support_right = support_right;
    r.convolution_products = support_left * support_right;
    r.naive_products = naive;
    return r;
}

} // namespace

OpCountReport op_count_report(const SubsetTriple& t) {
    const std::uint64_t nm = t.s1.size() * t.s2.size();
    const std::uint64_t mp = t.s2.size() * t.s3.size();
    return report_common(Group(t.group), nm, mp, nm * t.s3.size());
}

OpCountReport op_count_report(const SubsetTripleFamily& f) {
    std::uint64_t left = 0, right = 0, naive = 0;
    for (const auto& t : f.triples) {
        left += t.a.size() * t.b.size();
        right += t.b.size() * t.c.size();
        naive += t.a.size() * t.b.size() * t.c.size();
    }
    return report_common(Group(f.group), left, right, naive);
}

} // namespace gtmm
