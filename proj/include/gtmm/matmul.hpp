#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gtmm/algebra.hpp"
#include "gtmm/properties.hpp"

namespace gtmm {

/// Dense matrix of exact 64-bit integers, row-major.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    static IntMatrix identity(std::size_t n);

    bool operator==(const IntMatrix&) const = default;
};

/// Textbook triple loop with overflow-checked accumulation; the oracle the
/// embedding paths are measured against.
IntMatrix naive_matmul(const IntMatrix& a, const IntMatrix& b);

struct MatmulOptions {
    bool assume_verified = false;    // skip the property re-check
    std::uint64_t check_budget = 1'000'000'000;
    std::uint64_t convolution_budget = 50'000'000; // support-product cap
};

/// Multiplies through the group algebra: A embeds as sum A[s][t] d_{s^-1 t}
/// over (S1, S2), B over (S2, S3), one exact convolution, and the product is
/// read off the coefficients of s^{-1} u.  Requires dims(A) = |S1| x |S2|,
/// dims(B) = |S2| x |S3|.  The triple is re-verified first unless
/// assume_verified is set.
IntMatrix multiply_via_tpp(const SubsetTriple& t, const IntMatrix& a, const IntMatrix& b,
                           const MatmulOptions& options = {});

/// Carries all k independent products in one convolution; input i must have
/// dims |A_i| x |B_i| and |B_i| x |C_i|.
std::vector<IntMatrix> multiply_via_stpp(const SubsetTripleFamily& f,
                                         const std::vector<std::pair<IntMatrix, IntMatrix>>& inputs,
                                         const MatmulOptions& options = {});

/// Informational cost accounting: group order (when small), embedding
/// support sizes, convolution products used, naive multiplication count.
struct OpCountReport {
    double log_group_order = 0;
    std::uint64_t group_order = 0; // 0 when larger than the enumeration cap
    std::uint64_t support_left = 0;
    std::uint64_t support_right = 0;
    std::uint64_t convolution_products = 0;
    std::uint64_t naive_products = 0;
};

OpCountReport op_count_report(const SubsetTriple& t);
OpCountReport op_count_report(const SubsetTripleFamily& f);

} // namespace gtmm
