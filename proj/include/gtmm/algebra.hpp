#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "gtmm/group.hpp"

namespace gtmm {

/// Element of the integral group algebra Z[G]: a finite coefficient map over
/// group elements.  Invariant: no explicit zero coefficients are stored.  The
/// ordered map keeps iteration deterministic (canonical element order).
using AlgebraElement = std::map<GroupElement, mpz_class>;

/// Adds c * delta_g, dropping the entry if the coefficient cancels to zero.
void algebra_insert(AlgebraElement& u, const GroupElement& g, const mpz_class& c);

AlgebraElement algebra_add(const AlgebraElement& u, const AlgebraElement& v);

/// Convolution: coeff(g) = sum over x*y = g of u(x) v(y).  Exact arithmetic;
/// cost is |supp u| * |supp v| group products.
AlgebraElement algebra_mul(const Group& group, const AlgebraElement& u,
                           const AlgebraElement& v);

/// Dense coefficient vector indexed by the canonical enumeration order.
std::vector<mpz_class> algebra_dense(const Group& group, const AlgebraElement& u,
                                     std::uint64_t cap = Group::default_enumeration_cap);

constexpr std::uint64_t default_dft_cap = 100'000;

/// Multidimensional DFT of an abelian group algebra element, evaluated on the
/// full character grid in lexicographic order:
///   F(t) = sum_g u(g) exp(-2*pi*i * sum_j t_j g_j / m_j).
/// Approximate backend only; never used as a correctness oracle.
std::vector<std::complex<double>> abelian_dft(const Group& group, const AlgebraElement& u,
                                              std::uint64_t cap = default_dft_cap);

/// Inverse transform back to a dense coefficient vector (same indexing).
std::vector<std::complex<double>> abelian_idft(const Group& group,
                                               const std::vector<std::complex<double>>& f,
                                               std::uint64_t cap = default_dft_cap);

} // namespace gtmm
