#include "gtmm/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace gtmm {

namespace {

mpz_class mpz_factorial(std::uint64_t n) {
    mpz_class f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

mpz_class mpz_pow(std::uint64_t base, std::uint64_t exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

void require_materializable(const mpz_class& size, std::uint64_t cap, const char* what) {
    if (size > cap)
        throw ResourceLimitError(std::string(what) + ": set of size " + size.get_str() +
                                 " exceeds materialization cap " + std::to_string(cap));
}

/// Odometer over one abelian vector whose entries at `positions` range over
/// 1..m-1 and are zero elsewhere.
void for_each_supported_vector(std::size_t arity, const std::vector<std::size_t>& positions,
                               std::int64_t m,
                               const std::function<void(const AbelianVec&)>& fn) {
    AbelianVec v(arity, 0);
    if (positions.empty()) {
        fn(v);
        return;
    }
    for (auto p : positions) v[p] = 1;
    while (true) {
        fn(v);
        std::size_t i = positions.size();
        while (i-- > 0) {
            if (++v[positions[i]] < m) break;
            v[positions[i]] = 1;
            if (i == 0) return;
        }
    }
}

/// Odometer over tuples: one choice from each of `sets`.
void for_each_tuple(const std::vector<std::vector<AbelianVec>>& sets,
                    const std::function<void(const std::vector<AbelianVec>&)>& fn) {
    std::vector<std::size_t> idx(sets.size(), 0);
    std::vector<AbelianVec> cur(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) return;
        cur[i] = sets[i][0];
    }
    while (true) {
        fn(cur);
        std::size_t i = sets.size();
        while (i-- > 0) {
            if (++idx[i] < sets[i].size()) {
                cur[i] = sets[i][idx[i]];
                break;
            }
            idx[i] = 0;
            cur[i] = sets[i][0];
            if (i == 0) return;
        }
    }
}

void for_each_permutation(std::size_t n, const std::function<void(const Perm&)>& fn) {
    Perm p = Perm::identity(n);
    do {
        fn(p);
    } while (std::next_permutation(p.map.begin(), p.map.end()));
}

/// Builds one wreath subset {h·pi : pi in Sym(index), h_i chosen from
/// per-index sets}.
std::vector<GroupElement> wreath_subset(const WreathSpec& spec,
                                        const std::vector<std::vector<AbelianVec>>& choices) {
    std::vector<GroupElement> out;
    for_each_permutation(spec.index.size, [&](const Perm& pi) {
        for_each_tuple(choices, [&](const std::vector<AbelianVec>& h) {
            out.push_back(wreath_from_h_pi(spec, h, pi));
        });
    });
    return out;
}

mpz_class wreath_subset_size(std::size_t index_size,
                             const std::vector<std::vector<AbelianVec>>& choices) {
    mpz_class s = mpz_factorial(index_size);
    for (const auto& c : choices) s *= static_cast<unsigned long>(c.size());
    return s;
}

const AbelianSpec& require_abelian_spec(const GroupSpec& spec, const char* what) {
    const auto* s = std::get_if<AbelianSpec>(&spec.value);
    if (!s) throw UnsupportedError(std::string(what) + " requires an abelian group");
    return *s;
}

} // namespace

// ---------------------------------------------------------------------------
// TriangleSet
// ---------------------------------------------------------------------------

TriangleSet TriangleSet::make(int n) {
    if (n < 1) throw StructuralError("triangle parameter must be >= 1");
    TriangleSet t;
    t.n = n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b + a < n; ++b) t.points.push_back({a, b, n - 1 - a - b});
    std::sort(t.points.begin(), t.points.end());
    return t;
}

// ---------------------------------------------------------------------------
// build_swap_wreath_triple
// ---------------------------------------------------------------------------

SubsetTriple build_swap_wreath_triple(int n) {
    if (n < 2) throw StructuralError("swap-wreath construction needs n >= 2");
    WreathSpec spec{AbelianSpec{{n, n, n}}, IndexSet{2, {}}};
    GroupSpec gspec{spec};
    const Perm id2 = Perm::identity(2);
    const Perm swap{{1, 0}};

    auto coordinate_vectors = [&](int coord, bool nonzero) {
        std::vector<AbelianVec> out;
        for (std::int64_t v = nonzero ? 1 : 0; v < n; ++v) {
            AbelianVec x(3, 0);
            x[coord] = v;
            out.push_back(std::move(x));
        }
        return out;
    };

    std::array<std::vector<GroupElement>, 3> sets;
    for (int i = 0; i < 3; ++i) {
        for (const auto& a : coordinate_vectors(i, true)) {
            for (const auto& b : coordinate_vectors((i + 1) % 3, false)) {
                for (const Perm& z : {id2, swap}) {
                    sets[i].push_back(wreath_from_h_pi(spec, {a, b}, z));
                }
            }
        }
    }
    return make_triple(gspec, std::move(sets[0]), std::move(sets[1]), std::move(sets[2]));
}

// ---------------------------------------------------------------------------
// build_triangle_subgroups
// ---------------------------------------------------------------------------

SubsetTriple build_triangle_subgroups(int n, std::uint64_t subgroup_cap) {
    TriangleSet tri = TriangleSet::make(n);
    const std::size_t p = tri.size();
    GroupSpec gspec = symmetric_group(IndexSet{p, n});

    auto fiber_subgroup = [&](int coord) {
        std::map<int, std::vector<std::uint32_t>> fibers;
        for (std::size_t i = 0; i < p; ++i)
            fibers[tri.points[i][coord]].push_back(static_cast<std::uint32_t>(i));
        std::vector<std::vector<std::uint32_t>> classes;
        for (auto& [key, members] : fibers) classes.push_back(std::move(members));
        return class_preserving_permutations(classes, p, subgroup_cap);
    };

    return make_triple(gspec, fiber_subgroup(0), fiber_subgroup(1), fiber_subgroup(2));
}

// ---------------------------------------------------------------------------
// Strong USP constructions
// ---------------------------------------------------------------------------

Puzzle build_easy_strong_usp(int k) {
    if (k < 1 || k > 20) throw StructuralError("easy strong USP: k must be in [1, 20]");
    std::vector<std::vector<std::uint8_t>> rows;
    const std::uint32_t total = 1u << k;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::vector<std::uint8_t> row(2 * static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const bool bit = (mask >> i) & 1u;
            row[i] = bit ? 1 : 3;
            row[k + i] = bit ? 2 : 3;
        }
        rows.push_back(std::move(row));
    }
    return Puzzle::from_rows(std::move(rows));
}

namespace {

/// Pattern p over the ordered symbol pair (s, t), numbered lexicographically:
/// position i takes t when bit (k-1-i) of p is set, s otherwise.
std::vector<std::uint8_t> block_pattern(std::uint32_t p, std::uint8_t s, std::uint8_t t, int k) {
    std::vector<std::uint8_t> out(k);
    for (int i = 0; i < k; ++i) out[i] = ((p >> (k - 1 - i)) & 1u) ? t : s;
    return out;
}

} // namespace

Puzzle build_triangle_strong_usp(int k) {
    if (k < 1 || k > 10) throw StructuralError("triangle strong USP: k must be in [1, 10]");
    const int n = 1 << k;
    TriangleSet tri = TriangleSet::make(n);
    std::vector<std::vector<std::uint8_t>> rows;
    for (const auto& pt : tri.points) {
        std::vector<std::uint8_t> row;
        row.reserve(3 * static_cast<std::size_t>(k));
        auto b1 = block_pattern(static_cast<std::uint32_t>(pt[0]), 1, 2, k);
        auto b2 = block_pattern(static_cast<std::uint32_t>(pt[1]), 2, 3, k);
        auto b3 = block_pattern(static_cast<std::uint32_t>(pt[2]), 1, 3, k);
        row.insert(row.end(), b1.begin(), b1.end());
        row.insert(row.end(), b2.begin(), b2.end());
        row.insert(row.end(), b3.begin(), b3.end());
        rows.push_back(std::move(row));
    }
    return Puzzle::from_rows(std::move(rows));
}

// ---------------------------------------------------------------------------
// strong_usp_to_tpp
// ---------------------------------------------------------------------------

std::array<mpz_class, 3> strong_usp_to_tpp_sizes(const Puzzle& u, int m) {
    std::array<std::uint64_t, 3> counts{0, 0, 0};
    for (const auto& r : u.rows)
        for (auto v : r) ++counts[v - 1];
    std::array<mpz_class, 3> sizes;
    const mpz_class fact = mpz_factorial(u.size());
    for (int i = 0; i < 3; ++i)
        sizes[i] = fact * mpz_pow(static_cast<std::uint64_t>(m - 1), counts[i]);
    return sizes;
}

SubsetTriple strong_usp_to_tpp(const Puzzle& u, int m, std::uint64_t materialize_cap) {
    if (m < 2) throw StructuralError("strong_usp_to_tpp: m must be >= 2");
    const std::size_t rows = u.size();
    const std::size_t k = static_cast<std::size_t>(u.width);
    WreathSpec spec{AbelianSpec{std::vector<std::int64_t>(k, m)}, IndexSet{rows, {}}};
    GroupSpec gspec{spec};

    auto sizes = strong_usp_to_tpp_sizes(u, m);
    for (const auto& s : sizes) require_materializable(s, materialize_cap, "strong_usp_to_tpp");

    std::array<std::vector<GroupElement>, 3> sets;
    for (int symbol = 1; symbol <= 3; ++symbol) {
        // Per-row choice sets: base vectors nonzero exactly on the columns
        // carrying this symbol.
        std::vector<std::vector<AbelianVec>> choices(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<std::size_t> positions;
            for (std::size_t j = 0; j < k; ++j)
                if (u.rows[r][j] == symbol) positions.push_back(j);
            for_each_supported_vector(k, positions, m, [&](const AbelianVec& v) {
                choices[r].push_back(v);
            });
        }
        sets[symbol - 1] = wreath_subset(spec, choices);
    }
    return make_triple(gspec, std::move(sets[0]), std::move(sets[1]), std::move(sets[2]));
}

// ---------------------------------------------------------------------------
// SDPP families
// ---------------------------------------------------------------------------

SubsetPairFamily build_sdpp_trivial(int n, int k) {
    if (n < 1 || k < 0) throw StructuralError("sdpp trivial: need n >= 1, k >= 0");
    std::vector<std::int64_t> moduli(static_cast<std::size_t>(k) + 1, n);
    GroupSpec gspec = abelian_group(moduli);
    std::vector<SubsetPair> pairs;
    for (int i = 0; i < n; ++i) {
        SubsetPair p;
        AbelianVec tail_only(static_cast<std::size_t>(k) + 1, 0);
        tail_only[k] = i;
        p.b.push_back(GroupElement{tail_only});
        std::vector<std::size_t> all_positions(k);
        std::iota(all_positions.begin(), all_positions.end(), 0u);
        // A_i ranges over every head vector, tail pinned to i.
        AbelianVec v(static_cast<std::size_t>(k) + 1, 0);
        v[k] = i;
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
            if (pos == static_cast<std::size_t>(k)) {
                p.a.push_back(GroupElement{v});
                return;
            }
            for (std::int64_t x = 0; x < n; ++x) {
                v[pos] = x;
                rec(pos + 1);
            }
            v[pos] = 0;
        };
        rec(0);
        pairs.push_back(std::move(p));
    }
    return make_pair_family(std::move(gspec), std::move(pairs));
}

SubsetPairFamily build_sdpp_binomial(int m, int l) {
    if (m < 2 || l < 1) throw StructuralError("sdpp binomial: need m >= 2, l >= 1");
    const std::size_t coords = 2 * static_cast<std::size_t>(l);
    GroupSpec gspec = abelian_group(std::vector<std::int64_t>(coords, m));

    // All l-subsets of the coordinate set, lexicographic.
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == static_cast<std::size_t>(l)) {
            subsets.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < coords; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);

    auto supported = [&](const std::vector<std::size_t>& positions) {
        std::vector<GroupElement> out;
        for_each_supported_vector(coords, positions, m, [&](const AbelianVec& v) {
            out.push_back(GroupElement{v});
        });
        return out;
    };

    std::vector<SubsetPair> pairs;
    for (const auto& s : subsets) {
        std::vector<std::size_t> complement;
        std::set<std::size_t> in_s(s.begin(), s.end());
        for (std::size_t i = 0; i < coords; ++i)
            if (!in_s.count(i)) complement.push_back(i);
        pairs.push_back(SubsetPair{supported(s), supported(complement)});
    }
    return make_pair_family(std::move(gspec), std::move(pairs));
}

// ---------------------------------------------------------------------------
// sdpp_to_tpp
// ---------------------------------------------------------------------------

SubsetTriple sdpp_to_tpp(const SubsetPairFamily& f, std::uint64_t materialize_cap) {
    const AbelianSpec& h = require_abelian_spec(f.group, "sdpp_to_tpp");
    const int n = static_cast<int>(f.pairs.size());
    TriangleSet tri = TriangleSet::make(n);
    const std::size_t p = tri.size();
    const std::size_t arity = h.arity();

    AbelianSpec base;
    base.moduli.reserve(arity * 3);
    for (int copy = 0; copy < 3; ++copy)
        base.moduli.insert(base.moduli.end(), h.moduli.begin(), h.moduli.end());
    WreathSpec spec{base, IndexSet{p, n}};
    GroupSpec gspec{spec};

    const AbelianVec zero(arity, 0);
    auto raw = [&](const GroupElement& e) { return std::get<AbelianVec>(e.value); };

    // Per-point triple (A_{v1} x {1} x B_{v3}, B_{v1} x A_{v2} x {1},
    // {1} x B_{v2} x A_{v3}), flattened into the 3*arity base vector.
    auto hat_choices = [&](int which) {
        std::vector<std::vector<AbelianVec>> choices(p);
        for (std::size_t i = 0; i < p; ++i) {
            const auto& v = tri.points[i];
            std::array<std::vector<AbelianVec>, 3> slots;
            auto slot_of = [&](int copy, const std::vector<GroupElement>& s) {
                for (const auto& e : s) slots[copy].push_back(raw(e));
            };
            if (which == 0) {
                slot_of(0, f.pairs[v[0]].a);
                slots[1] = {zero};
                slot_of(2, f.pairs[v[2]].b);
            } else if (which == 1) {
                slot_of(0, f.pairs[v[0]].b);
                slot_of(1, f.pairs[v[1]].a);
                slots[2] = {zero};
            } else {
                slots[0] = {zero};
                slot_of(1, f.pairs[v[1]].b);
                slot_of(2, f.pairs[v[2]].a);
            }
            for (const auto& x : slots[0])
                for (const auto& y : slots[1])
                    for (const auto& z : slots[2]) {
                        AbelianVec full;
                        full.reserve(3 * arity);
                        full.insert(full.end(), x.begin(), x.end());
                        full.insert(full.end(), y.begin(), y.end());
                        full.insert(full.end(), z.begin(), z.end());
                        choices[i].push_back(std::move(full));
                    }
        }
        return choices;
    };

    std::array<std::vector<GroupElement>, 3> sets;
    for (int which = 0; which < 3; ++which) {
        auto choices = hat_choices(which);
        require_materializable(wreath_subset_size(p, choices), materialize_cap, "sdpp_to_tpp");
        sets[which] = wreath_subset(spec, choices);
    }
    return make_triple(gspec, std::move(sets[0]), std::move(sets[1]), std::move(sets[2]));
}

AlphaBeta alpha_beta(const SubsetPairFamily& f) {
    const std::size_t n = f.pairs.size();
    if (n < 2) throw StructuralError("alpha_beta needs at least 2 pairs");
    const double log_n = std::log(static_cast<double>(n));
    double min_log_product = 0;
    bool first = true;
    for (const auto& p : f.pairs) {
        double lp = std::log(static_cast<double>(p.a.size())) +
                    std::log(static_cast<double>(p.b.size()));
        if (first || lp < min_log_product) min_log_product = lp;
        first = false;
    }
    AlphaBeta out;
    out.n = n;
    out.alpha = min_log_product / log_n;
    out.beta = Group(f.group).log_order() / log_n;
    out.inequalities_hold =
        out.alpha <= out.beta + 1e-9 && out.alpha + 2.0 <= 2.0 * out.beta + 1e-9;
    if (out.alpha > out.beta + 1e-9)
        throw InfeasibleError("alpha > beta: the family cannot satisfy the simultaneous "
                              "double product property");
    return out;
}

// ---------------------------------------------------------------------------
// STPP families
// ---------------------------------------------------------------------------

SubsetTripleFamily build_stpp_example(int n) {
    if (n < 2) throw StructuralError("stpp example: n must be >= 2");
    GroupSpec gspec = abelian_group({n, n, n});
    auto coordinate_nonzero = [&](int coord) {
        std::vector<GroupElement> out;
        for (std::int64_t v = 1; v < n; ++v) {
            AbelianVec x(3, 0);
            x[coord] = v;
            out.push_back(GroupElement{std::move(x)});
        }
        return out;
    };
    std::vector<TripleEntry> triples;
    triples.push_back(TripleEntry{coordinate_nonzero(0), coordinate_nonzero(1),
                                  coordinate_nonzero(2)});
    triples.push_back(TripleEntry{coordinate_nonzero(1), coordinate_nonzero(2),
                                  coordinate_nonzero(0)});
    return make_triple_family(std::move(gspec), std::move(triples));
}

SubsetTripleFamily local_strong_usp_to_stpp(const Puzzle& u, int l) {
    if (l < 2) throw StructuralError("local_strong_usp_to_stpp: l must be >= 2");
    if (auto w = check_local_strong_usp(u))
        throw StructuralError("local_strong_usp_to_stpp: input is not a local strong USP");
    const std::size_t k = static_cast<std::size_t>(u.width);
    GroupSpec gspec = abelian_group(std::vector<std::int64_t>(k, l));

    auto supported = [&](const std::vector<std::uint8_t>& row, int symbol) {
        std::vector<std::size_t> positions;
        for (std::size_t j = 0; j < k; ++j)
            if (row[j] == symbol) positions.push_back(j);
        std::vector<GroupElement> out;
        for_each_supported_vector(k, positions, l, [&](const AbelianVec& v) {
            out.push_back(GroupElement{v});
        });
        return out;
    };

    std::vector<TripleEntry> triples;
    for (const auto& row : u.rows)
        triples.push_back(
            TripleEntry{supported(row, 1), supported(row, 2), supported(row, 3)});
    return make_triple_family(std::move(gspec), std::move(triples));
}

Chart local_usp_chart(int l) {
    if (l < 3) throw StructuralError("local USP chart needs l >= 3");
    auto single = [](std::int64_t v) { return std::vector<AbelianVec>{{v}}; };
    std::vector<AbelianVec> hat, neg_hat;
    for (std::int64_t v = 2; v < l; ++v) hat.push_back({v});
    for (std::int64_t v = 1; v <= l - 2; ++v) neg_hat.push_back({v});
    std::map<int, std::vector<AbelianVec>> a{{1, single(0)}, {2, single(1)}, {3, hat}};
    std::map<int, std::vector<AbelianVec>> b{{1, neg_hat}, {2, single(0)}, {3, single(0)}};
    std::map<int, std::vector<AbelianVec>> c{{1, single(0)}, {2, hat}, {3, single(0)}};
    return make_chart_checked(AbelianSpec{{l}}, {1, 2, 3}, std::move(a), std::move(b),
                              std::move(c));
}

SubsetTripleFamily chart_to_stpp(const Chart& chart, const Puzzle& u) {
    if (auto w = check_chart_usp(u, chart))
        throw StructuralError("chart_to_stpp: puzzle is not a chart USP");
    const std::size_t k = static_cast<std::size_t>(u.width);
    const std::size_t arity = chart.group.arity();
    std::vector<std::int64_t> moduli;
    moduli.reserve(k * arity);
    for (std::size_t i = 0; i < k; ++i)
        moduli.insert(moduli.end(), chart.group.moduli.begin(), chart.group.moduli.end());
    GroupSpec gspec = abelian_group(moduli);

    auto product_set = [&](const std::vector<std::uint8_t>& row,
                           const std::map<int, std::vector<AbelianVec>>& mapping) {
        std::vector<std::vector<AbelianVec>> slots;
        for (std::size_t i = 0; i < k; ++i) slots.push_back(mapping.at(row[i]));
        std::vector<GroupElement> out;
        for_each_tuple(slots, [&](const std::vector<AbelianVec>& choice) {
            AbelianVec full;
            full.reserve(k * arity);
            for (const auto& part : choice) full.insert(full.end(), part.begin(), part.end());
            out.push_back(GroupElement{std::move(full)});
        });
        return out;
    };

    std::vector<TripleEntry> triples;
    for (const auto& row : u.rows)
        triples.push_back(TripleEntry{product_set(row, chart.a), product_set(row, chart.b),
                                      product_set(row, chart.c)});
    return make_triple_family(std::move(gspec), std::move(triples));
}

SubsetTriple stpp_to_tpp(const SubsetTripleFamily& f, std::uint64_t materialize_cap) {
    const AbelianSpec& h = require_abelian_spec(f.group, "stpp_to_tpp");
    const std::size_t n = f.triples.size();
    WreathSpec spec{h, IndexSet{n, {}}};
    GroupSpec gspec{spec};

    auto raw_choices = [&](int which) {
        std::vector<std::vector<AbelianVec>> choices(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& s = which == 0   ? f.triples[i].a
                            : which == 1 ? f.triples[i].b
                                         : f.triples[i].c;
            for (const auto& e : s) choices[i].push_back(std::get<AbelianVec>(e.value));
        }
        return choices;
    };

    std::array<std::vector<GroupElement>, 3> sets;
    for (int which = 0; which < 3; ++which) {
        auto choices = raw_choices(which);
        require_materializable(wreath_subset_size(n, choices), materialize_cap, "stpp_to_tpp");
        sets[which] = wreath_subset(spec, choices);
    }
    return make_triple(gspec, std::move(sets[0]), std::move(sets[1]), std::move(sets[2]));
}

// ---------------------------------------------------------------------------
// Progression-free machinery
// ---------------------------------------------------------------------------

namespace {

bool digits_are_binary_base3(int x) {
    while (x > 0) {
        if (x % 3 == 2) return false;
        x /= 3;
    }
    return true;
}

} // namespace

std::vector<int> build_no3ap_set(int n) {
    if (n < 1) throw StructuralError("no3ap: n must be >= 1");
    std::vector<int> out;
    for (int x = 1; x <= n / 2; ++x)
        if (digits_are_binary_base3(x)) out.push_back(x);
    return out;
}

bool is_3ap_free(const std::vector<int>& t) {
    std::set<int> s(t.begin(), t.end());
    for (int a : s)
        for (int b : s) {
            if (a >= b) continue;
            if (s.count(2 * b - a)) return false; // a, b, 2b-a
        }
    return true;
}

std::vector<int> max_no3ap_subset(int limit) {
    if (limit < 0 || limit > 64)
        throw ResourceLimitError("max_no3ap_subset: exact search capped at limit 64");
    std::vector<int> best, cur;
    // Branch and bound over candidates in increasing order; adding x (the
    // current maximum) only needs checking pairs a < b < x with a + x = 2b.
    std::function<void(int)> rec = [&](int next) {
        if (cur.size() + static_cast<std::size_t>(limit - next + 1) <= best.size()) return;
        if (next > limit) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        bool ok = true;
        for (std::size_t bi = 0; bi < cur.size() && ok; ++bi) {
            const int b = cur[bi];
            const int a = 2 * b - next;
            if (a >= 1 && a < b &&
                std::binary_search(cur.begin(), cur.begin() + bi, a))
                ok = false;
        }
        if (ok) {
            cur.push_back(next);
            rec(next + 1);
            cur.pop_back();
        }
        rec(next + 1);
    };
    rec(1);
    std::sort(best.begin(), best.end());
    return best;
}

std::vector<std::array<int, 3>> triangle_free_from(const TriangleSet& tri,
                                                   const std::vector<int>& t) {
    std::set<int> ts(t.begin(), t.end());
    std::vector<std::array<int, 3>> out;
    for (const auto& p : tri.points)
        if (ts.count(p[1] - p[0])) out.push_back(p);
    return out;
}

std::optional<std::array<std::array<int, 3>, 3>> find_triangle(
    const std::vector<std::array<int, 3>>& s) {
    if (s.empty()) return std::nullopt;
    const int total = s[0][0] + s[0][1] + s[0][2];
    std::set<std::array<int, 3>> members(s.begin(), s.end());
    // A triangle (u, v, w) has u1 = w1, v2 = u2, w3 = v3; inside one
    // triangular array v is determined by (u, w), so pairs suffice.
    for (const auto& u : s) {
        for (const auto& w : s) {
            if (u[0] != w[0]) continue;
            const std::array<int, 3> v{total - u[1] - w[2], u[1], w[2]};
            if (v[0] < 0 || !members.count(v)) continue;
            if (u == v && v == w) continue;
            return std::array<std::array<int, 3>, 3>{u, v, w};
        }
    }
    return std::nullopt;
}

std::vector<std::array<int, 3>> build_triangle_free(int n) {
    TriangleSet tri = TriangleSet::make(n);
    auto s = triangle_free_from(tri, build_no3ap_set(n));
    if (s.size() <= 1000) {
        if (find_triangle(s))
            throw StructuralError("triangle-free construction produced a triangle");
    }
    return s;
}

} // namespace gtmm
