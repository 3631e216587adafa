#include "gtmm/puzzles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace gtmm {

Puzzle Puzzle::from_rows(std::vector<std::vector<std::uint8_t>> rows,
                         const std::vector<int>& alphabet) {
    if (rows.empty()) throw StructuralError("puzzle must have at least one row");
    const std::size_t k = rows[0].size();
    if (k == 0) throw StructuralError("puzzle width must be >= 1");
    for (const auto& r : rows) {
        if (r.size() != k) throw StructuralError("puzzle rows must have equal width");
        for (auto v : r)
            if (std::find(alphabet.begin(), alphabet.end(), static_cast<int>(v)) ==
                alphabet.end())
                throw StructuralError("puzzle entry outside alphabet: " + std::to_string(v));
    }
    std::sort(rows.begin(), rows.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end())
        throw StructuralError("puzzle rows must be distinct");
    Puzzle u;
    u.width = static_cast<int>(k);
    u.rows = std::move(rows);
    return u;
}

Puzzle parse_puzzle(std::istream& in) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<std::uint8_t> row;
        for (char ch : line) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch < '1' || ch > '9') throw StructuralError("bad puzzle character");
            row.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return Puzzle::from_rows(std::move(rows));
}

Puzzle parse_puzzle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open puzzle file: " + path);
    return parse_puzzle(in);
}

std::string format_puzzle(const Puzzle& u) {
    std::ostringstream out;
    for (const auto& r : u.rows) {
        for (auto v : r) out << static_cast<int>(v);
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Global checkers
// ---------------------------------------------------------------------------

namespace {

std::uint64_t factorial_or_throw(std::size_t n, std::uint64_t cap, const char* what) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        if (f > cap / i)
            throw ResourceLimitError(std::string(what) + ": " + std::to_string(n) +
                                     "! exceeds cap " + std::to_string(cap));
        f *= i;
    }
    return f;
}

/// Shared engine for the USP and strong-USP checkers.  The definition
/// quantifies over (pi1, pi2, pi3); the predicate depends only on
/// (pi1 pi3^{-1}, pi2 pi3^{-1}) after substituting the row pi3(u), so two
/// nested permutations suffice.
CheckResult check_usp_impl(const Puzzle& u, bool exactly_two, std::size_t naive_cap,
                           const char* property) {
    const std::size_t n = u.size();
    if (n > naive_cap)
        throw ResourceLimitError(std::string(property) +
                                 ": puzzle too large for the naive checker (" +
                                 std::to_string(n) + " rows > cap " + std::to_string(naive_cap) +
                                 "); use the structural or local checkers");
    const int k = u.width;
    std::vector<std::uint32_t> id(n);
    std::iota(id.begin(), id.end(), 0u);
    auto satisfied = [&](const std::vector<std::uint32_t>& p1,
                         const std::vector<std::uint32_t>& p2) {
        for (std::size_t v = 0; v < n; ++v) {
            const auto& r1 = u.rows[p1[v]];
            const auto& r2 = u.rows[p2[v]];
            const auto& r3 = u.rows[v];
            for (int i = 0; i < k; ++i) {
                int count = (r1[i] == 1) + (r2[i] == 2) + (r3[i] == 3);
                if (exactly_two ? count == 2 : count >= 2) return true;
            }
        }
        return false;
    };
    std::vector<std::uint32_t> s1 = id, s2 = id;
    do {
        s2 = id;
        do {
            if (s1 == id && s2 == id) continue;
            if (!satisfied(s1, s2)) {
                Witness w;
                w.property = property;
                w.data = PermTripleWitness{s1, s2, id};
                return w;
            }
        } while (std::next_permutation(s2.begin(), s2.end()));
    } while (std::next_permutation(s1.begin(), s1.end()));
    return std::nullopt;
}

} // namespace

CheckResult check_usp(const Puzzle& u, std::size_t naive_cap) {
    return check_usp_impl(u, false, naive_cap, "usp");
}

CheckResult check_strong_usp(const Puzzle& u, std::size_t naive_cap) {
    return check_usp_impl(u, true, naive_cap, "strong-usp");
}

CheckResult check_two_symbol_structure(const Puzzle& u, Budget& budget) {
    const std::size_t n = u.size();
    const int k = u.width;
    std::vector<std::set<int>> column_symbols(k);
    for (const auto& r : u.rows)
        for (int i = 0; i < k; ++i) column_symbols[i].insert(r[i]);
    for (int i = 0; i < k; ++i)
        if (column_symbols[i].size() > 2)
            throw UnsupportedError("two-symbol structure check: column " + std::to_string(i) +
                                   " uses three symbols");

    // Subgroup of Sym(U) preserving every column whose symbols lie in `pair`:
    // the direct product of symmetric groups on the classes of rows with
    // identical restriction to those columns.
    auto subgroup = [&](std::set<int> pair) {
        std::vector<int> cols;
        for (int i = 0; i < k; ++i)
            if (std::includes(pair.begin(), pair.end(), column_symbols[i].begin(),
                              column_symbols[i].end()))
                cols.push_back(i);
        std::map<std::vector<std::uint8_t>, std::vector<std::uint32_t>> classes;
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<std::uint8_t> key;
            key.reserve(cols.size());
            for (int i : cols) key.push_back(u.rows[r][i]);
            classes[std::move(key)].push_back(static_cast<std::uint32_t>(r));
        }
        std::vector<std::vector<std::uint32_t>> classlist;
        for (const auto& [key, members] : classes) classlist.push_back(members);
        return class_preserving_permutations(classlist, n);
    };

    SubsetTriple t = make_triple(symmetric_group(n), subgroup({1, 2}), subgroup({2, 3}),
                                 subgroup({1, 3}));
    auto tw = check_tpp(t, budget);
    if (!tw) return std::nullopt;

    // Map the subgroup violation h1 h2 h3 = 1 back to row permutations
    // (pi1, pi2, pi3) = (h1 h2, h2, id) violating the puzzle property.
    const auto& pw = std::get<ProductWitness>(tw->data);
    Group sym(t.group);
    GroupElement h1 = sym.mul(pw.factors[0].numer, sym.inv(pw.factors[0].denom));
    GroupElement h2 = sym.mul(pw.factors[1].numer, sym.inv(pw.factors[1].denom));
    Witness w;
    w.property = "two-symbol-structure";
    w.data = PermTripleWitness{std::get<Perm>(sym.mul(h1, h2).value).map,
                               std::get<Perm>(h2.value).map,
                               Perm::identity(n).map};
    return w;
}

// ---------------------------------------------------------------------------
// Local checkers
// ---------------------------------------------------------------------------

const std::set<SymbolTriple>& local_strong_allowed_triples() {
    static const std::set<SymbolTriple> table = {
        {1, 2, 1}, {1, 2, 2}, {1, 1, 3}, {1, 3, 3}, {2, 2, 3}, {3, 2, 3}};
    return table;
}

const std::set<SymbolTriple>& local_usp_allowed_triples() {
    static const std::set<SymbolTriple> table = [] {
        auto t = local_strong_allowed_triples();
        t.insert({1, 2, 3});
        return t;
    }();
    return table;
}

namespace {

CheckResult check_row_triples(const Puzzle& u, const std::set<SymbolTriple>& allowed,
                              const char* property) {
    const std::size_t n = u.size();
    const int k = u.width;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (a == b && b == c) continue;
                bool ok = false;
                for (int i = 0; i < k && !ok; ++i)
                    ok = allowed.count({u.rows[a][i], u.rows[b][i], u.rows[c][i]}) > 0;
                if (!ok) {
                    Witness w;
                    w.property = property;
                    w.data = RowTripleWitness{u.rows[a], u.rows[b], u.rows[c]};
                    return w;
                }
            }
    return std::nullopt;
}

} // namespace

CheckResult check_local_strong_usp(const Puzzle& u) {
    return check_row_triples(u, local_strong_allowed_triples(), "local-strong-usp");
}

CheckResult check_local_usp(const Puzzle& u) {
    return check_row_triples(u, local_usp_allowed_triples(), "local-usp");
}

Puzzle strong_to_local(const Puzzle& u, std::uint64_t row_cap) {
    const std::size_t n = u.size();
    factorial_or_throw(n, row_cap, "strong_to_local");
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::vector<std::uint8_t>> rows;
    do {
        std::vector<std::uint8_t> row;
        row.reserve(n * static_cast<std::size_t>(u.width));
        for (std::size_t slot = 0; slot < n; ++slot) {
            const auto& src = u.rows[perm[slot]];
            row.insert(row.end(), src.begin(), src.end());
        }
        rows.push_back(std::move(row));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Puzzle::from_rows(std::move(rows));
}

// ---------------------------------------------------------------------------
// Charts
// ---------------------------------------------------------------------------

namespace {

std::vector<GroupElement> to_elements(const std::vector<AbelianVec>& vs) {
    std::vector<GroupElement> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(GroupElement{v});
    return out;
}

} // namespace

Chart make_chart_checked(AbelianSpec group, std::vector<int> symbols,
                         std::map<int, std::vector<AbelianVec>> a,
                         std::map<int, std::vector<AbelianVec>> b,
                         std::map<int, std::vector<AbelianVec>> c) {
    Chart chart{std::move(group), std::move(symbols), std::move(a), std::move(b), std::move(c)};
    GroupSpec spec{chart.group};
    Budget budget;
    for (int x : chart.symbols) {
        if (!chart.a.count(x) || !chart.b.count(x) || !chart.c.count(x))
            throw StructuralError("chart maps must cover every symbol");
        SubsetTriple t = make_triple(spec, to_elements(chart.a.at(x)),
                                     to_elements(chart.b.at(x)), to_elements(chart.c.at(x)));
        if (check_tpp(t, budget))
            throw StructuralError("chart symbol " + std::to_string(x) +
                                  " fails the triple product property");
    }
    return chart;
}

std::set<SymbolTriple> chart_allowed_triples(const Chart& chart) {
    Group group{GroupSpec{chart.group}};
    std::set<SymbolTriple> allowed;
    // Incrementally accumulate the attainable sum set; alternate signs follow
    // A(x)-A(y)+B(y)-B(z)+C(z)-C(x).
    auto grow = [&](const std::unordered_set<GroupElement, ElementHash>& acc,
                    const std::vector<AbelianVec>& s, bool negate) {
        std::unordered_set<GroupElement, ElementHash> next;
        for (const auto& base : acc)
            for (const auto& v : s) {
                GroupElement e{v};
                next.insert(group.mul(base, negate ? group.inv(e) : e));
            }
        return next;
    };
    for (int x : chart.symbols)
        for (int y : chart.symbols)
            for (int z : chart.symbols) {
                std::unordered_set<GroupElement, ElementHash> acc{group.identity()};
                acc = grow(acc, chart.a.at(x), false);
                acc = grow(acc, chart.a.at(y), true);
                acc = grow(acc, chart.b.at(y), false);
                acc = grow(acc, chart.b.at(z), true);
                acc = grow(acc, chart.c.at(z), false);
                acc = grow(acc, chart.c.at(x), true);
                if (!acc.count(group.identity())) allowed.insert({x, y, z});
            }
    return allowed;
}

CheckResult check_chart_usp(const Puzzle& u, const Chart& chart) {
    for (const auto& r : u.rows)
        for (auto v : r)
            if (std::find(chart.symbols.begin(), chart.symbols.end(), static_cast<int>(v)) ==
                chart.symbols.end())
                throw StructuralError("puzzle symbol outside chart alphabet");
    return check_row_triples(u, chart_allowed_triples(chart), "chart-usp");
}

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

PieceReport piece_multiset(const Puzzle& u) {
    PieceReport report;
    for (int symbol = 1; symbol <= 3; ++symbol) {
        std::map<std::vector<int>, std::size_t> seen;
        for (std::size_t r = 0; r < u.size(); ++r) {
            std::vector<int> piece;
            for (int i = 0; i < u.width; ++i)
                if (u.rows[r][i] == symbol) piece.push_back(i);
            auto [it, fresh] = seen.try_emplace(piece, r);
            if (!fresh)
                report.duplicates.push_back(DuplicatePiece{symbol, it->second, r, piece});
        }
    }
    return report;
}

double capacity_rate(const Puzzle& u) {
    return std::pow(static_cast<double>(u.size()), 1.0 / static_cast<double>(u.width));
}

} // namespace gtmm
