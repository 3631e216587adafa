#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gtmm/properties.hpp"

namespace gtmm {

/// A set of distinct rows over the alphabet {1,2,3} (or chart symbols) with
/// fixed width.  Rows are stored sorted; row order carries no meaning.
struct Puzzle {
    int width = 0;
    std::vector<std::vector<std::uint8_t>> rows;

    std::size_t size() const { return rows.size(); }

    /// Validates entries against `alphabet`, sorts rows, rejects duplicates.
    static Puzzle from_rows(std::vector<std::vector<std::uint8_t>> rows,
                            const std::vector<int>& alphabet = {1, 2, 3});
};

/// Text format: one row per line, symbol characters, '#' comments, blank
/// lines ignored, duplicates rejected.
Puzzle parse_puzzle(std::istream& in);
Puzzle parse_puzzle_file(const std::string& path);
std::string format_puzzle(const Puzzle& u);

// ---------------------------------------------------------------------------
// Global checkers (permutation quantifier)
// ---------------------------------------------------------------------------

constexpr std::size_t default_usp_naive_cap = 6;

/// Uniquely solvable puzzle: every non-identity permutation triple admits a
/// (row, column) where at least two of the three symbol conditions hold.
/// The quantifier is reduced from Sym(U)^3 to Sym(U)^2 (right-translation
/// invariance), so the cap applies to |U|! squared.
CheckResult check_usp(const Puzzle& u, std::size_t naive_cap = default_usp_naive_cap);

/// Strong variant: exactly two of the three conditions must hold.
CheckResult check_strong_usp(const Puzzle& u, std::size_t naive_cap = default_usp_naive_cap);

/// Structural check for puzzles using at most two symbols per column: builds
/// the three column-preserving subgroups of Sym(U) and runs the triple
/// product property on them.  True implies the puzzle is a strong USP.
CheckResult check_two_symbol_structure(const Puzzle& u, Budget& budget);

// ---------------------------------------------------------------------------
// Local checkers (row-triple quantifier)
// ---------------------------------------------------------------------------

using SymbolTriple = std::array<int, 3>;

const std::set<SymbolTriple>& local_strong_allowed_triples();
const std::set<SymbolTriple>& local_usp_allowed_triples();

/// Local strong USP: every ordered row triple, not all equal, has a
/// coordinate whose symbol triple is allowed.  Cost O(|U|^3 k).
CheckResult check_local_strong_usp(const Puzzle& u);
CheckResult check_local_usp(const Puzzle& u);

/// Expands a strong USP of size s and width k into a local strong USP of
/// size s! and width s*k (rows are concatenations over all row orderings).
Puzzle strong_to_local(const Puzzle& u, std::uint64_t row_cap = 40320);

// ---------------------------------------------------------------------------
// Charts
// ---------------------------------------------------------------------------

/// Symbol set with three maps into subsets of an abelian group; each symbol
/// carries a triple satisfying the triple product property.
struct Chart {
    AbelianSpec group;
    std::vector<int> symbols;
    std::map<int, std::vector<AbelianVec>> a, b, c;
};

/// Validates the per-symbol TPP invariant.
Chart make_chart_checked(AbelianSpec group, std::vector<int> symbols,
                         std::map<int, std::vector<AbelianVec>> a,
                         std::map<int, std::vector<AbelianVec>> b,
                         std::map<int, std::vector<AbelianVec>> c);

/// The allowed-triple set: (x,y,z) such that 0 is not attainable in
/// A(x)-A(y)+B(y)-B(z)+C(z)-C(x).
std::set<SymbolTriple> chart_allowed_triples(const Chart& chart);

/// Row-triple check against chart_allowed_triples.
CheckResult check_chart_usp(const Puzzle& u, const Chart& chart);

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

/// A duplicate puzzle piece: two rows with identical positions of `symbol`.
struct DuplicatePiece {
    int symbol;
    std::size_t row1, row2;
    std::vector<int> positions;
};

struct PieceReport {
    std::vector<DuplicatePiece> duplicates;
    bool ok() const { return duplicates.empty(); }
};

/// A USP can have no repeated pieces; reports all duplicates found.
PieceReport piece_multiset(const Puzzle& u);

/// |U|^{1/k}, the growth rate this puzzle witnesses for the capacity.
double capacity_rate(const Puzzle& u);

} // namespace gtmm
