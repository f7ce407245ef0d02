#pragma once

#include <vector>

#include "aqrook/boards.hpp"

namespace aqrook {

enum class Model { nonattacking, file, matching };

/// A rook placement: a set of cells tagged with its model. Cells are kept
/// sorted; placements are generated in lexicographic cell order.
struct Placement {
    std::vector<Cell> cells;
    Model model = Model::nonattacking;

    int size() const { return static_cast<int>(cells.size()); }
    bool contains(const Cell& c) const;
};

/// All placements of k rooks with pairwise distinct rows and columns.
std::vector<Placement> nonattacking(const FerrersBoard& board, int k);

/// All placements of k rooks with pairwise distinct columns (rows may repeat).
std::vector<Placement> file_placements(const FerrersBoard& board, int k);

/// All k-edge partial matchings drawn inside the shifted board: cells
/// (i, j), i < j, pairwise vertex-disjoint.
std::vector<Placement> matchings(const ShiftedBoard& board, int k);

/// Same over an explicit cell set on vertices 1..vertices; lets the
/// matching recursion work with full boards on an odd vertex count.
std::vector<Placement> matchings_in(const std::vector<Cell>& cells, int vertices, int k);

/// Standard-model uncancelled cells: board cells that hold no rook, are not
/// right of a rook in its row, and not below a rook in its column.
std::vector<Cell> uncancelled_standard(const FerrersBoard& board, const Placement& p);

/// Rooks strictly north-west of c: column < c.col and row > c.row.
int nw_rooks(const Placement& p, const Cell& c);

struct AlphaStats {
    int v = 0;            // rooks strictly left of c in c's row
    int r_nw = 0;         // rooks strictly north-west of c
    bool below_rook = false;  // a rook sits above c in c's column
};
AlphaStats alpha_stats(const Placement& p, const Cell& c);

/// Matching-model uncancelled cells. A rook (i, j) cancels the in-row
/// segment (i, s) with i < s < j and the column tails (t, j), (t, i) with
/// t < i.
std::vector<Cell> uncancelled_matching(const ShiftedBoard& board, const Placement& p);
std::vector<Cell> uncancelled_matching_in(const std::vector<Cell>& cells, const Placement& p);

struct MatchingStats {
    int r = 0;  // rooks below c whose both cancelled columns lie right of c's column
    int s = 0;  // rooks below c with exactly one cancelled column right of c's column
};
/// For cell c = (row i, col j): a rook (i', j') with i' > i counts toward r
/// when i' > j and toward s when i' <= j < j'.
MatchingStats matching_stats(const Placement& p, const Cell& c);
MatchingStats matching_stats(const ShiftedBoard& board, const Placement& p, const Cell& c);

}  // namespace aqrook
