#pragma once

#include <string>
#include <variant>
#include <vector>

#include "aqrook/errors.hpp"

namespace aqrook {

/// One board square. For Ferrers boards (col, row) with rows counted from
/// the bottom; for shifted boards the pair means column j = col, row i = row
/// with row < col.
struct Cell {
    int col = 0;
    int row = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend bool operator<(const Cell& x, const Cell& y) {
        if (x.col != y.col) return x.col < y.col;
        return x.row < y.row;
    }
};

/**
 * Ferrers board B(b_1, ..., b_n): column i holds the cells (i, 1..b_i) and
 * the heights are nondecreasing. Height-zero columns are retained; they
 * carry no cells but do contribute a factor to the product formulas.
 */
class FerrersBoard {
public:
    FerrersBoard() = default;  // empty board

    int columns() const { return static_cast<int>(heights_.size()); }
    int height(int col) const { return heights_[static_cast<std::size_t>(col - 1)]; }
    int max_height() const;
    const std::vector<int>& heights() const { return heights_; }

    /// Cells in (col, row) lexicographic order.
    std::vector<Cell> cells() const;
    int cell_count() const;

    /// Board with one column of the given height appended on the right.
    /// Throws NotFerrersAfterAppend if that breaks monotonicity.
    FerrersBoard append_column(int height) const;

    std::string spec_string() const;  // "0,1,2"; "-" for the empty board

    friend bool operator==(const FerrersBoard&, const FerrersBoard&) = default;
    friend FerrersBoard ferrers(std::vector<int> heights);

private:
    std::vector<int> heights_;
};

/// Validated constructor. Throws NegativeHeight / NotNondecreasing.
FerrersBoard ferrers(std::vector<int> heights);

/// [l] x [m]: l columns of height m.
FerrersBoard rectangle(int l, int m);

/// Staircase St_n = B(0, 1, ..., n-1).
FerrersBoard staircase(int n);

/// Restricted Lah board [n+r-1] x [n-r]; requires 1 <= r <= n.
FerrersBoard lah_board(int n, int r);

/// All Ferrers boards with at most max_cols columns and heights at most
/// max_height, ordered by column count then lexicographically.
std::vector<FerrersBoard> enumerate_ferrers(int max_cols, int max_height);

/**
 * Shifted Ferrers board inside the staircase on vertices 1..2n: row i holds
 * the cells (i, i+1 .. i+a_i). Arms are weakly decreasing, nonzero arms
 * strictly decreasing, and a_i <= 2n - i. The vertex-count parameter n is
 * stored explicitly because trailing zero arms leave it ambiguous and the
 * matching weights depend on it.
 */
class ShiftedBoard {
public:
    ShiftedBoard() = default;

    int n() const { return n_; }
    int vertices() const { return 2 * n_; }
    int arm(int row) const { return arms_[static_cast<std::size_t>(row - 1)]; }
    const std::vector<int>& arms() const { return arms_; }

    /// Cells (row i, column j) in (row, col) lexicographic order,
    /// returned as Cell{col = j, row = i}.
    std::vector<Cell> cells() const;
    int cell_count() const;

    std::string spec_string() const;  // "n:a1,...,a_{2n-1}"

    friend bool operator==(const ShiftedBoard&, const ShiftedBoard&) = default;
    friend ShiftedBoard shifted(std::vector<int> arms, int n);

private:
    std::vector<int> arms_;
    int n_ = 0;
};

/// Validated constructor; arms must have length 2n-1.
ShiftedBoard shifted(std::vector<int> arms, int n);

/// Full board B_{2n} = B(2n-1, 2n-2, ..., 1); requires n >= 1.
ShiftedBoard matching_full(int n);

/// All valid shifted boards for every 1 <= n <= n_max.
std::vector<ShiftedBoard> enumerate_shifted(int n_max);

using AnyBoard = std::variant<FerrersBoard, ShiftedBoard>;

/// Comma-separated column heights, e.g. "0,1,2". Empty string or "-" gives
/// the empty board.
FerrersBoard parse_board_spec(const std::string& spec);

/// "rect:l,m" | "stair:n" | "lah:n,r" | "matchfull:n" | "shifted:n:a1,...".
AnyBoard parse_family_spec(const std::string& spec);

}  // namespace aqrook
