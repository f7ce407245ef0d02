#include "aqrook/placements.hpp"

#include <algorithm>

namespace aqrook {

bool Placement::contains(const Cell& c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

std::vector<Placement> nonattacking(const FerrersBoard& board, int k) {
    std::vector<Placement> out;
    if (k < 0) return out;
    const int n = board.columns();
    std::vector<Cell> chosen;
    std::vector<bool> row_used(static_cast<std::size_t>(board.max_height()) + 1, false);
    auto rec = [&](auto&& self, int col, int left) -> void {
        if (left == 0) {
            out.push_back({chosen, Model::nonattacking});
            return;
        }
        if (col > n || n - col + 1 < left) return;
        for (int row = 1; row <= board.height(col); ++row) {
            if (row_used[static_cast<std::size_t>(row)]) continue;
            row_used[static_cast<std::size_t>(row)] = true;
            chosen.push_back({col, row});
            self(self, col + 1, left - 1);
            chosen.pop_back();
            row_used[static_cast<std::size_t>(row)] = false;
        }
        self(self, col + 1, left);  // no rook in this column
    };
    rec(rec, 1, k);
    return out;
}

std::vector<Placement> file_placements(const FerrersBoard& board, int k) {
    std::vector<Placement> out;
    if (k < 0) return out;
    const int n = board.columns();
    std::vector<Cell> chosen;
    auto rec = [&](auto&& self, int col, int left) -> void {
        if (left == 0) {
            out.push_back({chosen, Model::file});
            return;
        }
        if (col > n || n - col + 1 < left) return;
        for (int row = 1; row <= board.height(col); ++row) {
            chosen.push_back({col, row});
            self(self, col + 1, left - 1);
            chosen.pop_back();
        }
        self(self, col + 1, left);
    };
    rec(rec, 1, k);
    return out;
}

std::vector<Placement> matchings(const ShiftedBoard& board, int k) {
    return matchings_in(board.cells(), board.vertices(), k);
}

std::vector<Placement> matchings_in(const std::vector<Cell>& all, int vertices, int k) {
    std::vector<Placement> out;
    if (k < 0) return out;
    // Cells come in (row, col) order; keep placements sorted by (col, row)
    // like every other model.
    std::vector<Cell> chosen;
    std::vector<bool> vertex_used(static_cast<std::size_t>(vertices) + 1, false);
    auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
        if (left == 0) {
            Placement p{chosen, Model::matching};
            std::sort(p.cells.begin(), p.cells.end());
            out.push_back(std::move(p));
            return;
        }
        if (idx >= all.size() || all.size() - idx < static_cast<std::size_t>(left)) return;
        const Cell& c = all[idx];
        if (!vertex_used[static_cast<std::size_t>(c.row)] &&
            !vertex_used[static_cast<std::size_t>(c.col)]) {
            vertex_used[static_cast<std::size_t>(c.row)] = true;
            vertex_used[static_cast<std::size_t>(c.col)] = true;
            chosen.push_back(c);
            self(self, idx + 1, left - 1);
            chosen.pop_back();
            vertex_used[static_cast<std::size_t>(c.row)] = false;
            vertex_used[static_cast<std::size_t>(c.col)] = false;
        }
        self(self, idx + 1, left);
    };
    rec(rec, 0, k);
    return out;
}

std::vector<Cell> uncancelled_standard(const FerrersBoard& board, const Placement& p) {
    std::vector<Cell> out;
    for (const Cell& c : board.cells()) {
        if (p.contains(c)) continue;
        bool cancelled = false;
        for (const Cell& r : p.cells) {
            // Right of a rook in its row, or below a rook in its column.
            if ((r.row == c.row && r.col < c.col) || (r.col == c.col && r.row > c.row)) {
                cancelled = true;
                break;
            }
        }
        if (!cancelled) out.push_back(c);
    }
    return out;
}

int nw_rooks(const Placement& p, const Cell& c) {
    int count = 0;
    for (const Cell& r : p.cells)
        if (r.col < c.col && r.row > c.row) ++count;
    return count;
}

AlphaStats alpha_stats(const Placement& p, const Cell& c) {
    AlphaStats st;
    for (const Cell& r : p.cells) {
        if (r.row == c.row && r.col < c.col) ++st.v;
        if (r.col < c.col && r.row > c.row) ++st.r_nw;
        if (r.col == c.col && r.row > c.row) st.below_rook = true;
    }
    return st;
}

std::vector<Cell> uncancelled_matching(const ShiftedBoard& board, const Placement& p) {
    return uncancelled_matching_in(board.cells(), p);
}

std::vector<Cell> uncancelled_matching_in(const std::vector<Cell>& cells, const Placement& p) {
    std::vector<Cell> out;
    for (const Cell& c : cells) {
        const int i = c.row, j = c.col;
        bool skip = p.contains(c);
        for (const Cell& rk : p.cells) {
            if (skip) break;
            const int ri = rk.row, rj = rk.col;
            // (ri, rj) cancels the in-row segment (ri, s), ri < s < rj, and
            // the column tails (t, rj), (t, ri) with t < ri.
            if ((ri == i && i < j && j < rj) || (rj == j && i < ri) || (ri == j && i < ri)) {
                skip = true;
            }
        }
        if (!skip) out.push_back(c);
    }
    return out;
}

MatchingStats matching_stats(const ShiftedBoard& board, const Placement& p, const Cell& c) {
    (void)board;
    return matching_stats(p, c);
}

MatchingStats matching_stats(const Placement& p, const Cell& c) {
    MatchingStats st;
    const int i = c.row, j = c.col;
    for (const Cell& rk : p.cells) {
        const int ri = rk.row, rj = rk.col;
        if (ri <= i) continue;  // south-east means strictly below
        if (ri > j)
            ++st.r;  // both cancelled columns (ri and rj) lie right of column j
        else if (j < rj)
            ++st.s;  // only rj lies right of column j
    }
    return st;
}

}  // namespace aqrook
