#include "aqrook/boards.hpp"

#include <algorithm>
#include <numeric>

namespace aqrook {

int FerrersBoard::max_height() const {
    return heights_.empty() ? 0 : heights_.back();
}

std::vector<Cell> FerrersBoard::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= columns(); ++i)
        for (int j = 1; j <= height(i); ++j) out.push_back({i, j});
    return out;
}

int FerrersBoard::cell_count() const {
    return std::accumulate(heights_.begin(), heights_.end(), 0);
}

FerrersBoard FerrersBoard::append_column(int h) const {
    if (h < 0) throw NegativeHeight();
    if (!heights_.empty() && h < heights_.back()) throw NotFerrersAfterAppend();
    FerrersBoard out = *this;
    out.heights_.push_back(h);
    return out;
}

std::string FerrersBoard::spec_string() const {
    if (heights_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < heights_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(heights_[i]);
    }
    return out;
}

FerrersBoard ferrers(std::vector<int> heights) {
    for (std::size_t i = 0; i < heights.size(); ++i) {
        if (heights[i] < 0) throw NegativeHeight();
        if (i > 0 && heights[i] < heights[i - 1]) throw NotNondecreasing();
    }
    FerrersBoard b;
    b.heights_ = std::move(heights);
    return b;
}

FerrersBoard rectangle(int l, int m) {
    if (l < 0 || m < 0) throw InvalidFamilyParams("rectangle needs l, m >= 0");
    return ferrers(std::vector<int>(static_cast<std::size_t>(l), m));
}

FerrersBoard staircase(int n) {
    if (n < 0) throw InvalidFamilyParams("staircase needs n >= 0");
    std::vector<int> h(static_cast<std::size_t>(n));
    std::iota(h.begin(), h.end(), 0);
    return ferrers(std::move(h));
}

FerrersBoard lah_board(int n, int r) {
    if (r < 1 || r > n) throw InvalidFamilyParams("lah board needs 1 <= r <= n");
    return rectangle(n + r - 1, n - r);
}

std::vector<FerrersBoard> enumerate_ferrers(int max_cols, int max_height) {
    if (max_cols < 0 || max_height < 0)
        throw InvalidFamilyParams("enumeration bounds must be >= 0");
    std::vector<FerrersBoard> out;
    // Column count major, lexicographic within one count.
    for (int len = 0; len <= max_cols; ++len) {
        std::vector<int> hs;
        auto fill = [&](auto&& self, int pos, int lo) -> void {
            if (pos == len) {
                out.push_back(ferrers(hs));
                return;
            }
            for (int h = lo; h <= max_height; ++h) {
                hs.push_back(h);
                self(self, pos + 1, h);
                hs.pop_back();
            }
        };
        fill(fill, 0, 0);
    }
    return out;
}

std::vector<Cell> ShiftedBoard::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= 2 * n_ - 1; ++i)
        for (int j = 1; j <= arm(i); ++j) out.push_back({i + j, i});  // col = i + j, row = i
    return out;
}

int ShiftedBoard::cell_count() const {
    return std::accumulate(arms_.begin(), arms_.end(), 0);
}

std::string ShiftedBoard::spec_string() const {
    std::string out = std::to_string(n_) + ":";
    for (std::size_t i = 0; i < arms_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(arms_[i]);
    }
    return out;
}

ShiftedBoard shifted(std::vector<int> arms, int n) {
    if (n < 1) throw InvalidFamilyParams("shifted board needs n >= 1");
    if (arms.size() != static_cast<std::size_t>(2 * n - 1))
        throw InvalidFamilyParams("shifted board needs 2n-1 arms");
    int prev = 2 * n - 1;
    bool prev_nonzero = true;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        int a = arms[static_cast<std::size_t>(i - 1)];
        if (a < 0) throw NegativeHeight("arms must be nonnegative");
        if (a > 2 * n - i) throw InvalidFamilyParams("arm exceeds the staircase");
        if (a > prev) throw NotNondecreasing("arms must be weakly decreasing");
        if (a != 0 && a == prev && i > 1 && prev_nonzero)
            throw NotNondecreasing("nonzero arms must be strictly decreasing");
        prev_nonzero = a != 0;
        prev = a;
    }
    ShiftedBoard b;
    b.arms_ = std::move(arms);
    b.n_ = n;
    return b;
}

ShiftedBoard matching_full(int n) {
    if (n < 1) throw InvalidFamilyParams("full matching board needs n >= 1");
    std::vector<int> arms(static_cast<std::size_t>(2 * n - 1));
    for (int i = 1; i <= 2 * n - 1; ++i) arms[static_cast<std::size_t>(i - 1)] = 2 * n - i;
    return shifted(std::move(arms), n);
}

std::vector<ShiftedBoard> enumerate_shifted(int n_max) {
    if (n_max < 1) throw InvalidFamilyParams("enumeration needs n_max >= 1");
    std::vector<ShiftedBoard> out;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int> arms;
        auto rec = [&](auto&& self, int row) -> void {
            if (row > 2 * n - 1) {
                out.push_back(shifted(arms, n));
                return;
            }
            int prev = row == 1 ? 2 * n - 1 : arms.back();
            // Zero is always allowed; a nonzero arm must be strictly below the
            // previous nonzero one and fit inside the staircase.
            arms.push_back(0);
            self(self, row + 1);
            arms.pop_back();
            if (prev > 0) {
                int hi = std::min(row == 1 ? 2 * n - 1 : prev - 1, 2 * n - row);
                for (int a = 1; a <= hi; ++a) {
                    arms.push_back(a);
                    self(self, row + 1);
                    arms.pop_back();
                }
            }
        };
        rec(rec, 1);
    }
    return out;
}

FerrersBoard parse_board_spec(const std::string& spec) {
    if (spec.empty() || spec == "-") return FerrersBoard();
    std::vector<int> heights;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string part = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            int h = std::stoi(part, &used);
            if (used != part.size()) throw ParseError("bad height: " + part);
            heights.push_back(h);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad board spec: " + spec);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ferrers(std::move(heights));
}

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& ctx) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw ParseError("bad number in " + ctx);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad number in " + ctx);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

AnyBoard parse_family_spec(const std::string& spec) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("bad family spec: " + spec);
    std::string name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (name == "rect") {
        auto v = parse_int_list(rest, spec);
        if (v.size() != 2) throw ParseError("rect needs l,m");
        return rectangle(v[0], v[1]);
    }
    if (name == "stair") {
        auto v = parse_int_list(rest, spec);
        if (v.size() != 1) throw ParseError("stair needs n");
        return staircase(v[0]);
    }
    if (name == "lah") {
        auto v = parse_int_list(rest, spec);
        if (v.size() != 2) throw ParseError("lah needs n,r");
        return lah_board(v[0], v[1]);
    }
    if (name == "matchfull") {
        auto v = parse_int_list(rest, spec);
        if (v.size() != 1) throw ParseError("matchfull needs n");
        return matching_full(v[0]);
    }
    if (name == "shifted") {
        std::size_t colon2 = rest.find(':');
        if (colon2 == std::string::npos) throw ParseError("shifted needs n:a1,...");
        auto nv = parse_int_list(rest.substr(0, colon2), spec);
        if (nv.size() != 1) throw ParseError("shifted needs n:a1,...");
        return shifted(parse_int_list(rest.substr(colon2 + 1), spec), nv[0]);
    }
    throw ParseError("unknown family: " + name);
}

}  // namespace aqrook
