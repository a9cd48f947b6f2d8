#include "apd/consecutive_ones.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <vector>

// The recognizer works per connected component of the strict-overlap graph on
// distinct rows (rows A, B strictly overlap when A∩B, A\B and B\A are all
// non-empty). Within such a component the admissible column arrangement is
// unique up to reversal and can be represented as an ordered sequence of
// "cells": maximal column groups no placed row separates. Rows are attached
// one by one along overlap edges, each attachment only splitting the two
// boundary cells and/or appending fresh columns at an end; any other demand
// proves the matrix is not C1P. Components nest laminarly (a smaller
// component always fits inside one cell of any larger one touching it), so a
// final pass slots component layouts into their parent cells and appends
// unconstrained columns.

namespace apd {

namespace {

struct Component {
    std::vector<std::vector<int>> cells;
    std::vector<int> support;  // all columns placed by this component
    int min_col = 0;
};

class ComponentBuilder {
public:
    ComponentBuilder(std::size_t cols) : col_cell_(cols, -1), col_epoch_(cols, -1) {}

    void start(int epoch, const std::vector<int>& first_row) {
        epoch_ = epoch;
        cells_.clear();
        cells_.push_back(first_row);
        for (int c : first_row) stamp(c, 0);
    }

    bool cell_of(int col, int& out) const {
        if (col_epoch_[static_cast<std::size_t>(col)] != epoch_) return false;
        out = col_cell_[static_cast<std::size_t>(col)];
        return true;
    }

    // Attach row B (given as a sorted column list). Returns false when the
    // attachment is impossible, i.e. the matrix is not C1P.
    bool place(const std::vector<int>& row) {
        std::vector<int> fresh;
        std::unordered_map<int, int> touched;  // cell index -> #row columns in it
        for (int c : row) {
            int idx;
            if (cell_of(c, idx))
                ++touched[idx];
            else
                fresh.push_back(c);
        }
        if (touched.empty()) return false;  // unreachable: B shares a column with a placed row
        int lo = touched.begin()->first, hi = lo;
        for (auto& [idx, cnt] : touched) {
            lo = std::min(lo, idx);
            hi = std::max(hi, idx);
        }
        // touched cells must be a consecutive run with interior cells fully inside
        for (int idx = lo; idx <= hi; ++idx) {
            auto it = touched.find(idx);
            if (it == touched.end()) return false;
            bool full = it->second == static_cast<int>(cells_[static_cast<std::size_t>(idx)].size());
            if (idx != lo && idx != hi && !full) return false;
        }
        const int last = static_cast<int>(cells_.size()) - 1;
        const bool lo_full =
            touched[lo] == static_cast<int>(cells_[static_cast<std::size_t>(lo)].size());
        const bool hi_full =
            touched[hi] == static_cast<int>(cells_[static_cast<std::size_t>(hi)].size());

        if (fresh.empty()) {
            if (lo == hi) return false;  // row nested in one cell: no strict overlap
            // orient partial boundary cells away from the row's span
            if (!hi_full) split(hi, row, /*in_first=*/true);
            if (!lo_full) split(lo, row, /*in_first=*/false);
            return true;
        }

        const bool right_ok = hi == last && (lo == hi || hi_full);
        const bool left_ok = lo == 0 && (lo == hi || lo_full);
        if (right_ok) {
            if (!lo_full) split(lo, row, /*in_first=*/false);
            append_cell(fresh);
        } else if (left_ok) {
            if (!hi_full) split(hi, row, /*in_first=*/true);
            prepend_cell(fresh);
        } else {
            return false;
        }
        return true;
    }

    Component finish() {
        Component comp;
        comp.cells = cells_;
        for (auto& cell : comp.cells)
            for (int c : cell) comp.support.push_back(c);
        std::sort(comp.support.begin(), comp.support.end());
        comp.min_col = comp.support.front();
        return comp;
    }

private:
    int epoch_ = -1;
    std::vector<std::vector<int>> cells_;
    std::vector<int> col_cell_;
    std::vector<int> col_epoch_;

    void stamp(int col, int cell) {
        col_cell_[static_cast<std::size_t>(col)] = cell;
        col_epoch_[static_cast<std::size_t>(col)] = epoch_;
    }

    void renumber_from(std::size_t from) {
        for (std::size_t i = from; i < cells_.size(); ++i)
            for (int c : cells_[i]) stamp(c, static_cast<int>(i));
    }

    // Split cell idx into (out, in) when in_first is false, or (in, out) when
    // it is true, where "in" holds the columns of `row` (sorted input).
    void split(int idx, const std::vector<int>& row, bool in_first) {
        auto& cell = cells_[static_cast<std::size_t>(idx)];
        std::vector<int> in, out;
        for (int c : cell) {
            if (std::binary_search(row.begin(), row.end(), c))
                in.push_back(c);
            else
                out.push_back(c);
        }
        std::vector<int>& first = in_first ? in : out;
        std::vector<int>& second = in_first ? out : in;
        cell = first;
        cells_.insert(cells_.begin() + idx + 1, second);
        renumber_from(static_cast<std::size_t>(idx));
    }

    void append_cell(const std::vector<int>& cols) {
        cells_.push_back(cols);
        for (int c : cols) stamp(c, static_cast<int>(cells_.size()) - 1);
    }

    void prepend_cell(const std::vector<int>& cols) {
        cells_.insert(cells_.begin(), cols);
        renumber_from(0);
    }
};

bool strictly_overlap(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return inter > 0 && inter < a.size() && inter < b.size();
}

}  // namespace

bool verify_c1p(const BinaryMatrix& m, const std::vector<int>& order) {
    if (order.size() != m.cols()) throw std::invalid_argument("verify_c1p: order size mismatch");
    std::vector<char> seen(m.cols(), 0);
    for (int c : order) {
        if (c < 0 || static_cast<std::size_t>(c) >= m.cols() || seen[static_cast<std::size_t>(c)])
            throw std::invalid_argument("verify_c1p: not a permutation");
        seen[static_cast<std::size_t>(c)] = 1;
    }
    std::vector<int> pos(m.cols());
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        int lo = static_cast<int>(m.cols()), hi = -1, cnt = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) {
                lo = std::min(lo, pos[c]);
                hi = std::max(hi, pos[c]);
                ++cnt;
            }
        }
        if (cnt > 0 && hi - lo + 1 != cnt) return false;
    }
    return true;
}

std::optional<std::vector<int>> c1p_column_order(const BinaryMatrix& m) {
    const std::size_t cols = m.cols();
    if (cols == 0) return std::vector<int>{};

    // distinct constraining rows (two or more 1s), first-occurrence order
    std::vector<std::vector<int>> rows;
    {
        std::unordered_map<std::size_t, std::vector<int>> buckets;  // hash -> row ids
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::vector<int> cs;
            for (std::size_t c = 0; c < cols; ++c)
                if (m.get(r, c)) cs.push_back(static_cast<int>(c));
            if (cs.size() < 2) continue;
            std::size_t h = 1469598103934665603ULL;
            for (int c : cs) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ULL;
            auto& ids = buckets[h];
            bool dup = false;
            for (int id : ids)
                if (rows[static_cast<std::size_t>(id)] == cs) {
                    dup = true;
                    break;
                }
            if (!dup) {
                ids.push_back(static_cast<int>(rows.size()));
                rows.push_back(std::move(cs));
            }
        }
    }

    std::vector<std::vector<int>> col_rows(cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c : rows[r]) col_rows[static_cast<std::size_t>(c)].push_back(static_cast<int>(r));

    std::vector<char> placed(rows.size(), 0);
    std::vector<Component> components;
    ComponentBuilder builder(cols);

    for (std::size_t seed = 0; seed < rows.size(); ++seed) {
        if (placed[seed]) continue;
        builder.start(static_cast<int>(components.size()), rows[seed]);
        placed[seed] = 1;
        std::deque<int> queue{static_cast<int>(seed)};
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (int c : rows[static_cast<std::size_t>(a)]) {
                for (int b : col_rows[static_cast<std::size_t>(c)]) {
                    if (placed[static_cast<std::size_t>(b)]) continue;
                    if (!strictly_overlap(rows[static_cast<std::size_t>(a)],
                                          rows[static_cast<std::size_t>(b)]))
                        continue;
                    if (!builder.place(rows[static_cast<std::size_t>(b)])) return std::nullopt;
                    placed[static_cast<std::size_t>(b)] = 1;
                    queue.push_back(b);
                }
            }
        }
        components.push_back(builder.finish());
    }

    // Assemble: larger supports first; every later component fits inside one
    // cell of the deepest earlier component sharing a column.
    std::vector<int> comp_order(components.size());
    for (std::size_t i = 0; i < comp_order.size(); ++i) comp_order[i] = static_cast<int>(i);
    std::sort(comp_order.begin(), comp_order.end(), [&](int x, int y) {
        const auto& a = components[static_cast<std::size_t>(x)];
        const auto& b = components[static_cast<std::size_t>(y)];
        if (a.support.size() != b.support.size()) return a.support.size() > b.support.size();
        if (a.cells.size() != b.cells.size()) return a.cells.size() < b.cells.size();
        return a.min_col < b.min_col;
    });

    std::vector<std::pair<int, int>> owner(cols, {-1, -1});  // (component, cell)
    // children[comp][cell] -> component ids, plus root-level components
    std::vector<std::unordered_map<int, std::vector<int>>> children(components.size());
    std::vector<int> root_children;

    for (int ci : comp_order) {
        const auto& comp = components[static_cast<std::size_t>(ci)];
        auto parent = owner[static_cast<std::size_t>(comp.support.front())];
        for (int c : comp.support)
            if (owner[static_cast<std::size_t>(c)] != parent)
                throw std::logic_error("c1p: component not confined to one parent cell");
        if (parent.first < 0)
            root_children.push_back(ci);
        else
            children[static_cast<std::size_t>(parent.first)][parent.second].push_back(ci);
        for (std::size_t cell = 0; cell < comp.cells.size(); ++cell)
            for (int c : comp.cells[cell])
                owner[static_cast<std::size_t>(c)] = {ci, static_cast<int>(cell)};
    }

    std::vector<int> order;
    order.reserve(cols);
    auto emit = [&](auto&& self, int ci) -> void {
        const auto& comp = components[static_cast<std::size_t>(ci)];
        const auto& kid_map = children[static_cast<std::size_t>(ci)];
        for (std::size_t cell = 0; cell < comp.cells.size(); ++cell) {
            auto it = kid_map.find(static_cast<int>(cell));
            if (it != kid_map.end()) {
                auto kids = it->second;
                std::sort(kids.begin(), kids.end(), [&](int x, int y) {
                    return components[static_cast<std::size_t>(x)].min_col <
                           components[static_cast<std::size_t>(y)].min_col;
                });
                for (int kid : kids) self(self, kid);
            }
            std::vector<int> leftovers;
            for (int c : comp.cells[cell])
                if (owner[static_cast<std::size_t>(c)] ==
                    std::make_pair(ci, static_cast<int>(cell)))
                    leftovers.push_back(c);
            std::sort(leftovers.begin(), leftovers.end());
            for (int c : leftovers) order.push_back(c);
        }
    };
    std::sort(root_children.begin(), root_children.end(), [&](int x, int y) {
        return components[static_cast<std::size_t>(x)].min_col <
               components[static_cast<std::size_t>(y)].min_col;
    });
    for (int ci : root_children) emit(emit, ci);
    std::vector<int> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (owner[c].first < 0) free_cols.push_back(static_cast<int>(c));
    for (int c : free_cols) order.push_back(c);

    if (!verify_c1p(m, order))
        throw std::logic_error("c1p: produced ordering failed verification");

    std::vector<int> rev(order.rbegin(), order.rend());
    if (rev < order) order = std::move(rev);
    return order;
}

}  // namespace apd
