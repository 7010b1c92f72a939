#pragma once

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <utility>
#include <vector>

#include "strat/rational.hpp"

namespace strat {

// Column-major sparse matrix with small integer entries, the form in which
// every boundary/coboundary matrix in this toolkit is born.
struct CSCMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> col;  // per column: (row, value)

    void add_column(std::vector<std::pair<int, int>> entries) {
        std::sort(entries.begin(), entries.end());
        col.push_back(std::move(entries));
        cols = static_cast<int>(col.size());
    }
};

// Optional cap on matrix size, read from STRAT_MATRIX_CAP (max of rows, cols).
// Unset or 0 means unlimited. Lets CI bound the exact elimination work.
inline int matrix_cap() {
    static int cap = [] {
        const char* v = std::getenv("STRAT_MATRIX_CAP");
        return v ? std::atoi(v) : 0;
    }();
    return cap;
}

namespace detail {

// Exact Gaussian elimination by column operations. Pivots are chosen with a
// Markowitz-style heuristic (shortest column, then sparsest row, unit entries
// first) which keeps fill-in low on boundary matrices.
template <class F>
int rank_elim(const CSCMatrix& m) {
    using Col = std::vector<std::pair<int, F>>;
    const int nrows = m.rows;
    const int ncols = m.cols;
    std::vector<Col> cols(ncols);
    std::vector<int> rownnz(nrows, 0);
    std::vector<std::vector<int>> rowcols(nrows);  // may hold stale column ids
    for (int c = 0; c < ncols; ++c) {
        cols[c].reserve(m.col[c].size());
        for (auto [r, v] : m.col[c]) {
            if (v == 0) continue;
            cols[c].push_back({r, F(v)});
            rownnz[r]++;
            rowcols[r].push_back(c);
        }
    }

    using HeapItem = std::pair<int, int>;  // (nnz, col id), min-heap
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
    std::vector<char> alive(ncols, 1);
    for (int c = 0; c < ncols; ++c) {
        if (!cols[c].empty())
            heap.push({static_cast<int>(cols[c].size()), c});
        else
            alive[c] = 0;
    }

    auto axpy = [&](Col& target, const Col& source, const F& factor, int skip_row) {
        // target += factor * source, in-place merge of sorted columns
        Col out;
        out.reserve(target.size() + source.size());
        std::size_t i = 0, j = 0;
        while (i < target.size() || j < source.size()) {
            if (j == source.size() ||
                (i < target.size() && target[i].first < source[j].first)) {
                out.push_back(std::move(target[i++]));
            } else if (i == target.size() || source[j].first < target[i].first) {
                F v = factor * source[j].second;
                if (!v.is_zero()) out.push_back({source[j].first, std::move(v)});
                ++j;
            } else {
                F v = target[i].second + factor * source[j].second;
                if (!v.is_zero()) out.push_back({target[i].first, std::move(v)});
                ++i;
                ++j;
            }
        }
        (void)skip_row;
        target = std::move(out);
    };

    int rank = 0;
    std::vector<char> row_dead(nrows, 0);
    while (!heap.empty()) {
        auto [nnz, c] = heap.top();
        heap.pop();
        if (!alive[c] || static_cast<int>(cols[c].size()) != nnz) continue;
        if (cols[c].empty()) {
            alive[c] = 0;
            continue;
        }
        // pivot entry: sparsest live row, units preferred
        int pr = -1;
        long best = -1;
        for (auto& [r, v] : cols[c]) {
            long score = 4L * rownnz[r] + (v.is_unit() ? 0 : 2);
            if (pr < 0 || score < best) {
                pr = r;
                best = score;
            }
        }
        const F pv = [&] {
            for (auto& [r, v] : cols[c])
                if (r == pr) return v;
            return F();
        }();
        ++rank;

        // eliminate the pivot row from every other live column
        std::vector<int> touched;
        touched.swap(rowcols[pr]);
        for (int c2 : touched) {
            if (c2 == c || !alive[c2]) continue;
            F val{};
            bool found = false;
            for (auto& [r, v] : cols[c2]) {
                if (r == pr) {
                    val = v;
                    found = true;
                    break;
                }
            }
            if (!found) continue;  // stale index entry
            // bookkeeping: rows leaving/entering c2
            for (auto& [r, v] : cols[c2]) rownnz[r]--;
            axpy(cols[c2], cols[c], -(val / pv), pr);
            for (auto& [r, v] : cols[c2]) {
                rownnz[r]++;
                rowcols[r].push_back(c2);
            }
            if (cols[c2].empty())
                alive[c2] = 0;
            else
                heap.push({static_cast<int>(cols[c2].size()), c2});
        }
        // retire pivot column and row
        for (auto& [r, v] : cols[c]) rownnz[r]--;
        cols[c].clear();
        alive[c] = 0;
        row_dead[pr] = 1;
    }
    return rank;
}

}  // namespace detail

// Exact rank over Q. Runs the int64 fraction fast path first and restarts
// with arbitrary-precision rationals only if an overflow is detected.
int sparse_rank(const CSCMatrix& m);

using SparseVecQ = std::vector<std::pair<int, Rational>>;

// Exact kernel basis over Q via left-to-right column reduction, tracking the
// column combinations. Intended for the small matrices behind cohomology
// representatives and test oracles.
std::vector<SparseVecQ> sparse_kernel_basis(const CSCMatrix& m);

// Maintains a sparse row-echelon family for incremental independence tests.
class IncrementalEchelon {
public:
    // Reduces v against the stored pivots; if a nonzero remainder is left it
    // becomes a new pivot and true is returned.
    bool add(SparseVecQ v);
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::vector<std::pair<int, SparseVecQ>> pivots_;  // (pivot row, vector)
};

}  // namespace strat
