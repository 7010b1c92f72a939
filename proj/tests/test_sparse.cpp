#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strat/sparse.hpp"

using namespace strat;

namespace {

CSCMatrix from_dense(const std::vector<std::vector<int>>& rows) {
    CSCMatrix m;
    m.rows = static_cast<int>(rows.size());
    int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < ncols; ++c) {
        std::vector<std::pair<int, int>> col;
        for (int r = 0; r < m.rows; ++r)
            if (rows[r][c] != 0) col.push_back({r, rows[r][c]});
        m.add_column(std::move(col));
    }
    return m;
}

// textbook O(n^3) rational elimination, used as the oracle
int dense_rank(std::vector<std::vector<Rational>> a) {
    int rank = 0;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t piv = pr;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[pr]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[pr][c];
            for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[pr][cc];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(sparse_rank(from_dense({{1, 0}, {0, 1}})) == 2);
    CHECK(sparse_rank(from_dense({{1, 2}, {2, 4}})) == 1);
    CHECK(sparse_rank(from_dense({{0, 0}, {0, 0}})) == 0);
    CHECK(sparse_rank(from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("rank agrees with dense oracle on random sparse matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 12);
        int cols = 1 + static_cast<int>(rng() % 12);
        std::vector<std::vector<int>> dense(rows, std::vector<int>(cols, 0));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng() % 3 == 0) dense[r][c] = static_cast<int>(rng() % 7) - 3;
        std::vector<std::vector<Rational>> q(rows, std::vector<Rational>(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) q[r][c] = dense[r][c];
        CHECK(sparse_rank(from_dense(dense)) == dense_rank(q));
    }
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<int>> dense(rows, std::vector<int>(cols, 0));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng() % 2 == 0) dense[r][c] = static_cast<int>(rng() % 5) - 2;
        CSCMatrix m = from_dense(dense);
        auto kernel = sparse_kernel_basis(m);
        int rank = sparse_rank(m);
        CHECK(static_cast<int>(kernel.size()) == cols - rank);
        // each vector multiplies to zero
        for (const auto& v : kernel) {
            std::vector<Rational> out(rows, Rational(0));
            for (auto [c, coeff] : v)
                for (auto [r, val] : m.col[c]) out[r] += coeff * Rational(val);
            for (const auto& x : out) CHECK(x == 0);
        }
        // and they are linearly independent
        IncrementalEchelon ech;
        for (const auto& v : kernel) CHECK(ech.add(v));
    }
}

TEST_CASE("int64 overflow falls back to big rationals") {
    // Hilbert-like matrix forces large intermediate fractions
    const int n = 12;
    CSCMatrix m;
    m.rows = n;
    for (int c = 0; c < n; ++c) {
        std::vector<std::pair<int, int>> col;
        for (int r = 0; r < n; ++r) col.push_back({r, (r + 1) * (c + 1) + (r == c ? 1000000 : 0)});
        m.add_column(std::move(col));
    }
    CHECK(sparse_rank(m) == n);
}
