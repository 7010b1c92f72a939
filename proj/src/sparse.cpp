#include "strat/sparse.hpp"

#include <map>

namespace strat {

namespace {

// cpp_rational wrapped with the small interface rank_elim expects.
struct BigRat {
    Rational v;
    BigRat() = default;
    BigRat(int n) : v(n) {}
    bool is_zero() const { return v == 0; }
    bool is_unit() const { return v == 1 || v == -1; }
    friend BigRat operator*(const BigRat& a, const BigRat& b) { return {a.v * b.v}; }
    friend BigRat operator/(const BigRat& a, const BigRat& b) { return {a.v / b.v}; }
    friend BigRat operator+(const BigRat& a, const BigRat& b) { return {a.v + b.v}; }
    BigRat operator-() const { return {-v}; }
    BigRat(Rational r) : v(std::move(r)) {}
};

void check_cap(const CSCMatrix& m) {
    int cap = matrix_cap();
    if (cap > 0 && (m.rows > cap || m.cols > cap))
        throw ValidationError("matrix size exceeds STRAT_MATRIX_CAP=" + std::to_string(cap));
}

}  // namespace

int sparse_rank(const CSCMatrix& m) {
    check_cap(m);
    try {
        return detail::rank_elim<Rat64>(m);
    } catch (const SmallRationalOverflow&) {
        return detail::rank_elim<BigRat>(m);
    }
}

std::vector<SparseVecQ> sparse_kernel_basis(const CSCMatrix& m) {
    check_cap(m);
    struct Reduced {
        SparseVecQ col;
        SparseVecQ record;
    };
    std::map<int, int> pivot_of_row;  // pivot row -> index into reduced
    std::vector<Reduced> reduced;
    std::vector<SparseVecQ> kernel;

    auto axpy = [](SparseVecQ& target, const SparseVecQ& source, const Rational& factor) {
        SparseVecQ out;
        out.reserve(target.size() + source.size());
        std::size_t i = 0, j = 0;
        while (i < target.size() || j < source.size()) {
            if (j == source.size() ||
                (i < target.size() && target[i].first < source[j].first)) {
                out.push_back(std::move(target[i++]));
            } else if (i == target.size() || source[j].first < target[i].first) {
                Rational v = factor * source[j].second;
                if (v != 0) out.push_back({source[j].first, std::move(v)});
                ++j;
            } else {
                Rational v = target[i].second + factor * source[j].second;
                if (v != 0) out.push_back({target[i].first, std::move(v)});
                ++i;
                ++j;
            }
        }
        target = std::move(out);
    };

    for (int c = 0; c < m.cols; ++c) {
        SparseVecQ col;
        for (auto [r, v] : m.col[c])
            if (v != 0) col.push_back({r, Rational(v)});
        SparseVecQ record{{c, Rational(1)}};
        bool became_pivot = false;
        while (!col.empty()) {
            int r = col.back().first;
            auto it = pivot_of_row.find(r);
            if (it == pivot_of_row.end()) {
                pivot_of_row[r] = static_cast<int>(reduced.size());
                reduced.push_back({std::move(col), std::move(record)});
                became_pivot = true;
                break;
            }
            const Reduced& p = reduced[it->second];
            Rational factor = -col.back().second / p.col.back().second;
            axpy(col, p.col, factor);
            axpy(record, p.record, factor);
        }
        // a column that reduced to zero leaves its record as a kernel vector
        if (!became_pivot) kernel.push_back(std::move(record));
    }
    return kernel;
}

bool IncrementalEchelon::add(SparseVecQ v) {
    auto axpy = [](SparseVecQ& target, const SparseVecQ& source, const Rational& factor) {
        SparseVecQ out;
        out.reserve(target.size() + source.size());
        std::size_t i = 0, j = 0;
        while (i < target.size() || j < source.size()) {
            if (j == source.size() ||
                (i < target.size() && target[i].first < source[j].first)) {
                out.push_back(std::move(target[i++]));
            } else if (i == target.size() || source[j].first < target[i].first) {
                Rational val = factor * source[j].second;
                if (val != 0) out.push_back({source[j].first, std::move(val)});
                ++j;
            } else {
                Rational val = target[i].second + factor * source[j].second;
                if (val != 0) out.push_back({target[i].first, std::move(val)});
                ++i;
                ++j;
            }
        }
        target = std::move(out);
    };
    while (!v.empty()) {
        int r = v.back().first;
        auto it = std::find_if(pivots_.begin(), pivots_.end(),
                               [r](const auto& p) { return p.first == r; });
        if (it == pivots_.end()) {
            pivots_.push_back({r, std::move(v)});
            return true;
        }
        Rational factor = -v.back().second / it->second.back().second;
        axpy(v, it->second, factor);
    }
    return false;
}

}  // namespace strat
