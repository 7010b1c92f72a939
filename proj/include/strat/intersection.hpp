#pragma once

#include "strat/simplicial.hpp"

namespace strat {

// Goresky-MacPherson perversity: values p(2..n) with p(2) = 0 and
// increments in {0, 1}.
class Perversity {
public:
    Perversity(int n, std::vector<int> values);
    static Perversity lower_middle(int n);  // p(k) = floor((k-2)/2)
    static Perversity zero(int n);
    static Perversity top(int n);  // p(k) = k - 2

    int ambient_dim() const { return n_; }
    int operator()(int k) const;  // defined for 2 <= k <= n
    const std::vector<int>& values() const { return values_; }

private:
    int n_;
    std::vector<int> values_;
};

// Fullness audit: every simplex meets each closed stratum skeleton in a
// single face (its vertex-span inside the skeleton must be a simplex there).
bool is_full(const FilteredComplex& k);

// Allowable i-simplices: dim(sigma meet X_{n-c}) <= i - c + p(c) for every
// codimension c >= 2 with X_{n-c} nonempty. Requires a full complex.
std::vector<char> allowable_mask(const FilteredComplex& k, const Perversity& p, int degree);
std::vector<Simplex> allowable_simplices(const FilteredComplex& k, const Perversity& p,
                                         int degree);

// Ranks of lower-GM intersection homology of the allowable chain complex
// I^p C_i = span(A_i) meet boundary^{-1}(span(A_{i-1})), exact over Q.
// Applies one barycentric subdivision if the fullness audit fails.
std::vector<int> ih_ranks(const FilteredComplex& k, const Perversity& p);

// counts of allowable simplices per degree, for reports
std::vector<int> allowable_counts(const FilteredComplex& k, const Perversity& p);

}  // namespace strat
