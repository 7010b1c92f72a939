#pragma once

#include <map>
#include <string>

#include "strat/rational.hpp"

namespace strat {

// Exact element of Z[1/2], kept as mantissa * 2^exponent with the mantissa
// odd or zero.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long long n) : mantissa_(n), exponent_(0) { normalize(); }
    Dyadic(Int mantissa, int exponent) : mantissa_(std::move(mantissa)), exponent_(exponent) {
        normalize();
    }
    static Dyadic power_of_two(int e) { return Dyadic(Int(1), e); }

    const Int& mantissa() const { return mantissa_; }
    int exponent() const { return exponent_; }
    bool is_zero() const { return mantissa_ == 0; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
    }
    Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.mantissa_ == b.mantissa_ && (a.is_zero() || a.exponent_ == b.exponent_);
    }

    // division by a power of two (always exact in Z[1/2])
    Dyadic div_pow2(int e) const { return Dyadic(mantissa_, exponent_ - e); }
    // exact division when the quotient stays in Z[1/2]; errors otherwise
    friend Dyadic operator/(const Dyadic& a, const Dyadic& b);

    Rational to_rational() const;
    std::string str() const;  // fraction form "p/q"

private:
    Int mantissa_ = 0;
    int exponent_ = 0;
    void normalize();
};

// Element of Z[1/2][a^{+-1}], the KO[1/2] coefficient ring; a sits in
// degree 4.
class LaurentKO {
public:
    LaurentKO() = default;
    static LaurentKO monomial(int power, Dyadic coeff);
    static LaurentKO unit() { return monomial(0, Dyadic(1)); }

    const std::map<int, Dyadic>& coefficients() const { return c_; }
    Dyadic coeff(int power) const;
    void set(int power, Dyadic v);
    bool is_zero() const { return c_.empty(); }

    friend LaurentKO operator+(const LaurentKO& x, const LaurentKO& y);
    friend LaurentKO operator*(const LaurentKO& x, const LaurentKO& y);
    friend bool operator==(const LaurentKO& x, const LaurentKO& y) { return x.c_ == y.c_; }
    std::string str() const;

private:
    std::map<int, Dyadic> c_;
    void prune();
};

// Element of Z[1/2][beta^{+-1}], the complex K-theory coefficient ring with
// the Bott element beta in degree 2.
class LaurentKU {
public:
    LaurentKU() = default;
    static LaurentKU monomial(int power, Dyadic coeff);

    const std::map<int, Dyadic>& coefficients() const { return c_; }
    Dyadic coeff(int power) const;
    void set(int power, Dyadic v);
    bool is_zero() const { return c_.empty(); }

    friend LaurentKU operator+(const LaurentKU& x, const LaurentKU& y);
    friend LaurentKU operator*(const LaurentKU& x, const LaurentKU& y);
    friend bool operator==(const LaurentKU& x, const LaurentKU& y) { return x.c_ == y.c_; }
    std::string str() const;

private:
    std::map<int, Dyadic> c_;
    void prune();
};

// 2^{-floor(n/2)}, the normalization of the signature operator class of an
// n-dimensional Witt space.
Dyadic sign_norm(int n);

// 2 when both fiber dimensions are odd, 1 otherwise.
int compose_factor(int i, int j);

// k-theoretic boundary factor absorbed by sign_norm across a boundary:
// sign_norm(n) * boundary_factor(n) = sign_norm(n-1).
int boundary_factor(int n);

// Coefficient-level transfer class of a fiber bundle: the normalization of
// the vertical signature family relative to the raw class.
struct TransferSymbol {
    std::string label;
    int fiber_dim = 0;
    int degree = 0;  // fiber_dim mod 2
    Dyadic coeff = Dyadic(1);

    static TransferSymbol fresh(int fiber_dim, std::string label = "");
    bool satisfies_normalization() const;
};

// Kasparov-product bookkeeping: fiber dimensions add; the coefficient of the
// composite relative to the raw class picks up 1/compose_factor and must
// land back on the fresh normalization (NormalizationViolation otherwise).
TransferSymbol compose_transfer(const TransferSymbol& s, const TransferSymbol& t);

// stable Adams operation: a^k -> 4^{+-k} a^k
LaurentKO psi2(const LaurentKO& x, bool inverse = false);

// complexification: a^k -> beta^{2k}
LaurentKU complexify(const LaurentKO& x);

// Checks that the Sullivan orientation coefficient sigma * a^k, pushed
// through complexification of the inverse Adams operation, matches the
// signature-operator coefficient sign_norm(4k) * sigma * beta^{2k}.
bool orientation_compat_check(int k, int sigma);

// Symbolic transfer of a normally non-singular inclusion of codimension c,
// with the inverse witness of the normal-bundle transfer and its unit law.
struct NnsTransfer {
    TransferSymbol sigma_j;       // Sigma(j) = Sigma(pi)^{-1} (x) [phi] (x) i_!
    TransferSymbol pi_transfer;   // Sigma(pi), fresh of dimension c
    TransferSymbol pi_inverse;    // Sigma(pi)^{-1}
    bool unit_law_ok = false;     // pi_inverse (x) pi_transfer = unit
};

NnsTransfer nns_transfer(int codim);

}  // namespace strat
