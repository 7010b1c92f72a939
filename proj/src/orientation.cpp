#include "strat/orientation.hpp"

#include "strat/errors.hpp"

namespace strat {

namespace {
int floor_div2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }
}  // namespace

void Dyadic::normalize() {
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    while (mantissa_ % 2 == 0) {
        mantissa_ /= 2;
        ++exponent_;
    }
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int e = std::min(a.exponent_, b.exponent_);
    Int ma = a.mantissa_ << (a.exponent_ - e);
    Int mb = b.mantissa_ << (b.exponent_ - e);
    return Dyadic(ma + mb, e);
}

Dyadic operator/(const Dyadic& a, const Dyadic& b) {
    if (b.is_zero()) throw ValidationError("dyadic division by zero");
    if (a.is_zero()) return Dyadic(0);
    if (a.mantissa_ % b.mantissa_ != 0)
        throw ValidationError("dyadic quotient leaves Z[1/2]");
    return Dyadic(a.mantissa_ / b.mantissa_, a.exponent_ - b.exponent_);
}

Rational Dyadic::to_rational() const {
    if (exponent_ >= 0) return Rational(mantissa_ << exponent_);
    return Rational(mantissa_, Int(1) << (-exponent_));
}

std::string Dyadic::str() const { return to_fraction_string(to_rational()); }

LaurentKO LaurentKO::monomial(int power, Dyadic coeff) {
    LaurentKO x;
    if (!coeff.is_zero()) x.c_[power] = std::move(coeff);
    return x;
}

Dyadic LaurentKO::coeff(int power) const {
    auto it = c_.find(power);
    return it == c_.end() ? Dyadic(0) : it->second;
}

void LaurentKO::set(int power, Dyadic v) {
    if (v.is_zero())
        c_.erase(power);
    else
        c_[power] = std::move(v);
}

void LaurentKO::prune() {
    for (auto it = c_.begin(); it != c_.end();)
        it = it->second.is_zero() ? c_.erase(it) : std::next(it);
}

LaurentKO operator+(const LaurentKO& x, const LaurentKO& y) {
    LaurentKO out = x;
    for (auto& [k, v] : y.c_) out.set(k, out.coeff(k) + v);
    out.prune();
    return out;
}

LaurentKO operator*(const LaurentKO& x, const LaurentKO& y) {
    LaurentKO out;
    for (auto& [i, a] : x.c_)
        for (auto& [j, b] : y.c_) out.set(i + j, out.coeff(i + j) + a * b);
    out.prune();
    return out;
}

std::string LaurentKO::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto& [k, v] : c_) {
        if (!s.empty()) s += " + ";
        s += v.str();
        if (k != 0) s += "*a^" + std::to_string(k);
    }
    return s;
}

LaurentKU LaurentKU::monomial(int power, Dyadic coeff) {
    LaurentKU x;
    if (!coeff.is_zero()) x.c_[power] = std::move(coeff);
    return x;
}

Dyadic LaurentKU::coeff(int power) const {
    auto it = c_.find(power);
    return it == c_.end() ? Dyadic(0) : it->second;
}

void LaurentKU::set(int power, Dyadic v) {
    if (v.is_zero())
        c_.erase(power);
    else
        c_[power] = std::move(v);
}

void LaurentKU::prune() {
    for (auto it = c_.begin(); it != c_.end();)
        it = it->second.is_zero() ? c_.erase(it) : std::next(it);
}

LaurentKU operator+(const LaurentKU& x, const LaurentKU& y) {
    LaurentKU out = x;
    for (auto& [k, v] : y.c_) out.set(k, out.coeff(k) + v);
    out.prune();
    return out;
}

LaurentKU operator*(const LaurentKU& x, const LaurentKU& y) {
    LaurentKU out;
    for (auto& [i, a] : x.c_)
        for (auto& [j, b] : y.c_) out.set(i + j, out.coeff(i + j) + a * b);
    out.prune();
    return out;
}

std::string LaurentKU::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto& [k, v] : c_) {
        if (!s.empty()) s += " + ";
        s += v.str();
        if (k != 0) s += "*b^" + std::to_string(k);
    }
    return s;
}

Dyadic sign_norm(int n) {
    if (n < 0) throw ValidationError("sign_norm needs n >= 0");
    return Dyadic::power_of_two(-(n / 2));
}

int compose_factor(int i, int j) {
    if (i < 0 || j < 0) throw ValidationError("compose_factor needs nonnegative dimensions");
    return (i % 2 == 1 && j % 2 == 1) ? 2 : 1;
}

int boundary_factor(int n) {
    if (n < 1) throw ValidationError("boundary_factor needs n >= 1");
    // the factor the normalization absorbs across a boundary:
    // sign_norm(n) * boundary_factor(n) = sign_norm(n - 1)
    return n % 2 == 0 ? 2 : 1;
}

TransferSymbol TransferSymbol::fresh(int fiber_dim, std::string label) {
    if (fiber_dim < 0) throw ValidationError("transfer symbol needs fiber_dim >= 0");
    TransferSymbol s;
    s.label = label.empty() ? "Sigma(fiber " + std::to_string(fiber_dim) + ")" : std::move(label);
    s.fiber_dim = fiber_dim;
    s.degree = fiber_dim % 2;
    s.coeff = Dyadic::power_of_two(-(fiber_dim / 2));
    return s;
}

bool TransferSymbol::satisfies_normalization() const {
    return coeff == Dyadic::power_of_two(-floor_div2(fiber_dim));
}

TransferSymbol compose_transfer(const TransferSymbol& s, const TransferSymbol& t) {
    const int ell = compose_factor(s.fiber_dim, t.fiber_dim);
    TransferSymbol out;
    out.label = s.label + " (x) " + t.label;
    out.fiber_dim = s.fiber_dim + t.fiber_dim;
    out.degree = ((s.degree + t.degree) % 2 + 2) % 2;
    // raw vertical families compose with the factor ell, so the coefficient
    // relative to the raw class of the composite is the product divided by it
    out.coeff = (s.coeff * t.coeff).div_pow2(ell == 2 ? 1 : 0);
    if (s.satisfies_normalization() && t.satisfies_normalization() &&
        !out.satisfies_normalization())
        throw NormalizationViolation("composite transfer lost its normalization");
    return out;
}

LaurentKO psi2(const LaurentKO& x, bool inverse) {
    LaurentKO out;
    for (auto& [k, v] : x.coefficients()) {
        int shift = inverse ? -2 * k : 2 * k;
        out.set(k, Dyadic(v.mantissa(), v.exponent() + shift));
    }
    return out;
}

LaurentKU complexify(const LaurentKO& x) {
    LaurentKU out;
    for (auto& [k, v] : x.coefficients()) out.set(2 * k, v);
    return out;
}

bool orientation_compat_check(int k, int sigma) {
    if (k < 0) throw ValidationError("orientation_compat_check needs k >= 0");
    // Sullivan orientation coefficient sigma * a^k through c . (Psi^2)^{-1}
    LaurentKO delta = LaurentKO::monomial(k, Dyadic(sigma));
    LaurentKU lhs = complexify(psi2(delta, /*inverse=*/true));
    // signature-operator coefficient
    LaurentKU rhs = LaurentKU::monomial(2 * k, sign_norm(4 * k) * Dyadic(sigma));
    return lhs == rhs;
}

NnsTransfer nns_transfer(int codim) {
    if (codim < 0) throw ValidationError("nns_transfer needs codim >= 0");
    NnsTransfer out;
    out.pi_transfer = TransferSymbol::fresh(codim, "Sigma(pi)");
    out.pi_inverse.label = "Sigma(pi)^-1";
    out.pi_inverse.fiber_dim = -codim;
    out.pi_inverse.degree = codim % 2;
    out.pi_inverse.coeff = Dyadic::power_of_two(codim / 2);
    // Sigma(j) = Sigma(pi)^{-1} (x) [phi] (x) i_!, and the homomorphism
    // classes [phi], i_! carry coefficient 1 in degree 0
    out.sigma_j.label = "Sigma(j)";
    out.sigma_j.fiber_dim = -codim;
    out.sigma_j.degree = codim % 2;
    out.sigma_j.coeff = out.pi_inverse.coeff;
    // unit law: plain Kasparov product of the witness pair
    Dyadic unit_coeff = out.pi_inverse.coeff * out.pi_transfer.coeff;
    int unit_dim = out.pi_inverse.fiber_dim + out.pi_transfer.fiber_dim;
    int unit_degree = (out.pi_inverse.degree + out.pi_transfer.degree) % 2;
    out.unit_law_ok = unit_coeff == Dyadic(1) && unit_dim == 0 && unit_degree == 0;
    return out;
}

}  // namespace strat
