#ifndef FFREP_FP_POLY_HPP
#define FFREP_FP_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffrep/errors.hpp"

namespace ffrep {

using Fp = std::uint32_t;

Fp fp_inv(Fp a, Fp p);
bool is_prime(std::uint64_t n);

/// Dense univariate polynomial over F_p, little-endian coefficients,
/// no trailing zeros. The zero polynomial has an empty coefficient list
/// and degree -1.
class FpPoly {
public:
    FpPoly() : p_(2) {}
    explicit FpPoly(Fp p) : p_(p) {}
    FpPoly(Fp p, std::vector<Fp> coeffs);

    static FpPoly zero(Fp p) { return FpPoly(p); }
    static FpPoly constant(Fp p, Fp c) { return FpPoly(p, {c % p}); }
    static FpPoly monomial(Fp p, Fp c, std::size_t deg);

    Fp characteristic() const { return p_; }
    const std::vector<Fp>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    Fp coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Fp leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }

    /// Lexicographic-by-degree order, used for canonical labels.
    bool operator<(const FpPoly& o) const;

    FpPoly scaled(Fp c) const;
    FpPoly monic() const;
    FpPoly derivative() const;

    /// Substitutes x^k for x (exponent dilation).
    FpPoly inflate(std::size_t k) const;
    /// Inverse of inflate: requires every exponent divisible by k.
    bool try_deflate(std::size_t k, FpPoly& out) const;

    static void divmod(const FpPoly& a, const FpPoly& b, FpPoly& quot, FpPoly& rem);
    static FpPoly gcd(FpPoly a, FpPoly b);

    std::string str(const std::string& var = "u") const;

private:
    void trim();

    Fp p_;
    std::vector<Fp> coeffs_;
};

}  // namespace ffrep

#endif
