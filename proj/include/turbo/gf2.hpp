#ifndef TURBO_GF2_HPP
#define TURBO_GF2_HPP

#include <cstdint>
#include <string>

namespace turbo {

// Binary polynomial over GF(2). Bit k of the mask is the coefficient of D^k.
// The zero polynomial is represented by mask 0 (degree() returns -1 for it).
class Gf2Poly {
public:
    static constexpr int kMaxDegree = 16;

    constexpr Gf2Poly() = default;
    explicit Gf2Poly(std::uint32_t mask);

    // Parses an octal string, bit k of the octal value = coefficient of D^k
    // (e.g. "15" -> 1 + D^2 + D^3, "13" -> 1 + D + D^3).
    static Gf2Poly from_octal(const std::string& octal);
    std::string to_octal() const;

    std::uint32_t mask() const { return mask_; }
    int degree() const;
    bool is_zero() const { return mask_ == 0; }
    bool constant_term() const { return (mask_ & 1u) != 0; }
    bool coeff(int k) const { return ((mask_ >> k) & 1u) != 0; }

    friend bool operator==(Gf2Poly a, Gf2Poly b) { return a.mask_ == b.mask_; }

private:
    std::uint32_t mask_ = 0;
};

// Carry-less product over GF(2).
Gf2Poly gf2_mul(Gf2Poly a, Gf2Poly b);

// Remainder of a modulo p over GF(2). Throws std::invalid_argument on zero p.
Gf2Poly poly_mod(Gf2Poly a, Gf2Poly p);

// Smallest k >= 1 with (1 + D^k) mod p = 0; requires constant term 1 and
// degree >= 1. Always <= 2^deg(p) - 1.
int cycle_length(Gf2Poly p);

}  // namespace turbo

#endif
