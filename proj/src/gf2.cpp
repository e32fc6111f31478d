#include "turbo/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace turbo {

Gf2Poly::Gf2Poly(std::uint32_t mask) : mask_(mask) {
    if (mask != 0 && std::bit_width(mask) - 1 > kMaxDegree)
        throw std::invalid_argument("polynomial degree exceeds supported maximum (16)");
}

Gf2Poly Gf2Poly::from_octal(const std::string& octal) {
    if (octal.empty()) throw std::invalid_argument("empty octal polynomial");
    std::uint32_t value = 0;
    for (char c : octal) {
        if (c < '0' || c > '7') throw std::invalid_argument("bad octal digit in polynomial: " + octal);
        value = value * 8 + static_cast<std::uint32_t>(c - '0');
    }
    return Gf2Poly(value);
}

std::string Gf2Poly::to_octal() const {
    std::uint32_t v = mask_;
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('0' + (v & 7u)));
        v >>= 3;
    } while (v != 0);
    return s;
}

int Gf2Poly::degree() const {
    return mask_ == 0 ? -1 : std::bit_width(mask_) - 1;
}

Gf2Poly gf2_mul(Gf2Poly a, Gf2Poly b) {
    std::uint64_t acc = 0;
    std::uint64_t bm = b.mask();
    for (std::uint32_t am = a.mask(); am != 0; am &= am - 1) {
        int k = std::countr_zero(am);
        acc ^= bm << k;
    }
    if (acc >> 32) throw std::overflow_error("gf2_mul overflow");
    return Gf2Poly(static_cast<std::uint32_t>(acc));
}

Gf2Poly poly_mod(Gf2Poly a, Gf2Poly p) {
    if (p.is_zero()) throw std::invalid_argument("poly_mod: zero modulus");
    std::uint32_t r = a.mask();
    const int dp = p.degree();
    while (r != 0) {
        int dr = std::bit_width(r) - 1;
        if (dr < dp) break;
        r ^= p.mask() << (dr - dp);
    }
    return Gf2Poly(r);
}

int cycle_length(Gf2Poly p) {
    if (!p.constant_term() || p.degree() < 1)
        throw std::invalid_argument("cycle_length requires constant term 1 and degree >= 1");
    // Order of D in GF(2)[D]/(p): multiply by D and reduce until back at 1.
    const int bound = (1 << p.degree()) - 1;
    std::uint32_t r = 1;
    for (int k = 1; k <= bound; ++k) {
        r <<= 1;
        if ((r >> p.degree()) & 1u) r ^= p.mask();
        if (r == 1) return k;
    }
    throw std::logic_error("cycle_length: no cycle within 2^deg - 1 steps");
}

}  // namespace turbo
