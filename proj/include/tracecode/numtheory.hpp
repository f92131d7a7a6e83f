#pragma once

#include <cstdint>

namespace tracecode {

// Construction parameters: an odd prime l with 2 a primitive root modulo l^m.
// The ambient field is GF(2^s) with s = phi(l^m); every other module assumes
// a Params that went through validate().
struct Params {
    uint32_t l = 0;
    uint32_t m = 0;
    uint32_t lm = 0;  // l^m
    uint32_t s = 0;   // phi(l^m) = l^(m-1)*(l-1), always even
    uint64_t q = 0;   // 2^s

    // Elements of GF(2^s)^2 are packed into single words, so the extension
    // degree is capped; no admissible (l, m) between s = 20 and the cap exists.
    static constexpr uint32_t kMaxDegree = 24;

    // Throws std::invalid_argument unless l is an odd prime, m >= 1,
    // 2 generates (Z/l^m Z)^* and phi(l^m) <= kMaxDegree.
    static Params validate(uint32_t l, uint32_t m);
};

// Polynomial over GF(2), bit j <-> coefficient of x^j.
struct Gf2Poly {
    uint64_t bits = 0;
    int degree() const;  // -1 for the zero polynomial
    bool operator==(const Gf2Poly&) const = default;
};

bool is_prime(uint32_t n);

// l^(m-1) * (l-1); rejects non-prime l.
uint64_t euler_phi(uint32_t l, uint32_t m);

// True iff the multiplicative order of 2 modulo l^m equals phi(l^m).
bool is_two_primitive_root(uint32_t l, uint32_t m);

// The l^m-th cyclotomic polynomial reduced mod 2, i.e. Phi_l(x^(l^(m-1))).
// Requires is_two_primitive_root(l, m), which makes the result irreducible
// over GF(2); irreducibility is re-checked by a self-test on construction.
Gf2Poly cyclotomic_poly_gf2(uint32_t l, uint32_t m);

// Number of k-dimensional GF(2)-subspaces of an n-dimensional space.
// Throws std::overflow_error when the exact value does not fit in 64 bits.
uint64_t gaussian_binomial(unsigned n, unsigned k);

// Same, saturating at cap instead of throwing; used for budget estimates.
uint64_t gaussian_binomial_capped(unsigned n, unsigned k, uint64_t cap);

}  // namespace tracecode
