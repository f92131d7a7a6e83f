#include "tracecode/numtheory.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracecode {

namespace {

// Carry-less multiplication; operand degrees must stay below 32 so the
// product fits in 64 bits.
uint64_t pmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        r ^= a * (b & 1);
        a <<= 1;
        b >>= 1;
    }
    return r;
}

int pdeg(uint64_t a) { return a ? 63 - std::countl_zero(a) : -1; }

uint64_t pmod(uint64_t a, uint64_t mod) {
    const int dm = pdeg(mod);
    for (int d = pdeg(a); d >= dm; d = pdeg(a)) a ^= mod << (d - dm);
    return a;
}

uint64_t pmulmod(uint64_t a, uint64_t b, uint64_t mod) { return pmod(pmul(a, b), mod); }

uint64_t pgcd(uint64_t a, uint64_t b) {
    while (b) {
        a = pmod(a, b);
        std::swap(a, b);
    }
    return a;
}

// x^(2^e) mod f, by e repeated squarings.
uint64_t frobenius_pow(unsigned e, uint64_t f) {
    uint64_t t = 2;  // x
    for (unsigned i = 0; i < e; ++i) t = pmulmod(t, t, f);
    return t;
}

void check_irreducible(const Gf2Poly& f, uint32_t s) {
    if (frobenius_pow(s, f.bits) != 2)
        throw std::logic_error("cyclotomic modulus failed x^(2^s) = x self-test");
    for (uint32_t d = 1; d < s; ++d) {
        if (s % d != 0) continue;
        if (pgcd(f.bits, frobenius_pow(d, f.bits) ^ 2u) != 1)
            throw std::logic_error("cyclotomic modulus has a root in a proper subfield");
    }
}

constexpr unsigned __int128 kSaturated = (unsigned __int128)1 << 100;

unsigned __int128 gb_raw(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::vector<unsigned __int128> row(k + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(k, i); j >= 1; --j) {
            // [i, j] = [i-1, j-1] + 2^j [i-1, j]
            unsigned __int128 v = row[j - 1] + ((unsigned __int128)row[j] << j);
            row[j] = v > kSaturated ? kSaturated : v;
        }
    }
    return row[k];
}

}  // namespace

int Gf2Poly::degree() const { return pdeg(bits); }

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t euler_phi(uint32_t l, uint32_t m) {
    if (!is_prime(l)) throw std::invalid_argument("euler_phi: l must be prime");
    if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
    uint64_t r = l - 1;
    for (uint32_t i = 1; i < m; ++i) r *= l;
    return r;
}

bool is_two_primitive_root(uint32_t l, uint32_t m) {
    if (!is_prime(l) || l == 2) throw std::invalid_argument("is_two_primitive_root: l must be an odd prime");
    if (m < 1) throw std::invalid_argument("is_two_primitive_root: m must be positive");
    uint64_t lm = 1;
    for (uint32_t i = 0; i < m; ++i) {
        lm *= l;
        if (lm > (1u << 30)) throw std::invalid_argument("is_two_primitive_root: l^m too large");
    }
    const uint64_t phi = euler_phi(l, m);
    uint64_t t = 2 % lm, ord = 1;
    while (t != 1) {
        t = t * 2 % lm;
        ++ord;
    }
    return ord == phi;
}

Gf2Poly cyclotomic_poly_gf2(uint32_t l, uint32_t m) {
    if (!is_two_primitive_root(l, m))
        throw std::invalid_argument("cyclotomic_poly_gf2: 2 is not a primitive root modulo l^" +
                                    std::to_string(m));
    const uint64_t s = euler_phi(l, m);
    if (s > 62) throw std::invalid_argument("cyclotomic_poly_gf2: degree too large");
    uint64_t step = 1;
    for (uint32_t i = 1; i < m; ++i) step *= l;  // l^(m-1)
    Gf2Poly f;
    for (uint32_t j = 0; j < l; ++j) f.bits |= uint64_t(1) << (j * step);
    check_irreducible(f, (uint32_t)s);
    return f;
}

uint64_t gaussian_binomial(unsigned n, unsigned k) {
    const auto v = gb_raw(n, k);
    if (v >= kSaturated || v > (unsigned __int128)UINT64_MAX)
        throw std::overflow_error("gaussian_binomial: value exceeds 64 bits");
    return (uint64_t)v;
}

uint64_t gaussian_binomial_capped(unsigned n, unsigned k, uint64_t cap) {
    const auto v = gb_raw(n, k);
    return v > (unsigned __int128)cap ? cap : (uint64_t)v;
}

Params Params::validate(uint32_t l, uint32_t m) {
    if (!is_prime(l) || l == 2) throw std::invalid_argument("params: l must be an odd prime");
    if (m < 1) throw std::invalid_argument("params: m must be >= 1");
    uint64_t lm = 1;
    for (uint32_t i = 0; i < m; ++i) lm *= l;
    const uint64_t s = euler_phi(l, m);
    if (s > kMaxDegree)
        throw std::invalid_argument("params: phi(l^m) = " + std::to_string(s) + " exceeds the supported cap " +
                                    std::to_string(kMaxDegree));
    if (!is_two_primitive_root(l, m))
        throw std::invalid_argument("params: 2 is not a primitive root modulo " + std::to_string(lm));
    Params p;
    p.l = l;
    p.m = m;
    p.lm = (uint32_t)lm;
    p.s = (uint32_t)s;
    p.q = uint64_t(1) << s;
    // l odd makes phi(l^m) even, which the square-root-of-q machinery relies on
    if (p.s % 2 != 0) throw std::logic_error("params: phi(l^m) must be even");
    return p;
}

}  // namespace tracecode
