#include "tracecode/gf2field.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace tracecode {

namespace {

// Shift-and-reduce multiplication, used only until the log/exp tables exist.
FieldElem raw_mul(FieldElem a, FieldElem b, uint64_t mod, uint32_t s) {
    uint64_t acc = 0, x = a;
    while (b) {
        if (b & 1) acc ^= x;
        x <<= 1;
        if (x >> s) x ^= mod;
        b >>= 1;
    }
    return (FieldElem)acc;
}

FieldElem raw_pow(FieldElem a, uint64_t e, uint64_t mod, uint32_t s) {
    FieldElem r = 1;
    while (e) {
        if (e & 1) r = raw_mul(r, a, mod, s);
        a = raw_mul(a, a, mod, s);
        e >>= 1;
    }
    return r;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

FieldCtx::FieldCtx(const Params& params) : params_(params) {
    const uint32_t s = params_.s;
    const uint64_t q = params_.q;
    modulus_ = cyclotomic_poly_gf2(params_.l, params_.m);
    sqrt_q_ = uint32_t(1) << (s / 2);
    alpha_ = 2;  // class of x
    proj_e_ = (q - 1) / params_.lm;

    // gamma: smallest-encoding primitive element mapping onto alpha under the
    // (q-1)/l^m power map.
    const auto factors = prime_factors(q - 1);
    for (uint64_t g = 2; g < q; ++g) {
        bool primitive = true;
        for (uint64_t p : factors) {
            if (raw_pow((FieldElem)g, (q - 1) / p, modulus_.bits, s) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive && raw_pow((FieldElem)g, proj_e_, modulus_.bits, s) == alpha_) {
            gamma_ = (FieldElem)g;
            break;
        }
    }
    if (gamma_ == 0) throw std::logic_error("field: no admissible primitive element found");

    exp_.resize(2 * (q - 1));
    log_.assign(q, 0);
    FieldElem t = 1;
    for (uint64_t i = 0; i < q - 1; ++i) {
        exp_[i] = t;
        log_[t] = (uint32_t)i;
        t = raw_mul(t, gamma_, modulus_.bits, s);
    }
    if (t != 1) throw std::logic_error("field: gamma order check failed");
    for (uint64_t i = 0; i < q - 1; ++i) exp_[q - 1 + i] = exp_[i];

    proj_.resize(q);
    proj_[0] = 0;
    for (uint64_t i = 0; i < q - 1; ++i) proj_[exp_[i]] = exp_[(i * proj_e_) % (q - 1)];

    // Tr(x^k) for k up to 2s-2 drives both the trace mask and the pairing map.
    std::vector<uint32_t> tr_x(2 * s - 1);
    for (uint32_t k = 0; k < 2 * s - 1; ++k) {
        FieldElem xk = raw_pow(2, k, modulus_.bits, s);
        FieldElem acc = xk, fr = xk;
        for (uint32_t j = 1; j < s; ++j) {
            fr = raw_mul(fr, fr, modulus_.bits, s);
            acc ^= fr;
        }
        if (acc > 1) throw std::logic_error("field: trace of a basis power is not in GF(2)");
        tr_x[k] = acc;
    }
    trace_mask_ = 0;
    for (uint32_t j = 0; j < s; ++j) trace_mask_ |= tr_x[j] << j;

    std::vector<uint32_t> pair_cols(s, 0);
    for (uint32_t j = 0; j < s; ++j)
        for (uint32_t i = 0; i < s; ++i) pair_cols[j] |= tr_x[i + j] << i;
    psi_.resize(q);
    psi_[0] = 0;
    for (uint64_t u = 1; u < q; ++u)
        psi_[u] = psi_[u & (u - 1)] ^ pair_cols[std::countr_zero(u)];

    // Basis change between polynomial coordinates and {alpha, ..., alpha^s}.
    alpha_cols_.resize(s);
    FieldElem ap = 1;
    for (uint32_t j = 0; j < s; ++j) {
        ap = raw_mul(ap, alpha_, modulus_.bits, s);
        alpha_cols_[j] = ap;  // alpha^(j+1)
    }
    // Invert by elimination on rows of [A | I].
    std::vector<uint64_t> rows(s, 0);
    for (uint32_t i = 0; i < s; ++i) {
        uint64_t row = 0;
        for (uint32_t j = 0; j < s; ++j) row |= uint64_t((alpha_cols_[j] >> i) & 1) << j;
        rows[i] = row | (uint64_t(1) << (s + i));
    }
    for (uint32_t col = 0; col < s; ++col) {
        uint32_t piv = col;
        while (piv < s && !((rows[piv] >> col) & 1)) ++piv;
        if (piv == s) throw std::logic_error("field: alpha powers are not a basis");
        std::swap(rows[col], rows[piv]);
        for (uint32_t i = 0; i < s; ++i)
            if (i != col && ((rows[i] >> col) & 1)) rows[i] ^= rows[col];
    }
    alpha_inv_cols_.assign(s, 0);
    for (uint32_t i = 0; i < s; ++i)
        for (uint32_t j = 0; j < s; ++j)
            alpha_inv_cols_[j] |= uint32_t((rows[i] >> (s + j)) & 1) << i;

    if (order(alpha_) != params_.lm) throw std::logic_error("field: alpha order is not l^m");
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a == 0) throw std::domain_error("field: inverse of zero");
    return exp_[(q() - 1) - log_[a]];
}

FieldElem FieldCtx::pow(FieldElem a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const uint64_t n = q() - 1;
    return exp_[(uint64_t)log_[a] * (e % n) % n];
}

uint64_t FieldCtx::order(FieldElem a) const {
    if (a == 0) throw std::domain_error("field: order of zero");
    const uint64_t n = q() - 1;
    return n / std::gcd(n, (uint64_t)log_[a]);
}

uint32_t FieldCtx::alpha_coords(FieldElem u) const {
    uint32_t c = 0;
    while (u) {
        c ^= alpha_inv_cols_[std::countr_zero(u)];
        u &= u - 1;
    }
    return c;
}

FieldElem FieldCtx::from_alpha_coords(uint32_t coords) const {
    FieldElem u = 0;
    while (coords) {
        u ^= alpha_cols_[std::countr_zero(coords)];
        coords &= coords - 1;
    }
    return u;
}

uint32_t FieldCtx::subvector(FieldElem u, uint32_t i) const {
    uint32_t step = 1;
    for (uint32_t k = 1; k < params_.m; ++k) step *= params_.l;  // l^(m-1)
    if (i >= step)
        throw std::out_of_range("subvector: index " + std::to_string(i) + " out of range (l^(m-1) = " +
                                std::to_string(step) + ")");
    const uint32_t c = alpha_coords(u);
    uint32_t out = 0;
    for (uint32_t j = 1; j < params_.l; ++j) out |= ((c >> (j * step - i - 1)) & 1u) << (j - 1);
    return out;
}

}  // namespace tracecode
