#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "tracecode/numtheory.hpp"

namespace tracecode {

// Element of GF(2^s) as its polynomial-basis coordinate word, bit j <-> x^j.
// This is also the external (hex) encoding used by the CLI and file formats.
using FieldElem = uint32_t;

// GF(2^s) realized as GF(2)[x]/Phi_{l^m}(x), s = phi(l^m). alpha is the class
// of x and has multiplicative order l^m. gamma is the primitive element with
// the smallest integer encoding satisfying gamma^((q-1)/l^m) = alpha, so every
// derived object is deterministic. Immutable after construction.
class FieldCtx {
  public:
    explicit FieldCtx(const Params& params);

    const Params& params() const { return params_; }
    uint32_t s() const { return params_.s; }
    uint64_t q() const { return params_.q; }
    uint32_t lm() const { return params_.lm; }
    uint32_t sqrt_q() const { return sqrt_q_; }
    const Gf2Poly& modulus() const { return modulus_; }
    FieldElem gamma() const { return gamma_; }
    FieldElem alpha() const { return alpha_; }

    FieldElem add(FieldElem a, FieldElem b) const { return a ^ b; }
    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    FieldElem inv(FieldElem a) const;                // throws std::domain_error on 0
    FieldElem pow(FieldElem a, uint64_t e) const;    // 0^0 = 1
    uint64_t order(FieldElem a) const;               // multiplicative order, a != 0

    // Tr: GF(2^s) -> GF(2), u |-> sum of u^(2^j).
    int trace(FieldElem u) const { return std::popcount(u & trace_mask_) & 1; }
    // Canonical additive character chi(u) = (-1)^Tr(u).
    int chi(FieldElem u) const { return trace(u) ? -1 : 1; }

    // u -> u^((q-1)/l^m): projection of F_q^* onto the l^m-th roots of unity
    // (0 maps to 0). Table-backed, O(1).
    FieldElem unity_proj(FieldElem u) const { return proj_[u]; }
    uint64_t proj_exponent() const { return proj_e_; }

    // Coordinates in the basis {alpha, alpha^2, ..., alpha^s}:
    // bit j-1 of the result <-> coefficient a_j.
    uint32_t alpha_coords(FieldElem u) const;
    FieldElem from_alpha_coords(uint32_t coords) const;

    // The length-(l-1) slice (a_{l^(m-1)-i}, a_{2l^(m-1)-i}, ..., a_{(l-1)l^(m-1)-i})
    // of the alpha-basis coordinate vector, packed little-endian; 0 <= i < l^(m-1).
    uint32_t subvector(FieldElem u, uint32_t i) const;
    unsigned subvector_weight(FieldElem u, uint32_t i) const {
        return std::popcount(subvector(u, i));
    }

    // psi(u) has bit i = Tr(u * x^i), so Tr(u*v) = parity(psi(u) & v).
    uint32_t psi(FieldElem u) const { return psi_[u]; }
    int pair_trace(FieldElem u, FieldElem v) const { return std::popcount(psi_[u] & v) & 1; }

  private:
    Params params_;
    Gf2Poly modulus_;
    uint32_t sqrt_q_ = 0;
    FieldElem alpha_ = 0;
    FieldElem gamma_ = 0;
    uint64_t proj_e_ = 0;
    uint32_t trace_mask_ = 0;
    std::vector<FieldElem> exp_;   // gamma^i for i in [0, 2(q-1))
    std::vector<uint32_t> log_;    // discrete log base gamma, log_[0] unused
    std::vector<FieldElem> proj_;  // u^((q-1)/l^m)
    std::vector<uint32_t> psi_;    // trace pairing image
    std::vector<uint32_t> alpha_cols_;      // alpha^j in polynomial coordinates
    std::vector<uint32_t> alpha_inv_cols_;  // inverse basis change
};

}  // namespace tracecode
