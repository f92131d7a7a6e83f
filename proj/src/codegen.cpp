#include "tracecode/codegen.hpp"

#include <bit>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tracecode {

namespace {

constexpr uint32_t kMaxEnumBits = 24;  // cap on 2s for point-level enumeration

void check_enumerable(const FieldCtx& f, const char* what) {
    if (2 * f.s() > kMaxEnumBits)
        throw std::invalid_argument(std::string(what) +
                                    ": q^2 too large to enumerate (2*phi(l^m) > 24); use closed forms");
}

int64_t exact_quarter(__int128 v) {
    if (v % 4 != 0) throw std::logic_error("weight formula produced a non-integer");
    return (int64_t)(v / 4);
}

// The five case weights behind the closed distribution. For b = 0 the cases
// are v != 0 / (v = 0, even u) / (v = 0, odd u); for b != 0 they are v = b
// split by u = 0 / even / odd, plus the flat q^2/4 weight elsewhere.
struct CaseWeights {
    int64_t s_a = 0;
    int64_t w_vnz = 0;   // b = 0, v != 0
    int64_t w_even = 0;  // b = 0: (v=0, u even); b != 0: (v=b, u even)
    int64_t w_odd = 0;
    int64_t w_uzero = 0;  // b != 0 only: (v=b, u=0)
    int64_t w_flat = 0;   // b != 0 only: q^2/4
    int64_t cnt_even = 0, cnt_odd = 0;
};

CaseWeights case_weights(const FieldCtx& f, const CodeSpec& spec) {
    CaseWeights cw;
    const int64_t q = (int64_t)f.q();
    const int64_t sq = f.sqrt_q();
    const int64_t lm = f.lm();
    cw.s_a = s_value(f, spec.a, SumMethod::kClosed);
    const int64_t s0 = (q - 1) / lm * cw.s_a;
    const int64_t s_even = sq - (sq + 1) / lm * cw.s_a;
    const int64_t s_odd = -sq - (sq + 1) / lm * cw.s_a;
    cw.cnt_even = even_class_size_closed(f, spec.a);
    cw.cnt_odd = odd_class_size_closed(f, spec.a);
    if (spec.b == 0) {
        cw.w_vnz = exact_quarter((__int128)q * (q + 1 + s0));
        cw.w_even = exact_quarter((__int128)q * (q + s0 - s_even));
        cw.w_odd = exact_quarter((__int128)q * (q + s0 - s_odd));
    } else {
        cw.w_uzero = exact_quarter((__int128)q * (q - 1 - s0));
        cw.w_even = exact_quarter((__int128)q * (q - 1 - s_even));
        cw.w_odd = exact_quarter((__int128)q * (q - 1 - s_odd));
        cw.w_flat = q * q / 4;
    }
    return cw;
}

WeightDistribution distribution_closed(const FieldCtx& f, const CodeSpec& spec) {
    WeightDistribution d;
    d.formal_dimension = 2 * f.s();
    const CaseWeights cw = case_weights(f, spec);
    const uint64_t q = f.q();
    int64_t min_w;
    if (spec.b == 0)
        min_w = std::min({cw.w_vnz, cw.w_even, cw.w_odd});
    else
        min_w = std::min({cw.w_uzero, cw.w_even, cw.w_odd, cw.w_flat});
    if (min_w <= 0) {
        d.degenerate = true;
        d.inapplicable = "a nonzero formal codeword has closed-form weight " + std::to_string(min_w) +
                         "; the formal map is not injective and the closed tables do not apply";
        return d;
    }
    d.counts[0] = 1;
    if (spec.b == 0) {
        d.counts[(uint64_t)cw.w_vnz] += q * (q - 1);
        d.counts[(uint64_t)cw.w_even] += (uint64_t)cw.cnt_even;
        d.counts[(uint64_t)cw.w_odd] += (uint64_t)cw.cnt_odd;
    } else {
        d.counts[(uint64_t)cw.w_uzero] += 1;
        d.counts[(uint64_t)cw.w_even] += (uint64_t)cw.cnt_even;
        d.counts[(uint64_t)cw.w_odd] += (uint64_t)cw.cnt_odd;
        d.counts[(uint64_t)cw.w_flat] += q * q - q - 1;
    }
    d.empirical_dimension = d.formal_dimension;
    d.kernel_size = 1;
    return d;
}

// Signed pairing transform: out[w] = sum over p in D of (-1)^<w, pair(p)>.
std::vector<int32_t> pairing_transform(const FieldCtx& f, const DefiningSet& d) {
    const uint64_t n2 = f.q() * f.q();
    std::vector<int32_t> a(n2, 0);
    for (uint64_t pp : d.point_pair) a[pp] = 1;
    for (uint64_t h = 1; h < n2; h <<= 1) {
        for (uint64_t i = 0; i < n2; i += h << 1) {
            for (uint64_t j = i; j < i + h; ++j) {
                const int32_t x = a[j], y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
    return a;
}

void fill_dimensions(WeightDistribution& d, uint32_t s) {
    d.formal_dimension = 2 * s;
    d.kernel_size = d.counts.count(0) ? d.counts.at(0) : 0;
    if (d.kernel_size == 0 || (d.kernel_size & (d.kernel_size - 1)) != 0)
        throw std::logic_error("kernel of the codeword map is not a subspace");
    d.empirical_dimension = 2 * s - (unsigned)std::countr_zero(d.kernel_size);
    d.degenerate = d.kernel_size > 1;
}

}  // namespace

CodeSpec make_spec(const FieldCtx& f, FieldElem a, FieldElem b) {
    if (a == 0 || a >= f.q() || b >= f.q())
        throw std::invalid_argument("spec: need a in F_q^*, b in F_q");
    return CodeSpec{f.params(), a, b};
}

DefiningSet build_defining_set(const FieldCtx& f, const CodeSpec& spec) {
    check_enumerable(f, "defining set");
    if (spec.a == 0) throw std::invalid_argument("defining set: a must be nonzero");
    const uint32_t s = f.s();
    const uint64_t q = f.q();
    DefiningSet d;
    d.s = s;
    d.member.assign((q * q + 63) / 64, 0);
    std::vector<uint8_t> tx(q), tby(q);
    for (uint64_t x = 0; x < q; ++x) tx[x] = (uint8_t)f.trace(f.mul(spec.a, f.unity_proj((FieldElem)x)));
    for (uint64_t y = 0; y < q; ++y) tby[y] = (uint8_t)f.trace(f.mul(spec.b, (FieldElem)y));
    for (uint64_t y = 0; y < q; ++y) {
        for (uint64_t x = 0; x < q; ++x) {
            if ((x | y) == 0 || (tx[x] ^ tby[y])) continue;
            const uint64_t p = x | (y << s);
            d.points.push_back(p);
            d.point_pair.push_back((uint64_t)f.psi((FieldElem)x) | ((uint64_t)f.psi((FieldElem)y) << s));
            d.member[p >> 6] |= uint64_t(1) << (p & 63);
        }
    }
    // y-major, x-minor iteration already yields ascending packed order
    if (d.points.size() != length_closed(f, spec))
        throw std::logic_error("defining set size disagrees with the closed-form length");
    return d;
}

uint64_t length_closed(const FieldCtx& f, const CodeSpec& spec) {
    const int64_t q = (int64_t)f.q();
    if (spec.b != 0) return (uint64_t)(q * q / 2 - 1);
    const int64_t s0 = s_ab(f, spec.a, 0, SumMethod::kClosed);
    return (uint64_t)(q * (q + 1 + s0) / 2 - 1);
}

CodewordView codeword(const FieldCtx& f, const DefiningSet& d, FieldElem u, FieldElem v) {
    CodewordView cw;
    cw.bits.assign((d.points.size() + 63) / 64, 0);
    const uint64_t w = (uint64_t)u | ((uint64_t)v << f.s());
    for (size_t i = 0; i < d.point_pair.size(); ++i) {
        const uint64_t bit = std::popcount(w & d.point_pair[i]) & 1u;
        cw.bits[i >> 6] |= bit << (i & 63);
        cw.weight += bit;
    }
    return cw;
}

uint64_t weight_closed(const FieldCtx& f, const CodeSpec& spec, FieldElem u, FieldElem v) {
    if (u == 0 && v == 0) throw std::invalid_argument("weight_closed: (u,v) must be nonzero");
    const int64_t q = (int64_t)f.q();
    int64_t w;
    if (spec.b == 0) {
        if (v != 0)
            w = exact_quarter((__int128)q * (q + 1 + s_ab(f, spec.a, 0, SumMethod::kClosed)));
        else
            w = exact_quarter((__int128)q * (q + s_ab(f, spec.a, 0, SumMethod::kClosed) -
                                             s_ab(f, spec.a, u, SumMethod::kClosed)));
    } else {
        if (v == spec.b)
            w = exact_quarter((__int128)q * (q - 1 - s_ab(f, spec.a, u, SumMethod::kClosed)));
        else
            w = q * q / 4;
    }
    if (w < 0) throw std::logic_error("weight_closed: negative weight");
    return (uint64_t)w;
}

WeightDistribution weight_distribution(const FieldCtx& f, const CodeSpec& spec, DistMethod method) {
    if (method == DistMethod::kClosed) return distribution_closed(f, spec);
    check_enumerable(f, "weight distribution");
    const DefiningSet d = build_defining_set(f, spec);
    WeightDistribution dist;
    const uint64_t q = f.q();
    if (method == DistMethod::kBrute) {
        if ((unsigned __int128)q * q * d.n() > ((unsigned __int128)1 << 36))
            throw std::invalid_argument(
                "brute weight distribution too large at this size; use the transform method");
        for (uint64_t w = 0; w < q * q; ++w) {
            uint64_t wt = 0;
            for (uint64_t pp : d.point_pair) wt += std::popcount(w & pp) & 1u;
            ++dist.counts[wt];
        }
    } else {
        const auto hat = pairing_transform(f, d);
        const uint64_t n = d.n();
        for (uint64_t w = 0; w < q * q; ++w) {
            const int64_t diff = (int64_t)n - hat[w];
            if (diff < 0 || diff % 2 != 0) throw std::logic_error("transform produced an invalid weight");
            ++dist.counts[(uint64_t)diff / 2];
        }
    }
    fill_dimensions(dist, f.s());
    return dist;
}

DimensionReport empirical_dimension(const FieldCtx& f, const DefiningSet& d) {
    check_enumerable(f, "dimension");
    DimensionReport rep;
    rep.formal_dimension = 2 * f.s();
    const auto hat = pairing_transform(f, d);
    const int64_t n = (int64_t)d.n();
    for (uint64_t w = 0; w < f.q() * f.q(); ++w)
        if (hat[w] == n) rep.kernel.push_back(w);
    const uint64_t ks = rep.kernel.size();
    if (ks == 0 || (ks & (ks - 1)) != 0)
        throw std::logic_error("kernel of the codeword map is not a subspace");
    rep.empirical_dimension = 2 * f.s() - (unsigned)std::countr_zero(ks);
    return rep;
}

bool degenerate_closed(const FieldCtx& f, const CodeSpec& spec) {
    const CaseWeights cw = case_weights(f, spec);
    if (spec.b == 0) return std::min({cw.w_vnz, cw.w_even, cw.w_odd}) <= 0;
    return std::min({cw.w_uzero, cw.w_even, cw.w_odd, cw.w_flat}) <= 0;
}

bool dual_distance_at_least_2(const FieldCtx& f, const DefiningSet& d) {
    (void)f;
    for (uint64_t pp : d.point_pair)
        if (pp == 0) return false;
    return true;
}

Ratio minmax_ratio(const FieldCtx& f, const CodeSpec& spec) {
    if (degenerate_closed(f, spec))
        throw std::domain_error(
            "minmax_ratio: spec is degenerate (a zero-weight nonzero codeword exists), "
            "min/max weight ratio is not defined for the stated family");
    const auto dist = weight_distribution(f, spec, DistMethod::kBrute);
    Ratio r;
    r.min_weight = 0;
    for (const auto& [w, c] : dist.counts) {
        (void)c;
        if (w == 0) continue;
        if (r.min_weight == 0) r.min_weight = w;
        r.max_weight = w;
    }
    const uint64_t g = std::gcd(r.min_weight, r.max_weight);
    r.num = r.min_weight / g;
    r.den = r.max_weight / g;
    r.exceeds_half = 2 * r.min_weight > r.max_weight;
    return r;
}

void write_generator_matrix(std::ostream& os, const FieldCtx& f, const DefiningSet& d) {
    for (uint32_t k = 0; k < 2 * f.s(); ++k) {
        const uint64_t w = uint64_t(1) << k;
        std::string row(d.points.size(), '0');
        for (size_t i = 0; i < d.point_pair.size(); ++i)
            if (std::popcount(w & d.point_pair[i]) & 1u) row[i] = '1';
        os << row << '\n';
    }
}

}  // namespace tracecode
