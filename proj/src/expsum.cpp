#include "tracecode/expsum.hpp"

#include <stdexcept>

namespace tracecode {

int64_t s_value(const FieldCtx& f, FieldElem a, SumMethod method) {
    if (method == SumMethod::kBrute) {
        int64_t sum = 0;
        FieldElem z = 1;
        for (uint32_t i = 0; i < f.lm(); ++i) {
            sum += f.chi(f.mul(a, z));
            z = f.mul(z, f.alpha());
        }
        return sum;
    }
    const int64_t l = f.params().l;
    uint32_t slices = 1;
    for (uint32_t k = 1; k < f.params().m; ++k) slices *= f.params().l;  // l^(m-1)
    int64_t sum = 0;
    for (uint32_t i = 0; i < slices; ++i) {
        const int64_t w = f.subvector_weight(a, i);
        sum += (w & 1 ? -1 : 1) * (l - 2 * w);
    }
    return sum;
}

int64_t s_ab(const FieldCtx& f, FieldElem a, FieldElem b, SumMethod method) {
    if (a == 0) throw std::invalid_argument("s_ab: a must be nonzero");
    if (method == SumMethod::kBrute) {
        int64_t sum = 0;
        for (uint64_t x = 1; x < f.q(); ++x)
            sum += f.chi(f.mul(a, f.unity_proj((FieldElem)x)) ^ f.mul(b, (FieldElem)x));
        return sum;
    }
    const int64_t lm = f.lm();
    const int64_t s_a = s_value(f, a, SumMethod::kClosed);
    if (b == 0) return (int64_t)((f.q() - 1) / lm) * s_a;
    const FieldElem c = f.mul(a, f.inv(f.unity_proj(b)));
    const int64_t sign = (f.subvector_weight(c, 0) & 1) ? -1 : 1;
    return sign * (int64_t)f.sqrt_q() - (int64_t)((f.sqrt_q() + 1) / lm) * s_a;
}

ValueSetReport s_value_set(const FieldCtx& f) {
    ValueSetReport rep;
    const int64_t lm = f.lm();
    for (uint32_t j = 1; j <= f.s() / 2; ++j) rep.claimed.push_back(lm - 4 * (int64_t)j);
    for (uint64_t a = 1; a < f.q(); ++a) ++rep.attained[s_value(f, (FieldElem)a, SumMethod::kClosed)];
    for (int64_t v : rep.claimed)
        if (!rep.attained.count(v)) rep.unattained.push_back(v);
    for (const auto& [v, cnt] : rep.attained) {
        (void)cnt;
        bool claimed = false;
        for (int64_t c : rep.claimed) claimed |= (c == v);
        if (!claimed) rep.unexpected.push_back(v);
    }
    return rep;
}

bool even_class(const FieldCtx& f, FieldElem a, FieldElem u) {
    return (f.subvector_weight(f.mul(a, f.inv(f.unity_proj(u))), 0) & 1) == 0;
}

ParityPartition ea_oa(const FieldCtx& f, FieldElem a) {
    if (a == 0) throw std::invalid_argument("ea_oa: a must be nonzero");
    ParityPartition p;
    for (uint64_t u = 1; u < f.q(); ++u)
        (even_class(f, a, (FieldElem)u) ? p.even : p.odd).push_back((FieldElem)u);
    return p;
}

int64_t even_class_size_closed(const FieldCtx& f, FieldElem a) {
    const int64_t lm = f.lm();
    return (int64_t)((f.q() - 1) / lm) * ((lm + s_value(f, a, SumMethod::kClosed)) / 2);
}

int64_t odd_class_size_closed(const FieldCtx& f, FieldElem a) {
    const int64_t lm = f.lm();
    return (int64_t)((f.q() - 1) / lm) * ((lm - s_value(f, a, SumMethod::kClosed)) / 2);
}

}  // namespace tracecode
