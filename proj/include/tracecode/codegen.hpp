#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tracecode/expsum.hpp"

namespace tracecode {

// A code instance: the defining set lives in F_q^2 and consists of the
// nonzero points (x, y) with Tr(a x^((q-1)/l^m) + b y) = 0. a must be nonzero,
// b may be zero.
struct CodeSpec {
    Params params;
    FieldElem a = 0;
    FieldElem b = 0;
};

CodeSpec make_spec(const FieldCtx& f, FieldElem a, FieldElem b);

// Points (x, y) packed as x | y << s, listed in ascending packed order.
// point_pair[i] = psi(x) | psi(y) << s, so the codeword bit of (u, v) at
// position i is parity((u | v << s) & point_pair[i]).
struct DefiningSet {
    uint32_t s = 0;
    std::vector<uint64_t> points;
    std::vector<uint64_t> point_pair;
    std::vector<uint64_t> member;  // bitmap over all q^2 packed values
    uint64_t n() const { return points.size(); }
    bool contains(uint64_t p) const { return (member[p >> 6] >> (p & 63)) & 1; }
};

DefiningSet build_defining_set(const FieldCtx& f, const CodeSpec& spec);

// Closed-form length: q(q+1+S(a,0))/2 - 1 for b = 0, q^2/2 - 1 otherwise.
uint64_t length_closed(const FieldCtx& f, const CodeSpec& spec);

struct CodewordView {
    std::vector<uint64_t> bits;  // bit i <-> points[i]
    uint64_t weight = 0;
};
CodewordView codeword(const FieldCtx& f, const DefiningSet& d, FieldElem u, FieldElem v);

// Case-split closed form for wt(c_(u,v)); (u, v) != (0, 0).
uint64_t weight_closed(const FieldCtx& f, const CodeSpec& spec, FieldElem u, FieldElem v);

enum class DistMethod { kBrute, kClosed, kTransform };

// Weight -> multiplicity over all q^2 formal codewords c_(u,v). The formal
// map can fail to be injective for some parameters; such specs are flagged
// degenerate, and the closed method then refuses with a report instead of a
// table (the published forms assume injectivity).
struct WeightDistribution {
    std::map<uint64_t, uint64_t> counts;
    unsigned formal_dimension = 0;   // 2 phi(l^m)
    unsigned empirical_dimension = 0;
    uint64_t kernel_size = 1;
    bool degenerate = false;
    std::string inapplicable;  // nonempty iff the closed method refused
};

WeightDistribution weight_distribution(const FieldCtx& f, const CodeSpec& spec, DistMethod method);

struct DimensionReport {
    unsigned formal_dimension = 0;
    unsigned empirical_dimension = 0;
    std::vector<uint64_t> kernel;  // packed (u,v) with zero codeword, includes 0
};
DimensionReport empirical_dimension(const FieldCtx& f, const DefiningSet& d);

// True iff some nonzero formal codeword has weight zero, decided from the
// closed-form case weights alone (no enumeration).
bool degenerate_closed(const FieldCtx& f, const CodeSpec& spec);

// Empirical check that no coordinate position vanishes on every codeword.
bool dual_distance_at_least_2(const FieldCtx& f, const DefiningSet& d);

struct Ratio {
    uint64_t num = 0, den = 0;       // reduced min/max nonzero weights
    uint64_t min_weight = 0, max_weight = 0;
    bool exceeds_half = false;
};
// From the brute distribution; throws std::domain_error on degenerate specs.
Ratio minmax_ratio(const FieldCtx& f, const CodeSpec& spec);

// 2s rows (unit (u,v) vectors, u bits first), n columns of '0'/'1'.
void write_generator_matrix(std::ostream& os, const FieldCtx& f, const DefiningSet& d);

}  // namespace tracecode
