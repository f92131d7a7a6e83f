#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tracecode/gf2field.hpp"

namespace tracecode {

enum class SumMethod { kBrute, kClosed };

// S(a) = sum over i < l^m of chi(a * alpha^i). Brute evaluates the definition;
// closed sums (-1)^wt(a^(i)) * (l - 2 wt(a^(i))) over the subvector slices.
int64_t s_value(const FieldCtx& f, FieldElem a, SumMethod method);

// S(a,b) = sum over x in F_q^* of chi(a x^((q-1)/l^m) + b x); requires a != 0.
// Closed form: ((q-1)/l^m) S(a) for b = 0, else
// (-1)^wt(c^(0)) sqrt(q) - ((sqrt(q)+1)/l^m) S(a) with c = a b^(-(q-1)/l^m).
int64_t s_ab(const FieldCtx& f, FieldElem a, FieldElem b, SumMethod method);

// The multiset {S(a) : a in F_q^*} against the predicted support
// {l^m - 4j : j = 1..phi(l^m)/2}. Unattained / unexpected values are reported,
// never silently accepted.
struct ValueSetReport {
    std::map<int64_t, uint64_t> attained;  // value -> number of a attaining it
    std::vector<int64_t> claimed;
    std::vector<int64_t> unattained;   // claimed but never attained
    std::vector<int64_t> unexpected;   // attained but not claimed
    bool exact_match() const { return unattained.empty() && unexpected.empty(); }
};
ValueSetReport s_value_set(const FieldCtx& f);

// u belongs to the even class of a iff wt((a u^(-(q-1)/l^m))^(0)) is even.
bool even_class(const FieldCtx& f, FieldElem a, FieldElem u);

// Partition of F_q^* into the even/odd classes of a; requires a != 0.
struct ParityPartition {
    std::vector<FieldElem> even, odd;
};
ParityPartition ea_oa(const FieldCtx& f, FieldElem a);

// Closed-form class sizes (q-1)(1 +- S(a)/l^m)/2.
int64_t even_class_size_closed(const FieldCtx& f, FieldElem a);
int64_t odd_class_size_closed(const FieldCtx& f, FieldElem a);

}  // namespace tracecode
