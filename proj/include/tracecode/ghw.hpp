#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracecode/codegen.hpp"

namespace tracecode {

// A GF(2)-subspace of GF(2)^ambient in canonical reduced row-echelon form:
// row pivots (lowest set bits) strictly increasing, pivot columns cleared in
// every other row. Each subspace has exactly one such basis.
struct SubspaceBasis {
    unsigned ambient = 0;
    std::vector<uint64_t> rows;
    unsigned dim() const { return (unsigned)rows.size(); }
    bool operator==(const SubspaceBasis&) const = default;
};

SubspaceBasis rref_span(unsigned ambient, std::vector<uint64_t> vecs);
bool subspace_contains(const SubspaceBasis& h, uint64_t v);

// Orthogonal complement under the standard dot product on GF(2)^ambient.
SubspaceBasis std_complement(const SubspaceBasis& h);

// Dual under the trace pairing Tr(u1 x + u2 y) on F_q^2 (packed u1 | u2 << s):
// dim H + dim H^dual = 2s and (H^dual)^dual = H.
SubspaceBasis dual_subspace(const FieldCtx& f, const SubspaceBasis& h);

// Streams every k-dimensional subspace of GF(2)^ambient exactly once, in
// canonical order: pivot-column sets ascending lexicographically, free-entry
// assignments in counter order. combo_offset/combo_stride partition the
// stream at pivot-set granularity for worker threads.
class SubspaceEnumerator {
  public:
    SubspaceEnumerator(unsigned ambient, unsigned k, uint64_t combo_offset = 0,
                       uint64_t combo_stride = 1);
    bool next(SubspaceBasis& out);

  private:
    bool advance_combo(uint64_t steps);
    void prepare();

    unsigned t_ = 0, k_ = 0;
    uint64_t stride_ = 1;
    bool done_ = false;
    std::vector<unsigned> combo_;
    std::vector<std::pair<unsigned, unsigned>> slots_;  // (row, column) of each free entry
    uint64_t counter_ = 0, counter_end_ = 0;
};

uint64_t subspace_count(unsigned ambient, unsigned k);  // = gaussian_binomial

// |D ∩ H| by walking the 2^dim(H) - 1 nonzero vectors of H.
uint64_t intersect_count(const DefiningSet& d, const SubspaceBasis& h);

// Double character sum over F_q^2 x H_r with the defining form in the
// exponent; evaluated by direct summation (independent of everything else).
// Satisfies 2^(r+1) (|D ∩ H_r^dual| + 1) = q^2 + B exactly.
int64_t b_h_sum(const FieldCtx& f, const CodeSpec& spec, const SubspaceBasis& h_r);

enum class GhwMethod { kBrute, kClosed, kBoth };
enum class GhwStatus { kBoth, kBrute, kClosed, kSkippedBudget, kInapplicable };
enum class GhwSide { kAuto, kDirect, kDual };

struct GhwOptions {
    uint64_t budget = 10'000'000'000ULL;  // approximate word-operation cap per r
    unsigned threads = 1;
    GhwSide force_side = GhwSide::kAuto;  // kAuto picks the cheaper enumeration side
};

struct BruteResult {
    GhwStatus status = GhwStatus::kInapplicable;
    uint64_t d = 0;
    SubspaceBasis witness;  // subspace K with |D ∩ K| = n - d (dim = codim r)
    uint64_t enumerated = 0;
    GhwSide side = GhwSide::kDirect;
    std::string note;
};

// Exact d_r = n - max |D ∩ K| over (2s - r)-dimensional K, via the cheaper of
// direct enumeration or dual-side bitset AND/popcount. Refuses degenerate
// specs (kInapplicable) and over-budget enumerations (kSkippedBudget); never
// returns an approximate value.
BruteResult ghw_bruteforce(const FieldCtx& f, const CodeSpec& spec, const DefiningSet& d, unsigned r,
                           const GhwOptions& opt = {});

// Closed-form d_r (branching on b, the sign of S(a) and r vs phi(l^m)/2);
// nullopt when the spec is degenerate and the forms do not apply.
std::optional<uint64_t> ghw_closed(const FieldCtx& f, const CodeSpec& spec, unsigned r);

// The explicit maximizing subspace used to prove attainment: for
// r <= phi(l^m)/2 a dim-r subspace built inside beta*F_sqrt(q) (x-side, with
// the b-row variants), for larger r a dim-(2s-r) subspace of
// x*F_sqrt(q) x F_q (or x T_b). Evaluating the intersection through it must
// reach the enumerated maximum exactly.
struct Witness {
    SubspaceBasis subspace;
    // true: subspace is the dim-r double-sum maximizer; its trace dual meets
    // D in the maximum. false: subspace itself is the dim-(2s-r) maximizer.
    bool dual_side = false;
    SubspaceBasis intersecting_side(const FieldCtx& f) const;
};
Witness witness_subspace(const FieldCtx& f, const CodeSpec& spec, unsigned r);

struct GhwRow {
    unsigned r = 0;
    GhwStatus method = GhwStatus::kInapplicable;
    std::optional<uint64_t> d_brute, d_closed;
    std::optional<SubspaceBasis> witness;  // meets D in n - d_r points
    std::string note;
    std::optional<uint64_t> d() const { return d_brute ? d_brute : d_closed; }
};

struct GhwTable {
    bool degenerate = false;
    unsigned formal_dimension = 0;
    unsigned actual_dimension = 0;
    std::vector<GhwRow> rows;
    std::vector<std::string> discrepancies;
};

// Per-r hierarchy with method provenance. For degenerate specs the closed
// forms are marked inapplicable for every r and the brute values are computed
// on the actual (smaller) code by working inside the orthogonal complement of
// the codeword-map kernel.
GhwTable ghw_table(const FieldCtx& f, const CodeSpec& spec, const DefiningSet& d, GhwMethod method,
                   const std::vector<unsigned>& r_list = {}, const GhwOptions& opt = {});

}  // namespace tracecode
