#include "tracecode/ghw.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <thread>

namespace tracecode {

namespace {

constexpr unsigned kMaxAmbient = 24;
constexpr uint64_t kMaxTableWords = uint64_t(1) << 24;

uint64_t low_mask(uint32_t s) { return (uint64_t(1) << s) - 1; }

struct Candidate {
    bool has = false;
    uint64_t best = 0;
    std::vector<uint64_t> rows;

    void consider(uint64_t val, const std::vector<uint64_t>& r) {
        if (!has || val > best) {
            has = true;
            best = val;
            rows = r;
        } else if (val == best &&
                   std::lexicographical_compare(r.begin(), r.end(), rows.begin(), rows.end())) {
            rows = r;
        }
    }
    void merge(const Candidate& o) {
        if (o.has) consider(o.best, o.rows);
    }
};

// Point set in some coordinate system on GF(2)^ambient: pts/member drive the
// direct enumeration side, pair_pts the dual indicator side.
struct PointSystem {
    unsigned ambient = 0;
    const std::vector<uint64_t>* pts = nullptr;
    const std::vector<uint64_t>* pair_pts = nullptr;
    const std::vector<uint64_t>* member = nullptr;
};

struct MaxResult {
    bool ok = false;
    uint64_t best = 0;
    SubspaceBasis arg;  // dim-k subspace for kDirect, dim-(ambient-k) for kDual
    uint64_t enumerated = 0;
    GhwSide side = GhwSide::kDirect;
    std::string note;
};

// max over k-dimensional subspaces K of |P ∩ K|, exact.
MaxResult max_intersect(const PointSystem& ps, unsigned k, const GhwOptions& opt) {
    MaxResult res;
    const unsigned t = ps.ambient;
    const uint64_t npts = ps.pts->size();
    if (k == 0) {
        res.ok = true;
        res.best = 0;
        res.arg = SubspaceBasis{t, {}};
        res.enumerated = 1;
        return res;
    }
    const unsigned r = t - k;
    const uint64_t count = gaussian_binomial_capped(t, std::min(k, r), UINT64_MAX);
    const unsigned words = (unsigned)((npts + 63) / 64);
    const __int128 direct_cost = (__int128)count * ((uint64_t(1) << std::min(k, 40u)) + 8);
    const __int128 table_words = ((__int128)1 << t) * words;
    const bool table_ok = t <= kMaxAmbient && table_words <= (__int128)kMaxTableWords;
    const __int128 dual_cost = table_words + (__int128)count * ((uint64_t)r * words + 8);

    GhwSide side = opt.force_side;
    if (side == GhwSide::kAuto)
        side = (table_ok && dual_cost < direct_cost) ? GhwSide::kDual : GhwSide::kDirect;
    if (side == GhwSide::kDual && !table_ok) {
        res.note = "dual-side indicator table infeasible for this size";
        return res;
    }
    const __int128 cost = side == GhwSide::kDual ? dual_cost : direct_cost;
    if (t > kMaxAmbient || cost > (__int128)opt.budget) {
        const uint64_t shown =
            cost > (__int128)UINT64_MAX ? UINT64_MAX : (uint64_t)cost;
        res.note = "enumeration refused: " + std::to_string(count) + " subspaces, ~" +
                   std::to_string(shown) + " word-ops exceed budget " + std::to_string(opt.budget);
        return res;
    }

    const unsigned nthreads = std::max(1u, std::min(opt.threads, 64u));
    std::vector<Candidate> cands(nthreads);
    std::vector<uint64_t> counts(nthreads, 0);

    std::vector<uint64_t> table;
    if (side == GhwSide::kDual) {
        table.assign((size_t)(uint64_t(1) << t) * words, 0);
        const auto& pp = *ps.pair_pts;
        for (unsigned b = 0; b < t; ++b) {
            uint64_t* row = table.data() + (size_t)(uint64_t(1) << b) * words;
            for (uint64_t i = 0; i < npts; ++i)
                row[i >> 6] |= ((pp[i] >> b) & 1u) << (i & 63);
        }
        for (uint64_t w = 3; w < (uint64_t(1) << t); ++w) {
            if ((w & (w - 1)) == 0) continue;
            const uint64_t* a = table.data() + (size_t)(w & (w - 1)) * words;
            const uint64_t* b = table.data() + (size_t)(w & (~w + 1)) * words;
            uint64_t* dst = table.data() + (size_t)w * words;
            for (unsigned j = 0; j < words; ++j) dst[j] = a[j] ^ b[j];
        }
    }

    auto worker = [&](unsigned id) {
        Candidate& cand = cands[id];
        const unsigned dim = side == GhwSide::kDual ? r : k;
        SubspaceEnumerator en(t, dim, id, nthreads);
        SubspaceBasis h;
        if (side == GhwSide::kDual) {
            std::vector<uint64_t> acc(words);
            while (en.next(h)) {
                ++counts[id];
                const uint64_t* r0 = table.data() + (size_t)h.rows[0] * words;
                for (unsigned j = 0; j < words; ++j) acc[j] = r0[j];
                for (unsigned i = 1; i < dim; ++i) {
                    const uint64_t* ri = table.data() + (size_t)h.rows[i] * words;
                    for (unsigned j = 0; j < words; ++j) acc[j] |= ri[j];
                }
                uint64_t ones = 0;
                for (unsigned j = 0; j < words; ++j) ones += std::popcount(acc[j]);
                cand.consider(npts - ones, h.rows);
            }
        } else {
            const auto& member = *ps.member;
            while (en.next(h)) {
                ++counts[id];
                uint64_t p = 0, cnt = 0;
                for (uint64_t g = 1; g < (uint64_t(1) << dim); ++g) {
                    p ^= h.rows[std::countr_zero(g)];
                    cnt += (member[p >> 6] >> (p & 63)) & 1;
                }
                cand.consider(cnt, h.rows);
            }
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }

    Candidate total;
    for (const auto& c : cands) total.merge(c);
    for (uint64_t c : counts) res.enumerated += c;
    if (!total.has) {
        res.note = "enumeration produced no subspace";
        return res;
    }
    res.ok = true;
    res.best = total.best;
    res.arg = SubspaceBasis{t, total.rows};
    res.side = side;
    return res;
}

PointSystem main_system(const DefiningSet& d) {
    PointSystem ps;
    ps.ambient = 2 * d.s;
    ps.pts = &d.points;
    ps.pair_pts = &d.point_pair;
    ps.member = &d.member;
    return ps;
}

// Coordinates of the defining set inside the complement of the codeword-map
// kernel; used to compute hierarchies of degenerate (rank-deficient) specs on
// the code that actually exists.
struct QuotientSystem {
    SubspaceBasis w_perp;  // complement of the kernel, RREF rows in F_q^2
    std::vector<uint64_t> pts;
    std::vector<uint64_t> member;
    unsigned dim = 0;

    uint64_t to_ambient(uint64_t lambda) const {
        uint64_t v = 0;
        while (lambda) {
            v ^= w_perp.rows[std::countr_zero(lambda)];
            lambda &= lambda - 1;
        }
        return v;
    }
};

QuotientSystem make_quotient(const FieldCtx& f, const DefiningSet& d,
                             const std::vector<uint64_t>& kernel) {
    QuotientSystem qs;
    const SubspaceBasis w = rref_span(2 * f.s(), kernel);
    qs.w_perp = dual_subspace(f, w);
    qs.dim = qs.w_perp.dim();
    qs.pts.reserve(d.points.size());
    qs.member.assign(((uint64_t(1) << qs.dim) + 63) / 64, 0);
    for (uint64_t p : d.points) {
        uint64_t lambda = 0;
        for (unsigned i = 0; i < qs.dim; ++i)
            lambda |= ((p >> std::countr_zero(qs.w_perp.rows[i])) & 1u) << i;
        if (qs.to_ambient(lambda) != p)
            throw std::logic_error("defining-set point escapes the kernel complement");
        qs.pts.push_back(lambda);
        qs.member[lambda >> 6] |= uint64_t(1) << (lambda & 63);
    }
    return qs;
}

}  // namespace

SubspaceBasis rref_span(unsigned ambient, std::vector<uint64_t> vecs) {
    if (ambient > 63) throw std::invalid_argument("rref_span: ambient dimension too large");
    std::array<uint64_t, 64> piv{};
    for (uint64_t v : vecs) {
        for (unsigned b = 0; b < ambient; ++b)
            if (((v >> b) & 1) && piv[b]) v ^= piv[b];
        if (!v) continue;
        const unsigned b = std::countr_zero(v);
        for (unsigned b2 = 0; b2 < ambient; ++b2)
            if (piv[b2] && ((piv[b2] >> b) & 1)) piv[b2] ^= v;
        piv[b] = v;
    }
    SubspaceBasis out;
    out.ambient = ambient;
    for (unsigned b = 0; b < ambient; ++b)
        if (piv[b]) out.rows.push_back(piv[b]);
    return out;
}

bool subspace_contains(const SubspaceBasis& h, uint64_t v) {
    for (uint64_t row : h.rows)
        if ((v >> std::countr_zero(row)) & 1) v ^= row;
    return v == 0;
}

SubspaceBasis std_complement(const SubspaceBasis& h) {
    const unsigned t = h.ambient;
    uint64_t pivot_mask = 0;
    for (uint64_t row : h.rows) pivot_mask |= row & (~row + 1);
    std::vector<uint64_t> basis;
    for (unsigned c = 0; c < t; ++c) {
        if ((pivot_mask >> c) & 1) continue;
        uint64_t v = uint64_t(1) << c;
        for (uint64_t row : h.rows)
            if ((row >> c) & 1) v |= row & (~row + 1);
        basis.push_back(v);
    }
    return rref_span(t, std::move(basis));
}

SubspaceBasis dual_subspace(const FieldCtx& f, const SubspaceBasis& h) {
    const uint32_t s = f.s();
    if (h.ambient != 2 * s) throw std::invalid_argument("dual_subspace: ambient must be 2*phi(l^m)");
    std::vector<uint64_t> mapped;
    mapped.reserve(h.rows.size());
    for (uint64_t w : h.rows) {
        const FieldElem lo = (FieldElem)(w & low_mask(s));
        const FieldElem hi = (FieldElem)(w >> s);
        mapped.push_back((uint64_t)f.psi(lo) | ((uint64_t)f.psi(hi) << s));
    }
    return std_complement(rref_span(2 * s, std::move(mapped)));
}

SubspaceEnumerator::SubspaceEnumerator(unsigned ambient, unsigned k, uint64_t combo_offset,
                                       uint64_t combo_stride)
    : t_(ambient), k_(k), stride_(combo_stride) {
    if (ambient > kMaxAmbient)
        throw std::invalid_argument("subspace enumeration capped at ambient dimension 24");
    if (k > ambient) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    if (combo_stride == 0) throw std::invalid_argument("stride must be positive");
    if (k_ == 0) {
        done_ = combo_offset != 0;
        return;
    }
    combo_.resize(k_);
    for (unsigned i = 0; i < k_; ++i) combo_[i] = i;
    if (combo_offset > 0 && !advance_combo(combo_offset)) {
        done_ = true;
        return;
    }
    prepare();
}

bool SubspaceEnumerator::advance_combo(uint64_t steps) {
    while (steps--) {
        int i = (int)k_ - 1;
        while (i >= 0 && combo_[i] == t_ - k_ + i) --i;
        if (i < 0) return false;
        ++combo_[i];
        for (unsigned j = i + 1; j < k_; ++j) combo_[j] = combo_[j - 1] + 1;
    }
    return true;
}

void SubspaceEnumerator::prepare() {
    slots_.clear();
    uint64_t pivot_mask = 0;
    for (unsigned c : combo_) pivot_mask |= uint64_t(1) << c;
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned c = combo_[i] + 1; c < t_; ++c)
            if (!((pivot_mask >> c) & 1)) slots_.emplace_back(i, c);
    if (slots_.size() >= 63) throw std::invalid_argument("subspace family too large to enumerate");
    counter_ = 0;
    counter_end_ = uint64_t(1) << slots_.size();
}

bool SubspaceEnumerator::next(SubspaceBasis& out) {
    if (done_) return false;
    if (k_ == 0) {
        out.ambient = t_;
        out.rows.clear();
        done_ = true;
        return true;
    }
    if (counter_ == counter_end_) {
        if (!advance_combo(stride_)) {
            done_ = true;
            return false;
        }
        prepare();
    }
    out.ambient = t_;
    out.rows.assign(k_, 0);
    for (unsigned i = 0; i < k_; ++i) out.rows[i] = uint64_t(1) << combo_[i];
    uint64_t c = counter_;
    while (c) {
        const unsigned sl = std::countr_zero(c);
        out.rows[slots_[sl].first] |= uint64_t(1) << slots_[sl].second;
        c &= c - 1;
    }
    ++counter_;
    return true;
}

uint64_t subspace_count(unsigned ambient, unsigned k) { return gaussian_binomial(ambient, k); }

uint64_t intersect_count(const DefiningSet& d, const SubspaceBasis& h) {
    const unsigned k = h.dim();
    if (k > 30) throw std::invalid_argument("intersect_count: subspace too large to walk");
    uint64_t p = 0, cnt = 0;
    for (uint64_t g = 1; g < (uint64_t(1) << k); ++g) {
        p ^= h.rows[std::countr_zero(g)];
        cnt += d.contains(p);
    }
    return cnt;
}

int64_t b_h_sum(const FieldCtx& f, const CodeSpec& spec, const SubspaceBasis& h_r) {
    const uint32_t s = f.s();
    const uint64_t q = f.q();
    if (2 * s > kMaxAmbient) throw std::invalid_argument("b_h_sum: field too large for direct summation");
    if (h_r.dim() > 20) throw std::invalid_argument("b_h_sum: subspace too large for direct summation");
    std::vector<uint8_t> defx(q), defy(q);
    for (uint64_t x = 0; x < q; ++x)
        defx[x] = (uint8_t)f.trace(f.mul(spec.a, f.unity_proj((FieldElem)x)));
    for (uint64_t y = 0; y < q; ++y) defy[y] = (uint8_t)f.trace(f.mul(spec.b, (FieldElem)y));
    int64_t total = 0;
    const uint64_t nbeta = uint64_t(1) << h_r.dim();
    for (uint64_t y = 0; y < q; ++y) {
        const uint64_t psi_y = (uint64_t)f.psi((FieldElem)y) << s;
        for (uint64_t x = 0; x < q; ++x) {
            const uint64_t w = f.psi((FieldElem)x) | psi_y;
            const unsigned d0 = defx[x] ^ defy[y];
            int64_t sub = d0 ? -1 : 1;
            uint64_t beta = 0;
            for (uint64_t g = 1; g < nbeta; ++g) {
                beta ^= h_r.rows[std::countr_zero(g)];
                sub += ((std::popcount(beta & w) & 1u) ^ d0) ? -1 : 1;
            }
            total += sub;
        }
    }
    return total;
}

BruteResult ghw_bruteforce(const FieldCtx& f, const CodeSpec& spec, const DefiningSet& d, unsigned r,
                           const GhwOptions& opt) {
    const uint32_t s = f.s();
    if (r < 1 || r > 2 * s) throw std::invalid_argument("ghw_bruteforce: r out of range");
    BruteResult res;
    if (degenerate_closed(f, spec)) {
        res.status = GhwStatus::kInapplicable;
        res.note = "spec is degenerate (codeword map not injective); hierarchy of the formal code undefined";
        return res;
    }
    const MaxResult mr = max_intersect(main_system(d), 2 * s - r, opt);
    if (!mr.ok) {
        res.status = GhwStatus::kSkippedBudget;
        res.note = mr.note;
        return res;
    }
    res.status = GhwStatus::kBrute;
    res.d = d.n() - mr.best;
    res.enumerated = mr.enumerated;
    res.side = mr.side;
    res.witness = mr.side == GhwSide::kDual ? dual_subspace(f, mr.arg) : mr.arg;
    return res;
}

std::optional<uint64_t> ghw_closed(const FieldCtx& f, const CodeSpec& spec, unsigned r) {
    const uint32_t s = f.s(), s2 = s / 2;
    if (r < 1 || r > 2 * s) throw std::invalid_argument("ghw_closed: r out of range");
    if (degenerate_closed(f, spec)) return std::nullopt;
    const __int128 q = (__int128)f.q();
    const int64_t sq = f.sqrt_q();
    const int64_t lm = f.lm();
    const int64_t s_a = s_value(f, spec.a, SumMethod::kClosed);
    if (s_a == 0) throw std::logic_error("S(a) = 0 cannot occur for odd l");
    __int128 d;
    if (spec.b == 0) {
        if (r <= s2) {
            const __int128 x = q - sq + (q + sq) / lm * s_a;
            d = (q * ((uint64_t(1) << r) - 1) * x) >> (r + 1);
        } else {
            const __int128 np1 = q * (q + 1 + (q - 1) / lm * s_a) / 2;
            d = np1 - ((__int128)1 << (2 * s - r));
        }
    } else {
        if (r <= s2) {
            d = q * q / 2 - (q * q >> (r + 1)) - q * ((sq + 1) / lm) * ((lm - s_a) / 4);
            if (s_a > 0) d += ((q * sq) >> (r + 1)) * (1 - (sq + 1) / lm * s_a);
        } else {
            d = q * q / 2 - ((__int128)1 << (2 * s - r));
        }
    }
    if (d <= 0) return std::nullopt;
    return (uint64_t)d;
}

SubspaceBasis Witness::intersecting_side(const FieldCtx& f) const {
    return dual_side ? dual_subspace(f, subspace) : subspace;
}

Witness witness_subspace(const FieldCtx& f, const CodeSpec& spec, unsigned r) {
    const uint32_t s = f.s(), s2 = s / 2;
    if (r < 1 || r > 2 * s) throw std::invalid_argument("witness_subspace: r out of range");
    if (degenerate_closed(f, spec))
        throw std::domain_error("witness_subspace: construction unavailable for degenerate specs");

    // GF(2)-basis of the subfield of size sqrt(q): kernel of x -> x^sqrt(q) + x.
    std::vector<uint64_t> frob_rows(s, 0);
    for (uint32_t j = 0; j < s; ++j) {
        const FieldElem img = f.pow(FieldElem(1) << j, f.sqrt_q()) ^ (FieldElem(1) << j);
        for (uint32_t i = 0; i < s; ++i) frob_rows[i] |= (uint64_t)((img >> i) & 1) << j;
    }
    const SubspaceBasis subfield = std_complement(rref_span(s, frob_rows));
    if (subfield.dim() != s2) throw std::logic_error("subfield basis has wrong dimension");

    if (r <= s2) {
        FieldElem beta = 0;
        for (uint64_t u = 1; u < f.q(); ++u)
            if (even_class(f, spec.a, (FieldElem)u)) {
                beta = (FieldElem)u;
                break;
            }
        if (beta == 0) throw std::logic_error("even class is empty");
        std::vector<uint64_t> vecs;
        if (spec.b == 0) {
            for (unsigned i = 0; i < r; ++i)
                vecs.push_back(f.mul(beta, (FieldElem)subfield.rows[i]));
        } else {
            const int64_t s_a = s_value(f, spec.a, SumMethod::kClosed);
            for (unsigned i = 0; i + 1 < r; ++i)
                vecs.push_back(f.mul(beta, (FieldElem)subfield.rows[i]));
            if (s_a < 0) {
                const FieldElem xi = f.mul(beta, (FieldElem)subfield.rows[r - 1]);
                vecs.push_back((uint64_t)xi | ((uint64_t)spec.b << s));
            } else {
                vecs.push_back((uint64_t)spec.b << s);
            }
        }
        SubspaceBasis h = rref_span(2 * s, std::move(vecs));
        if (h.dim() != r) throw std::logic_error("witness construction lost rank");
        return Witness{std::move(h), true};
    }

    // Large r: a (2s - r)-dimensional subspace consisting of defining-set
    // points (plus 0), inside x0*F_sqrt(q) x F_q  (b = 0) or x0*F_sqrt(q) x T_b.
    FieldElem x0 = 0;
    for (uint64_t x = 1; x < f.q(); ++x)
        if (f.trace(f.mul(spec.a, f.unity_proj((FieldElem)x))) == 0) {
            x0 = (FieldElem)x;
            break;
        }
    if (x0 == 0) throw std::logic_error("no nonzero x with vanishing defining form");
    std::vector<uint64_t> pool;
    if (spec.b == 0) {
        for (uint32_t j = 0; j < s; ++j) pool.push_back(uint64_t(1) << (s + j));
    } else {
        const SubspaceBasis tb = std_complement(rref_span(s, {(uint64_t)f.psi(spec.b)}));
        for (uint64_t row : tb.rows) pool.push_back(row << s);
    }
    for (unsigned i = 0; i < s2; ++i)
        pool.push_back((uint64_t)f.mul(x0, (FieldElem)subfield.rows[i]));
    const unsigned k = 2 * s - r;
    if (k > pool.size()) throw std::logic_error("witness construction needs more dimensions than available");
    pool.resize(k);
    SubspaceBasis h = rref_span(2 * s, std::move(pool));
    if (h.dim() != k) throw std::logic_error("witness construction lost rank");
    return Witness{std::move(h), false};
}

GhwTable ghw_table(const FieldCtx& f, const CodeSpec& spec, const DefiningSet& d, GhwMethod method,
                   const std::vector<unsigned>& r_list, const GhwOptions& opt) {
    const uint32_t s = f.s();
    GhwTable tab;
    tab.formal_dimension = 2 * s;
    const DimensionReport dim = empirical_dimension(f, d);
    tab.actual_dimension = dim.empirical_dimension;
    tab.degenerate = dim.empirical_dimension < 2 * s;
    if (tab.degenerate != degenerate_closed(f, spec))
        tab.discrepancies.push_back("degeneracy detector disagrees with the rank computation");

    std::vector<unsigned> rs = r_list;
    if (rs.empty())
        for (unsigned r = 1; r <= 2 * s; ++r) rs.push_back(r);
    std::sort(rs.begin(), rs.end());

    QuotientSystem qs;
    PointSystem actual;
    if (tab.degenerate && method != GhwMethod::kClosed) {
        qs = make_quotient(f, d, dim.kernel);
        if (qs.dim != tab.actual_dimension)
            throw std::logic_error("kernel complement dimension disagrees with the rank");
        actual.ambient = qs.dim;
        actual.pts = &qs.pts;
        actual.pair_pts = &qs.pts;
        actual.member = &qs.member;
    }

    for (unsigned r : rs) {
        if (r < 1 || r > 2 * s) throw std::invalid_argument("ghw_table: r out of range");
        GhwRow row;
        row.r = r;
        if (!tab.degenerate) {
            if (method != GhwMethod::kBrute) row.d_closed = ghw_closed(f, spec, r);
            if (method != GhwMethod::kClosed) {
                BruteResult br = ghw_bruteforce(f, spec, d, r, opt);
                if (br.status == GhwStatus::kBrute) {
                    row.d_brute = br.d;
                    row.witness = std::move(br.witness);
                } else {
                    row.note = br.note;
                }
            }
            if (r == s / 2 && row.d_closed && row.note.empty()) {
                // the large-r formula evaluated at the boundary sometimes agrees
                const __int128 q128 = (__int128)f.q();
                const __int128 np1 =
                    spec.b == 0
                        ? q128 * (q128 + 1 +
                                  (q128 - 1) / f.lm() * s_value(f, spec.a, SumMethod::kClosed)) / 2
                        : q128 * q128 / 2;
                if (np1 - ((__int128)1 << (2 * s - r)) == (__int128)*row.d_closed)
                    row.note = "branch formulas coincide at the boundary r = phi(l^m)/2";
            }
            if (row.d_brute && row.d_closed) {
                row.method = GhwStatus::kBoth;
                if (*row.d_brute != *row.d_closed) {
                    tab.discrepancies.push_back("r=" + std::to_string(r) + ": brute " +
                                                std::to_string(*row.d_brute) + " != closed " +
                                                std::to_string(*row.d_closed));
                    row.note = "closed form disagrees with enumeration";
                }
            } else if (row.d_brute) {
                row.method = GhwStatus::kBrute;
            } else if (row.d_closed) {
                row.method = GhwStatus::kClosed;
            } else {
                row.method = GhwStatus::kSkippedBudget;
            }
        } else {
            if (method == GhwMethod::kClosed) {
                row.method = GhwStatus::kInapplicable;
                row.note = "degenerate spec: closed forms do not apply";
            } else if (r <= tab.actual_dimension) {
                const MaxResult mr = max_intersect(actual, tab.actual_dimension - r, opt);
                if (mr.ok) {
                    row.d_brute = d.n() - mr.best;
                    row.method = GhwStatus::kBrute;
                    row.note = "actual code of dimension " + std::to_string(tab.actual_dimension);
                } else {
                    row.method = GhwStatus::kSkippedBudget;
                    row.note = mr.note;
                }
            } else {
                row.method = GhwStatus::kInapplicable;
                row.note = "r exceeds the actual dimension " + std::to_string(tab.actual_dimension);
            }
        }
        tab.rows.push_back(std::move(row));
    }

    for (size_t i = 1; i < tab.rows.size(); ++i) {
        const auto &a = tab.rows[i - 1], &b = tab.rows[i];
        if (a.d() && b.d() && !(*a.d() < *b.d()))
            tab.discrepancies.push_back("hierarchy not strictly increasing between r=" +
                                        std::to_string(a.r) + " and r=" + std::to_string(b.r));
    }
    if (!tab.degenerate)
        for (const auto& row : tab.rows)
            if (row.r == 2 * s && row.d() && *row.d() != d.n())
                tab.discrepancies.push_back("d_(2s) differs from the code length");
    return tab;
}

}  // namespace tracecode
