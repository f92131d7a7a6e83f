#include "doctest.h"
#include "tracecode/expsum.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

using namespace tracecode;

namespace {
const FieldCtx& field(uint32_t l, uint32_t m) {
    static std::map<std::pair<uint32_t, uint32_t>, FieldCtx> cache;
    auto it = cache.find({l, m});
    if (it == cache.end()) it = cache.emplace(std::make_pair(l, m), FieldCtx(Params::validate(l, m))).first;
    return it->second;
}
}  // namespace

TEST_CASE("projected sum values") {
    const FieldCtx& f32 = field(3, 2);
    CHECK(s_value(f32, 0, SumMethod::kBrute) == 9);  // every summand is +1
    CHECK(s_value(f32, 0, SumMethod::kClosed) == 9);
    CHECK(s_value(f32, 1, SumMethod::kBrute) == 5);
    CHECK(s_value(f32, 1, SumMethod::kClosed) == 5);
    const FieldCtx& f51 = field(5, 1);
    CHECK(s_value(f51, 0, SumMethod::kBrute) == 5);
    CHECK(s_value(f51, 1, SumMethod::kBrute) == -3);
    CHECK(s_value(f51, 1, SumMethod::kClosed) == -3);
}

TEST_CASE("closed and brute sums agree everywhere") {
    for (auto [l, m] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {3, 2}}) {
        const FieldCtx& f = field(l, m);
        for (uint64_t a = 0; a < f.q(); ++a)
            CHECK(s_value(f, (FieldElem)a, SumMethod::kBrute) ==
                  s_value(f, (FieldElem)a, SumMethod::kClosed));
    }
}

TEST_CASE("two-parameter sums") {
    const FieldCtx& f51 = field(5, 1);
    CHECK(s_ab(f51, 1, 0, SumMethod::kClosed) == -9);
    CHECK(s_ab(f51, 1, 0, SumMethod::kBrute) == -9);
    CHECK(s_ab(f51, 1, 1, SumMethod::kClosed) == 7);
    CHECK(s_ab(f51, 1, 1, SumMethod::kBrute) == 7);
    const FieldCtx& f32 = field(3, 2);
    CHECK(s_ab(f32, 1, 1, SumMethod::kClosed) == 3);
    CHECK(s_ab(f32, 1, 1, SumMethod::kBrute) == 3);
    CHECK_THROWS_AS(s_ab(f51, 0, 1, SumMethod::kBrute), std::invalid_argument);
}

TEST_CASE("two-parameter sums agree exhaustively at small q and sampled at q = 64") {
    for (auto [l, m] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}}) {
        const FieldCtx& f = field(l, m);
        for (uint64_t a = 1; a < f.q(); ++a)
            for (uint64_t b = 0; b < f.q(); ++b)
                CHECK(s_ab(f, (FieldElem)a, (FieldElem)b, SumMethod::kBrute) ==
                      s_ab(f, (FieldElem)a, (FieldElem)b, SumMethod::kClosed));
    }
    const FieldCtx& f = field(3, 2);
    std::mt19937_64 rng(0);
    for (int i = 0; i < 1000; ++i) {
        const FieldElem a = (FieldElem)(1 + rng() % (f.q() - 1));
        const FieldElem b = (FieldElem)(rng() % f.q());
        CHECK(s_ab(f, a, b, SumMethod::kBrute) == s_ab(f, a, b, SumMethod::kClosed));
    }
}

TEST_CASE("value sets and attainment") {
    const auto v31 = s_value_set(field(3, 1));
    CHECK(v31.claimed == std::vector<int64_t>{-1});
    CHECK(v31.exact_match());
    const auto v51 = s_value_set(field(5, 1));
    CHECK(v51.claimed == std::vector<int64_t>{1, -3});
    CHECK(v51.exact_match());
    CHECK(v51.attained.at(1) == 10);
    CHECK(v51.attained.at(-3) == 5);
    const auto v32 = s_value_set(field(3, 2));
    CHECK(v32.claimed == std::vector<int64_t>{5, 1, -3});
    CHECK(v32.unexpected.empty());
    CHECK(v32.exact_match());  // all three values are attained at q = 64
}

TEST_CASE("sum values stay in the predicted set and have the right residue") {
    for (auto [l, m] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {3, 2}}) {
        const FieldCtx& f = field(l, m);
        const auto vs = s_value_set(f);
        std::set<int64_t> claimed(vs.claimed.begin(), vs.claimed.end());
        for (uint64_t a = 1; a < f.q(); ++a) {
            const int64_t v = s_value(f, (FieldElem)a, SumMethod::kBrute);
            CHECK(claimed.count(v) == 1);
            CHECK(((v % 4) + 4) % 4 == (int64_t)(f.lm() % 4));
            CHECK(v <= (int64_t)f.lm());
            CHECK(v >= -(int64_t)f.lm());
        }
    }
}

TEST_CASE("character orthogonality over a") {
    for (auto [l, m] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {3, 2}}) {
        const FieldCtx& f = field(l, m);
        int64_t total = 0;
        for (uint64_t a = 1; a < f.q(); ++a) total += s_value(f, (FieldElem)a, SumMethod::kBrute);
        CHECK(total == -(int64_t)f.lm());
    }
}

TEST_CASE("parity classes match the closed cardinalities") {
    for (auto [l, m] : {std::pair<uint32_t, uint32_t>{5, 1}, {3, 2}}) {
        const FieldCtx& f = field(l, m);
        for (uint64_t a = 1; a < f.q(); ++a) {
            const auto p = ea_oa(f, (FieldElem)a);
            CHECK((int64_t)p.even.size() == even_class_size_closed(f, (FieldElem)a));
            CHECK((int64_t)p.odd.size() == odd_class_size_closed(f, (FieldElem)a));
            CHECK(p.even.size() + p.odd.size() == f.q() - 1);
            CHECK(!p.even.empty());
            CHECK(!p.odd.empty());
        }
    }
    CHECK_THROWS_AS(ea_oa(field(5, 1), 0), std::invalid_argument);
}

TEST_CASE("even class of a = 1 at q = 16 is the group of cube roots of unity") {
    const FieldCtx& f = field(5, 1);
    const auto p = ea_oa(f, 1);
    CHECK(p.even.size() == 3);
    for (FieldElem u : p.even) CHECK(f.pow(u, 3) == 1);
}
