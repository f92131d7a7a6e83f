#include "doctest.h"
#include "tracecode/verify.hpp"

#include <map>
#include <utility>

using namespace tracecode;

namespace {
const FieldCtx& field(uint32_t l, uint32_t m) {
    static std::map<std::pair<uint32_t, uint32_t>, FieldCtx> cache;
    auto it = cache.find({l, m});
    if (it == cache.end()) it = cache.emplace(std::make_pair(l, m), FieldCtx(Params::validate(l, m))).first;
    return it->second;
}

const ClaimResult* find_claim(const VerifyReport& rep, const std::string& id) {
    for (const auto& c : rep.claims)
        if (c.id == id) return &c;
    return nullptr;
}
}  // namespace

TEST_CASE("verify at q = 4: sums confirmed, every code-level claim flagged degenerate") {
    const VerifyReport rep = run_verify(field(3, 1));
    CHECK(rep.exit_code() == 0);
    CHECK(rep.count_status("discrepancy") == 0);
    CHECK(find_claim(rep, "s-closed-form")->status == "confirmed");
    CHECK(find_claim(rep, "s-ab-closed-form")->status == "confirmed");
    CHECK(find_claim(rep, "s-value-set")->status == "confirmed");
    CHECK(find_claim(rep, "dimension")->status == "inapplicable-degenerate");
    CHECK(find_claim(rep, "weight-distribution-b0")->status == "inapplicable-degenerate");
    CHECK(find_claim(rep, "weight-distribution-bnz")->status == "inapplicable-degenerate");
    CHECK(find_claim(rep, "minmax-ratio")->status == "inapplicable-degenerate");
    CHECK(find_claim(rep, "ghw-closed-b0")->status == "inapplicable-degenerate");
    CHECK(find_claim(rep, "ghw-closed-bnz")->status == "inapplicable-degenerate");
    // the known swapped-table record needs a checkable b=0 spec, absent here
    CHECK(find_claim(rep, "weight-table-b0-multiplicities") == nullptr);
    // formula-level claims still hold on degenerate specs
    CHECK(find_claim(rep, "length-formula")->status == "confirmed");
    CHECK(find_claim(rep, "codeword-weight-formula")->status == "confirmed");
    CHECK(find_claim(rep, "ghw-duality-identity")->status == "confirmed");
}

TEST_CASE("verify at q = 16: b=0 sums with S = -3 flagged, everything else confirmed") {
    const VerifyReport rep = run_verify(field(5, 1));
    CHECK(rep.exit_code() == 0);
    CHECK(rep.count_status("discrepancy") == 0);
    CHECK(rep.count_status("table-discrepancy") == 1);
    CHECK(find_claim(rep, "dimension")->status == "inapplicable-degenerate");
    CHECK(find_claim(rep, "dimension")->detail.find("5 degenerate specs") != std::string::npos);
    CHECK(find_claim(rep, "weight-distribution-b0")->status == "confirmed");
    CHECK(find_claim(rep, "weight-distribution-bnz")->status == "confirmed");
    CHECK(find_claim(rep, "ghw-closed-bnz")->status == "confirmed");
    CHECK(find_claim(rep, "ghw-witness-attainment")->status == "confirmed");
    CHECK(find_claim(rep, "ghw-duality-identity")->status == "confirmed");
    CHECK(find_claim(rep, "ghw-monotonicity")->status == "confirmed");
    CHECK(find_claim(rep, "ghw-last-equals-length")->status == "confirmed");
    CHECK(find_claim(rep, "transform-vs-brute")->status == "confirmed");
    CHECK(find_claim(rep, "pless-first-moment")->status == "confirmed");
}

TEST_CASE("verify is deterministic") {
    const VerifyReport a = run_verify(field(5, 1));
    const VerifyReport b = run_verify(field(5, 1));
    REQUIRE(a.claims.size() == b.claims.size());
    for (size_t i = 0; i < a.claims.size(); ++i) {
        CHECK(a.claims[i].id == b.claims[i].id);
        CHECK(a.claims[i].status == b.claims[i].status);
        CHECK(a.claims[i].detail == b.claims[i].detail);
    }
}

TEST_CASE("an unexplained discrepancy drives the exit code nonzero") {
    VerifyReport rep;
    rep.claims.push_back({"some-claim", "confirmed", ""});
    CHECK(rep.exit_code() == 0);
    rep.claims.push_back({"other-claim", "table-discrepancy", "explained"});
    CHECK(rep.exit_code() == 0);
    rep.claims.push_back({"bad-claim", "discrepancy", "unexplained"});
    CHECK(rep.exit_code() == 1);
    CHECK(rep.count_status("discrepancy") == 1);
}
