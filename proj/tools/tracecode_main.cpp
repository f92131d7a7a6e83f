// Command-line front end: parameter inspection, character-sum tables, code
// construction with weight distributions, generalized Hamming weight
// hierarchies, and the closed-form-vs-enumeration verification driver.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tracecode/verify.hpp"

using json = nlohmann::ordered_json;
using namespace tracecode;

namespace {

std::string hex(uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

FieldElem parse_elem(const std::string& text, const FieldCtx& f, const char* what) {
    size_t pos = 0;
    uint64_t v = 0;
    try {
        v = std::stoull(text, &pos, 16);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a hex element encoding: " + text);
    }
    if (pos != text.size() || v >= f.q())
        throw std::invalid_argument(std::string(what) + ": element " + text + " outside F_q (q = " +
                                    std::to_string(f.q()) + ")");
    return (FieldElem)v;
}

std::vector<unsigned> parse_r_list(const std::string& text, unsigned rmax) {
    std::vector<unsigned> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        unsigned lo, hi;
        if (dash == std::string::npos) {
            lo = hi = (unsigned)std::stoul(item);
        } else {
            lo = (unsigned)std::stoul(item.substr(0, dash));
            hi = (unsigned)std::stoul(item.substr(dash + 1));
        }
        if (lo < 1 || hi > rmax || lo > hi)
            throw std::invalid_argument("--r: range " + item + " outside 1.." + std::to_string(rmax));
        for (unsigned r = lo; r <= hi; ++r) out.push_back(r);
    }
    return out;
}

std::string poly_text(const Gf2Poly& p) {
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        if (!((p.bits >> d) & 1)) continue;
        if (!out.empty()) out += " + ";
        if (d == 0)
            out += "1";
        else if (d == 1)
            out += "x";
        else
            out += "x^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file " + out_path);
        os << j.dump(2) << "\n";
    }
}

json spec_json(const FieldCtx& f, FieldElem a, FieldElem b) {
    return json{{"l", f.params().l}, {"m", f.params().m}, {"a", hex(a)}, {"b", hex(b)}};
}

const char* method_name(GhwStatus st) {
    switch (st) {
        case GhwStatus::kBoth: return "both";
        case GhwStatus::kBrute: return "brute";
        case GhwStatus::kClosed: return "closed";
        case GhwStatus::kSkippedBudget: return "skipped-budget";
        case GhwStatus::kInapplicable: return "inapplicable";
    }
    return "?";
}

int cmd_params(uint32_t l, uint32_t m) {
    const FieldCtx f(Params::validate(l, m));
    std::cout << "l=" << l << " m=" << m << " l^m=" << f.lm() << " phi=" << f.s() << " q=" << f.q()
              << "\n";
    std::cout << "modulus " << hex(f.modulus().bits) << " (" << poly_text(f.modulus()) << ")\n";
    std::cout << "two_primitive_root=yes\n";
    std::cout << "gamma=" << hex(f.gamma()) << " order=" << f.order(f.gamma()) << "\n";
    std::cout << "alpha=" << hex(f.alpha()) << " order=" << f.order(f.alpha()) << "\n";
    return 0;
}

int cmd_expsum(const FieldCtx& f, const std::string& a_text, bool all, const std::string& out_path) {
    std::ostringstream os;
    os << "a,s_brute,s_closed,ea_size,oa_size\n";
    auto row = [&](FieldElem a) {
        const auto part = ea_oa(f, a);
        os << std::hex << a << std::dec << "," << s_value(f, a, SumMethod::kBrute) << ","
           << s_value(f, a, SumMethod::kClosed) << "," << part.even.size() << "," << part.odd.size()
           << "\n";
    };
    if (all) {
        for (uint64_t a = 1; a < f.q(); ++a) row((FieldElem)a);
    } else {
        const FieldElem a = parse_elem(a_text, f, "--a");
        if (a == 0) throw std::invalid_argument("--a: must be nonzero");
        row(a);
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file " + out_path);
        file << os.str();
    }
    return 0;
}

int cmd_code(const FieldCtx& f, const std::string& a_text, const std::string& b_text,
             const std::string& method, const std::string& out_path, const std::string& gen_path) {
    const CodeSpec spec = make_spec(f, parse_elem(a_text, f, "--a"), parse_elem(b_text, f, "--b"));
    DistMethod dm;
    if (method == "brute")
        dm = DistMethod::kBrute;
    else if (method == "closed")
        dm = DistMethod::kClosed;
    else if (method == "transform")
        dm = DistMethod::kTransform;
    else
        throw std::invalid_argument("--method: expected brute|closed|transform");

    const WeightDistribution dist = weight_distribution(f, spec, dm);
    json j;
    j["schema"] = 1;
    j["spec"] = spec_json(f, spec.a, spec.b);
    j["method"] = method;
    j["n"] = length_closed(f, spec);
    j["formal_dimension"] = 2 * f.s();
    j["degenerate"] = dist.degenerate;
    json dist_rows = json::array();
    uint64_t min_w = 0, max_w = 0;
    for (const auto& [w, c] : dist.counts) {
        dist_rows.push_back(json{{"weight", w}, {"multiplicity", c}});
        if (w == 0) continue;
        if (!min_w) min_w = w;
        max_w = w;
    }
    j["distribution"] = dist_rows;
    json discrepancies = json::array();
    if (!dist.inapplicable.empty()) {
        // the closed method refused; report the empirical dimension instead
        j["empirical_dimension"] = nullptr;
        if (2 * f.s() <= 24) {
            const auto rep = empirical_dimension(f, build_defining_set(f, spec));
            j["empirical_dimension"] = rep.empirical_dimension;
        }
        j["ratio"] = nullptr;
        discrepancies.push_back(dist.inapplicable);
    } else {
        j["empirical_dimension"] = dist.empirical_dimension;
        if (dist.degenerate || min_w == 0) {
            j["ratio"] = nullptr;
        } else {
            const uint64_t g = std::gcd(min_w, max_w);
            j["ratio"] = json{{"num", min_w / g},
                              {"den", max_w / g},
                              {"min_weight", min_w},
                              {"max_weight", max_w},
                              {"exceeds_half", 2 * min_w > max_w}};
        }
    }
    j["discrepancies"] = discrepancies;
    emit(j, out_path);

    if (!gen_path.empty()) {
        std::ofstream gm(gen_path, std::ios::binary);
        if (!gm) throw std::runtime_error("cannot open generator-matrix file " + gen_path);
        write_generator_matrix(gm, f, build_defining_set(f, spec));
    }
    return 0;
}

int cmd_ghw(const FieldCtx& f, const std::string& a_text, const std::string& b_text,
            const std::string& r_text, const std::string& method, uint64_t budget, unsigned threads,
            bool witnesses, const std::string& out_path) {
    const CodeSpec spec = make_spec(f, parse_elem(a_text, f, "--a"), parse_elem(b_text, f, "--b"));
    GhwMethod gm;
    if (method == "brute")
        gm = GhwMethod::kBrute;
    else if (method == "closed")
        gm = GhwMethod::kClosed;
    else if (method == "both")
        gm = GhwMethod::kBoth;
    else
        throw std::invalid_argument("--method: expected brute|closed|both");
    GhwOptions opt;
    opt.budget = budget;
    opt.threads = threads;

    if (2 * f.s() > 24) {
        // enumeration out of reach at this size; emit the closed forms only
        if (gm != GhwMethod::kClosed)
            throw std::invalid_argument("field too large to enumerate; rerun with --method closed");
        std::vector<unsigned> rs = parse_r_list(r_text, 2 * f.s());
        if (rs.empty())
            for (unsigned r = 1; r <= 2 * f.s(); ++r) rs.push_back(r);
        json j;
        j["schema"] = 1;
        j["spec"] = spec_json(f, spec.a, spec.b);
        j["n"] = length_closed(f, spec);
        j["formal_dimension"] = 2 * f.s();
        j["degenerate"] = degenerate_closed(f, spec);
        json rows = json::array();
        for (unsigned r : rs) {
            const auto v = ghw_closed(f, spec, r);
            rows.push_back(json{{"r", r},
                                {"d", v ? json(*v) : json(nullptr)},
                                {"method", v ? "closed" : "inapplicable"}});
        }
        j["table"] = rows;
        j["discrepancies"] = json::array();
        emit(j, out_path);
        return 0;
    }

    const DefiningSet d = build_defining_set(f, spec);
    const GhwTable tab = ghw_table(f, spec, d, gm, parse_r_list(r_text, 2 * f.s()), opt);

    json j;
    j["schema"] = 1;
    j["spec"] = spec_json(f, spec.a, spec.b);
    j["n"] = d.n();
    j["formal_dimension"] = tab.formal_dimension;
    j["actual_dimension"] = tab.actual_dimension;
    j["degenerate"] = tab.degenerate;
    json rows = json::array();
    for (const auto& row : tab.rows) {
        json rj;
        rj["r"] = row.r;
        rj["d"] = row.d() ? json(*row.d()) : json(nullptr);
        rj["method"] = method_name(row.method);
        if (row.d_brute) rj["d_brute"] = *row.d_brute;
        if (row.d_closed) rj["d_closed"] = *row.d_closed;
        if (!row.note.empty()) rj["note"] = row.note;
        if (witnesses && row.witness) {
            json wrows = json::array();
            for (uint64_t v : row.witness->rows) wrows.push_back(hex(v));
            rj["witness"] = wrows;
        }
        rows.push_back(rj);
    }
    j["table"] = rows;
    j["discrepancies"] = tab.discrepancies;
    emit(j, out_path);
    return 0;
}

int cmd_verify(const FieldCtx& f, const VerifyOptions& opt, const std::string& out_path) {
    const VerifyReport rep = run_verify(f, opt);
    json j;
    j["schema"] = 1;
    j["params"] = json{{"l", rep.params.l}, {"m", rep.params.m}, {"q", rep.params.q}};
    json claims = json::array();
    for (const auto& c : rep.claims) {
        claims.push_back(json{{"id", c.id}, {"status", c.status}, {"detail", c.detail}});
        std::cout << c.status << "  " << c.id << ": " << c.detail << "\n";
    }
    j["claims"] = claims;
    j["exit_code"] = rep.exit_code();
    if (!out_path.empty()) emit(j, out_path);
    std::cout << (rep.exit_code() == 0 ? "VERIFY OK" : "VERIFY FAILED") << "\n";
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary linear codes from two-variable trace defining sets: weight distributions "
                 "and weight hierarchies, closed forms cross-checked against enumeration"};
    app.require_subcommand(1);

    uint32_t l = 0, m = 1;
    std::string a_text = "1", b_text = "0", code_method = "brute", ghw_method = "both";
    std::string r_text, out_path, gen_path;
    uint64_t budget = 10'000'000'000ULL;
    unsigned threads = 1;
    uint64_t seed = 0;
    unsigned samples = 1000;
    bool all = false, witnesses = false, no_expsum = false, no_code = false, no_ghw = false;

    auto add_lm = [&](CLI::App* cmd) {
        cmd->add_option("--l", l, "odd prime l (2 must generate (Z/l^m)^*)")->required();
        cmd->add_option("--m", m, "exponent m >= 1");
    };

    CLI::App* params = app.add_subcommand("params", "field parameters and canonical generators");
    add_lm(params);

    CLI::App* expsum = app.add_subcommand("expsum", "character-sum table as CSV");
    add_lm(expsum);
    expsum->add_option("--a", a_text, "element of F_q^*, hex");
    expsum->add_flag("--all", all, "every a in F_q^*");
    expsum->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* code = app.add_subcommand("code", "defining-set code and weight distribution");
    add_lm(code);
    code->add_option("--a", a_text, "element of F_q^*, hex")->required();
    code->add_option("--b", b_text, "element of F_q, hex");
    code->add_option("--method", code_method, "brute|closed|transform");
    code->add_option("--out", out_path, "JSON output file (default stdout)");
    code->add_option("--gen-matrix", gen_path, "write the 2s x n generator matrix as 0/1 text");

    CLI::App* ghw = app.add_subcommand("ghw", "generalized Hamming weight hierarchy");
    add_lm(ghw);
    ghw->add_option("--a", a_text, "element of F_q^*, hex")->required();
    ghw->add_option("--b", b_text, "element of F_q, hex");
    ghw->add_option("--r", r_text, "rows to compute, e.g. 1,2,5-8 (default all)");
    ghw->add_option("--method", ghw_method, "brute|closed|both");
    ghw->add_option("--budget", budget, "word-operation budget per r");
    ghw->add_option("--threads", threads, "worker threads");
    ghw->add_flag("--witness", witnesses, "include maximizing subspaces");
    ghw->add_option("--out", out_path, "JSON output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run every closed-form claim against enumeration");
    add_lm(verify);
    verify->add_option("--seed", seed, "seed for sampled checks");
    verify->add_option("--samples", samples, "sample count for large fields");
    verify->add_option("--budget", budget, "word-operation budget per hierarchy row");
    verify->add_option("--threads", threads, "worker threads");
    verify->add_flag("--no-expsum", no_expsum, "skip character-sum claims");
    verify->add_flag("--no-code", no_code, "skip weight-distribution claims");
    verify->add_flag("--no-ghw", no_ghw, "skip hierarchy claims");
    verify->add_option("--out", out_path, "JSON report file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (params->parsed()) return cmd_params(l, m);
        const FieldCtx f(Params::validate(l, m));
        if (expsum->parsed()) {
            if (!all && expsum->count("--a") == 0)
                throw std::invalid_argument("expsum: pass --a HEX or --all");
            return cmd_expsum(f, a_text, all, out_path);
        }
        if (code->parsed()) return cmd_code(f, a_text, b_text, code_method, out_path, gen_path);
        if (ghw->parsed())
            return cmd_ghw(f, a_text, b_text, r_text, ghw_method, budget, threads, witnesses, out_path);
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.threads = threads;
            opt.budget = budget;
            opt.pair_samples = samples;
            opt.expsum_checks = !no_expsum;
            opt.code_checks = !no_code;
            opt.ghw_checks = !no_ghw;
            return cmd_verify(f, opt, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
