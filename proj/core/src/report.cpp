#include "matchfree/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "matchfree/homology.hpp"
#include "matchfree/ideal.hpp"
#include "matchfree/shellability.hpp"
#include "matchfree/simplicial.hpp"
#include "matchfree/theorems.hpp"

namespace matchfree {

using nlohmann::json;

bool VerificationReport::any_disagreement() const {
    for (const auto& c : checks)
        if (c.agree == "false") return true;
    return false;
}

bool VerificationReport::any_indeterminate() const {
    for (const auto& c : checks)
        if (c.agree == "indeterminate") return true;
    return false;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
    bool indeterminate = false;
    for (const auto& rep : reports) {
        if (rep.any_disagreement()) return 1;
        indeterminate |= rep.any_indeterminate();
    }
    return indeterminate ? 3 : 0;
}

const std::set<std::string>& VerifyOptions::all_checks() {
    static const std::set<std::string> all{"purity", "dim",   "shelling", "cm",
                                           "depth",  "colon", "sr",       "facet-complement"};
    return all;
}

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::vector<Field> selected_fields(const VerifyOptions& o) {
    std::vector<Field> f;
    if (o.use_gf2) f.push_back(Field::GF2);
    if (o.use_rationals) f.push_back(Field::Rationals);
    return f;
}

// Classification actually observed, in the vocabulary of the expected
// classes: "cm" / "pure" (pure, not CM) / "seq_cm_not_pure" / "not_pure".
std::string computed_cm_class(const SimplicialComplex& mf, const VerifyOptions& opts) {
    bool pure = mf.is_pure();
    if (pure) {
        for (Field f : selected_fields(opts))
            if (!is_cohen_macaulay(mf, f)) return "pure";
        return "cm";
    }
    for (Field f : selected_fields(opts))
        if (!is_sequentially_cm(mf, f)) return "not_pure";
    return "seq_cm_not_pure";
}

bool cm_class_agrees(CmClass expected, const std::string& computed) {
    switch (expected) {
        case CmClass::CM: return computed == "cm";
        case CmClass::SeqCmNotPure: return computed == "seq_cm_not_pure";
        case CmClass::NotPure: return computed == "not_pure" || computed == "seq_cm_not_pure";
        case CmClass::PureUnknownCm: return computed == "cm" || computed == "pure";
        case CmClass::FullSimplex: return computed == "cm";
    }
    return false;
}

std::string depth_string(const SimplicialComplex& mf, const VerifyOptions& opts) {
    std::string out;
    int first = -1;
    bool same = true;
    for (Field f : selected_fields(opts)) {
        int d = depth(mf, f);
        if (first == -1) first = d;
        else if (d != first) same = false;
    }
    if (same) return std::to_string(first);
    out = "gf2:" + std::to_string(depth(mf, Field::GF2)) +
          ",rationals:" + std::to_string(depth(mf, Field::Rationals));
    return out;
}

struct Ctx {
    const Graph* base = nullptr;  // null in raw mode
    WhiskerGraph w;
    const Graph* subject = nullptr;
    int q = 0;
};

void run_checks(VerificationReport& rep, const Ctx& ctx, const VerifyOptions& opts) {
    const Graph& g = *ctx.subject;
    int q = ctx.q;
    bool whisker_mode = ctx.base != nullptr;
    SimplicialComplex mf = mf_complex(g, q);

    auto add = [&](std::string check, std::string expected, std::string computed) {
        std::string agree;
        if (expected.empty()) agree = "n/a";
        else if (computed == "indeterminate") agree = "indeterminate";
        else agree = bool_str(expected == computed);
        rep.checks.push_back({std::move(check), std::move(expected), std::move(computed), std::move(agree)});
    };

    if (opts.wants("dim")) {
        std::string expected =
            whisker_mode && q <= rep.nu ? ExtendedInt(rep.n + q - 2).to_string() : "";
        add("dim", expected, mf.dimension().to_string());
    }
    if (opts.wants("purity")) {
        std::string expected =
            whisker_mode && q <= rep.nu ? bool_str(expected_pure(*ctx.base, q)) : "";
        add("purity", expected, bool_str(mf.is_pure()));
    }
    if (opts.wants("shelling")) {
        bool in_range = whisker_mode && q <= rep.nu &&
                        ExtendedInt(q) <= expected_shellable_upper(*ctx.base);
        if (in_range) {
            ShellingOutcome out = constructive_whisker_shelling(ctx.w, q);
            add("shelling", "true", out.ok() ? "true" : "false:" + out.failed_step);
        } else {
            ShellSearchResult r = is_shellable_bruteforce(mf, opts.shelling_facet_cap);
            std::string computed = r.status == ShellStatus::Shellable      ? "true"
                                   : r.status == ShellStatus::NotShellable ? "false"
                                                                           : "indeterminate";
            rep.checks.push_back({"shelling", "", computed,
                                  computed == "indeterminate" ? "indeterminate" : "n/a"});
        }
    }
    if (opts.wants("cm")) {
        std::string computed = computed_cm_class(mf, opts);
        if (whisker_mode && q <= rep.nu) {
            CmClass expected = expected_cm_class(*ctx.base, q);
            // "pure"-only ranges carry no CM assertion: agreement means purity.
            rep.checks.push_back({"cm", cm_class_name(expected), computed,
                                  bool_str(cm_class_agrees(expected, computed))});
        } else {
            add("cm", "", computed);
        }
    }
    if (opts.wants("depth")) {
        std::string computed = depth_string(mf, opts);
        std::string expected;
        if (whisker_mode && q <= rep.nu)
            if (auto d = expected_depth(*ctx.base, q)) expected = std::to_string(*d);
        add("depth", expected, computed);
    }
    if (opts.wants("sr")) {
        add("sr", "true", bool_str(verify_sr_equality(g, q)));
    }
    if (opts.wants("colon")) {
        if (q > opts.colon_size_cap) {
            add("colon", "true", "indeterminate");
        } else {
            bool all_ok = true;
            auto ms = enumerate_matchings(g, q);
            for (const Matching& m : ms)
                if (!colon_oracle_verify(g, m)) { all_ok = false; break; }
            if (ms.empty()) add("colon", "", "n/a(no matchings)");
            else add("colon", "true", bool_str(all_ok));
        }
    }
    if (opts.wants("facet-complement")) {
        if (whisker_mode && q == rep.n - 1 && !(girth(*ctx.base) == ExtendedInt(3)) && rep.n >= 2)
            add("facet-complement", "true", bool_str(facet_complement_check(*ctx.base)));
        else
            add("facet-complement", "", "n/a");
    }
}

}  // namespace

VerificationReport run_verification(const std::string& id, const Graph& base, int q,
                                    const VerifyOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.graph_id = id;
    rep.q = q;
    rep.n = base.num_verts();
    rep.m = girth(base);
    rep.ell = odd_girth(base);
    rep.nu = base.num_verts();  // nu(W(H)) = n

    Ctx ctx;
    ctx.base = &base;
    ctx.w = whisker(base);
    ctx.subject = &ctx.w.graph();
    ctx.q = q;
    run_checks(rep, ctx, opts);

    if (opts.timing)
        rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return rep;
}

VerificationReport run_verification_raw(const std::string& id, const Graph& g, int q,
                                        const VerifyOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.graph_id = id;
    rep.q = q;
    rep.n = g.num_verts();
    rep.m = girth(g);
    rep.ell = odd_girth(g);
    rep.nu = matching_number(g);

    Ctx ctx;
    ctx.w = WhiskerGraph{};
    ctx.subject = &g;
    ctx.q = q;
    run_checks(rep, ctx, opts);

    if (opts.timing)
        rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return rep;
}

std::string report_to_json_line(const VerificationReport& rep) {
    json j;
    j["graph"] = rep.graph_id;
    j["n"] = rep.n;
    j["m"] = rep.m.finite() ? json(rep.m.value()) : json("inf");
    j["ell"] = rep.ell.finite() ? json(rep.ell.value()) : json("inf");
    j["nu"] = rep.nu;
    j["q"] = rep.q;
    json expected = json::object(), computed = json::object(), agree = json::object();
    for (const auto& c : rep.checks) {
        expected[c.check] = c.expected;
        computed[c.check] = c.computed;
        agree[c.check] = c.agree;
    }
    j["expected"] = expected;
    j["computed"] = computed;
    j["agree"] = agree;
    j["elapsed_ms"] = rep.elapsed_ms;
    return j.dump();
}

std::vector<std::string> report_to_csv_rows(const VerificationReport& rep) {
    std::vector<std::string> rows;
    for (const auto& c : rep.checks) {
        std::ostringstream os;
        os << rep.graph_id << "," << rep.n << "," << rep.m.to_string() << "," << rep.ell.to_string()
           << "," << rep.nu << "," << rep.q << "," << c.check << "," << c.expected << ","
           << c.computed << "," << c.agree << "," << rep.elapsed_ms;
        rows.push_back(os.str());
    }
    return rows;
}

std::string report_to_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << rep.graph_id << " q=" << rep.q << " (n=" << rep.n << " m=" << rep.m.to_string()
       << " ell=" << rep.ell.to_string() << " nu=" << rep.nu << ")\n";
    for (const auto& c : rep.checks) {
        os << "  " << c.check << ": computed=" << c.computed;
        if (!c.expected.empty()) os << " expected=" << c.expected;
        os << " [" << c.agree << "]\n";
    }
    return os.str();
}

}  // namespace matchfree
