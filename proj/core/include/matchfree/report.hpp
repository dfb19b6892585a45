#ifndef MATCHFREE_REPORT_HPP
#define MATCHFREE_REPORT_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matchfree/graph.hpp"

namespace matchfree {

/// One named check with its expected value (empty = no claim), the
/// computed value, and the agreement flag: "true", "false", "n/a", or
/// "indeterminate" when a brute-force cap was hit.
struct CheckResult {
    std::string check;
    std::string expected;
    std::string computed;
    std::string agree;
};

struct VerificationReport {
    std::string graph_id;
    int n = 0;
    ExtendedInt m = ExtendedInt::infinity();
    ExtendedInt ell = ExtendedInt::infinity();
    int nu = 0;
    int q = 0;
    std::vector<CheckResult> checks;
    long elapsed_ms = 0;

    bool any_disagreement() const;
    bool any_indeterminate() const;
};

struct VerifyOptions {
    std::set<std::string> checks;  // purity dim shelling cm depth colon sr facet-complement
    bool use_gf2 = true;
    bool use_rationals = false;
    int shelling_facet_cap = 12;
    int colon_size_cap = 8;
    bool timing = false;

    static const std::set<std::string>& all_checks();
    bool wants(const std::string& c) const { return checks.count(c) > 0; }
};

/// 0 = all agreement flags hold, 1 = some disagreement, 3 = a required
/// check stayed indeterminate (brute-force cap).  Parse failures exit 2
/// before any report exists.
int exit_code_for(const std::vector<VerificationReport>& reports);

/// Whisker mode: the input is the base graph H, the subject is W(H), and
/// the closed-form expectations apply.
VerificationReport run_verification(const std::string& id, const Graph& base, int q,
                                    const VerifyOptions& opts);

/// Raw mode: the graph is analyzed as-is with no expected values.
VerificationReport run_verification_raw(const std::string& id, const Graph& g, int q,
                                        const VerifyOptions& opts);

std::string report_to_json_line(const VerificationReport& rep);
/// CSV rows (no header): graph,n,m,ell,nu,q,check,expected,computed,agree,elapsed_ms
std::vector<std::string> report_to_csv_rows(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

}  // namespace matchfree

#endif
