// Acceptance suite: runs every top-level criterion at its stated sample counts,
// tolerances and runtime budgets, printing one PASS/FAIL line per criterion.
#include <chrono>
#include <iostream>
#include <sstream>

#include "metaplectic/verify.hpp"

using namespace metaplectic;

namespace {

int g_failures = 0;

struct Criterion {
    std::string label;
    double budget_s;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    void finish() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= budget_s)
            problems.push_back("runtime " + std::to_string(secs) + "s exceeds budget " +
                               std::to_string(budget_s) + "s");
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(1);
        if (problems.empty()) {
            os << "PASS " << label << " (" << secs << "s)";
        } else {
            ++g_failures;
            os << "FAIL " << label << " (" << secs << "s)";
            for (const auto& p : problems) os << "\n      - " << p;
        }
        std::cout << os.str() << std::endl;
    }
};

void require_suite(Criterion& c, const std::string& name, long p, long samples,
                   std::uint64_t seed = 42) {
    SuiteReport r = run_suite(name, p, seed, samples);
    std::ostringstream os;
    os << name << " suite p=" << p << ": " << r.failures.size() << " failures of " << r.checks
       << " checks";
    c.require(r.passed(), os.str());
    if (!r.passed() && !r.failures.empty())
        c.problems.push_back("  first: " + r.failures[0].input + " expected " +
                             r.failures[0].expected + " got " + r.failures[0].actual);
}

} // namespace

int main() {
    std::cout << "metaplectic acceptance suite" << std::endl;

    { // 1. Hilbert symbol: oracle agreement and exhaustive class properties
        Criterion c{"criterion 1: hilbert closed form vs solvability oracle, class laws", 10.0};
        for (long p : {2L, 3L, 5L, 7L}) require_suite(c, "hilbert", p, 1000);
        c.finish();
    }
    { // 2. Weil factor relations and the stabilized Gauss-sum oracle
        Criterion c{"criterion 2: weil relations exact, table vs oracle 1e-9", 30.0};
        for (long p : {3L, 5L, 7L}) require_suite(c, "weil", p, 1000);
        c.finish();
    }
    { // 3. x-map identities on Sp(4) and Sp(6)
        Criterion c{"criterion 3: x-map identities, Omega_0 values, Kubota calibration", 60.0};
        for (long p : {3L, 5L, 7L}) require_suite(c, "xmap", p, 500);
        c.finish();
    }
    { // 4. cocycle identities
        Criterion c{"criterion 4: 2-cocycle laws, inverse lemma, extension, conjugation", 60.0};
        require_suite(c, "cocycle", 3, 10000);
        for (long p : {5L, 7L}) require_suite(c, "cocycle", p, 1000);
        c.finish();
    }
    { // 5. center structure over all shapes with n <= 4
        Criterion c{"criterion 5: center images, witnesses, center multiplication law", 30.0};
        for (long p : {2L, 3L, 5L, 7L}) require_suite(c, "structure", p, 1000);
        c.finish();
    }
    { // 6. genuine central characters
        Criterion c{"criterion 6: Omega_chi sizes, transitivity, duality identity", 10.0};
        for (long p : {3L, 5L, 7L}) require_suite(c, "characters", p, 1000);
        // the p = 2 cardinality is checked directly (exact gamma table is odd-p only)
        PadicContext c2(2);
        auto os = omega_set({Character::trivial(c2), Character::trivial(c2)},
                            LeviShape{{1}, 0}, PsiSpec(c2));
        c.require(os.size() == 8, "p=2 Omega_chi size 8, got " + std::to_string(os.size()));
        c.finish();
    }
    { // 7. induced torus representations
        Criterion c{"criterion 7: induced torus reps: homomorphism, decomposition, roundtrip",
                    60.0};
        for (long p : {3L, 5L}) require_suite(c, "torusreps", p, 1000);
        c.finish();
    }
    { // 8. reducibility deciders
        Criterion c{"criterion 8: gsp4 verdicts, counterexample logs, orbit invariance", 10.0};
        for (long p : {3L, 5L, 7L}) require_suite(c, "deciders", p, 1000);
        c.finish();
    }
    { // 9. Whittaker orbit counts
        Criterion c{"criterion 9: nondegenerate-character orbit counts, shapes n <= 4", 10.0};
        for (long p : {3L, 5L}) require_suite(c, "whittaker", p, 1000);
        c.finish();
    }
    { // 10. end-to-end deterministic verification
        Criterion c{"criterion 10: full verify over p in {3,5,7}, deterministic", 300.0};
        AggregateReport agg = run_all({3, 5, 7}, 42, 1000);
        c.require(agg.passed(), "aggregate failures: " + std::to_string(agg.total_failures));
        // determinism spot check: identical reports under the default seed
        c.require(report_json(run_suite("cocycle", 3, 42, 200)) ==
                      report_json(run_suite("cocycle", 3, 42, 200)),
                  "cocycle suite report not reproducible");
        c.require(report_json(run_suite("deciders", 5, 42, 200)) ==
                      report_json(run_suite("deciders", 5, 42, 200)),
                  "deciders suite report not reproducible");
        c.finish();
    }

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED" << std::endl;
    return 1;
}
