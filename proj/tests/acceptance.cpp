// Acceptance roll-up: runs every verify suite and reports one line per
// numbered criterion. The performance suite goes first so its peak-RSS
// reading is taken before the heavy suites inflate the high-water mark.

#include <prefatt/verify.hpp>

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

namespace {

int env_threads() {
    const char* v = std::getenv("PREFATT_THREADS");
    if (v == nullptr) return 1;
    const int t = std::atoi(v);
    return t > 0 ? t : 1;
}

}  // namespace

int main() {
    prefatt::VerifyOptions opts;
    opts.threads = env_threads();

    const std::vector<std::string> order = {
        "performance", "oracles",    "coupling", "lemma2.3", "limits-equivalence",
        "mori",        "identities", "rates",    "remy"};

    std::vector<prefatt::CheckResult> all;
    for (const std::string& name : order) {
        std::fprintf(stderr, "[acceptance] %s...\n", name.c_str());
        prefatt::SuiteResult res = prefatt::run_suite(name, opts);
        std::fprintf(stderr, "[acceptance] %s: %s (%.1fs)\n", name.c_str(),
                     res.pass() ? "ok" : "FAIL", res.elapsed_seconds);
        all.insert(all.end(), res.checks.begin(), res.checks.end());
    }

    std::map<int, std::vector<const prefatt::CheckResult*>> by_criterion;
    for (const prefatt::CheckResult& c : all) by_criterion[c.criterion].push_back(&c);

    int passed = 0;
    for (int k = 1; k <= 11; ++k) {
        const auto it = by_criterion.find(k);
        bool pass = it != by_criterion.end();
        std::string detail;
        if (it == by_criterion.end()) {
            detail = "no checks ran";
        } else {
            for (const prefatt::CheckResult* c : it->second) {
                pass = pass && c->pass;
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%s%s=%.4g(%.4g)",
                              detail.empty() ? "" : "  ", c->name.c_str(), c->statistic,
                              c->threshold);
                detail += buf;
            }
        }
        std::printf("criterion %2d: %s  %s\n", k, pass ? "PASS" : "FAIL", detail.c_str());
        passed += pass ? 1 : 0;
    }
    std::printf("acceptance: %d/11 criteria passed\n", passed);
    return passed == 11 ? 0 : 1;
}
