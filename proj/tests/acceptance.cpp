// Acceptance suite: every headline number this project claims, one check per
// line, with the tolerance pinned next to the target. Exits nonzero if any
// check fails.

#include <cstdio>
#include <string>
#include <vector>

#include "rado/parallel.hpp"
#include "rado/verify.hpp"

int main() {
    using rado::verify::CheckResult;
    const int threads = rado::default_threads();

    struct Block {
        std::string title;
        std::vector<CheckResult> results;
    };
    std::vector<Block> blocks;
    blocks.push_back({"1. Schur block coloring", rado::verify::suite_schur()});
    blocks.push_back({"2-3. alternating-prefix family 2x-2y+cz", rado::verify::suite_residual_2x2ycz()});
    blocks.push_back({"4. three-block coloring for 2x-y+2z", rado::verify::suite_residual_221()});
    blocks.push_back({"4b. L decomposition", rado::verify::suite_l_decomposition()});
    blocks.push_back({"5. spectrum scan", rado::verify::suite_fourier()});
    blocks.push_back({"6. high-gcd point coloring", rado::verify::suite_high_gcd()});
    blocks.push_back({"7. additive tuples", rado::verify::suite_additive(threads)});
    blocks.push_back({"8. classifier totality and certificates", rado::verify::suite_classify_all(threads)});
    blocks.push_back({"9. property suites", rado::verify::suite_properties(threads)});

    int failures = 0;
    for (const Block& b : blocks) {
        std::printf("--- %s ---\n", b.title.c_str());
        for (const CheckResult& r : b.results) {
            failures += r.pass ? 0 : 1;
            std::printf("[%s] %s%s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.empty() ? "" : "  (", r.detail.c_str(), r.detail.empty() ? "" : ")");
        }
    }
    std::printf("%s: %d failing check(s)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                failures);
    return failures == 0 ? 0 : 1;
}
