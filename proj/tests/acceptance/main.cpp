// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdlib>
#include <iostream>

#include "orenorm/verify.hpp"

int main(int argc, char** argv) {
    orenorm::VerifyOptions opt;
    if (const char* s = std::getenv("ORENORM_SEED")) opt.seed = std::strtoull(s, nullptr, 10);
    if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
    int failed = 0;
    for (int n = 1; n <= 9; ++n) {
        const auto c = orenorm::run_criterion(n, opt);
        std::cout << orenorm::format_check(c) << std::endl;
        failed += c.pass ? 0 : 1;
    }
    std::cout << (9 - failed) << "/9 criteria passed (seed " << opt.seed << ")" << std::endl;
    return failed ? 1 : 0;
}
