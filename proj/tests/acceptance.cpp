#include <iostream>

#include "friezelab/reproduce.hpp"

int main(int argc, char** argv) {
    friezelab::ReproduceOptions options;
    options.fixtures = argc > 1 ? argv[1] : "fixtures";
    if (argc > 2) options.only = argv[2];
    int failed = 0;
    const auto results = friezelab::reproduce(options, [&](const friezelab::CheckResult& r) {
        std::cout << friezelab::format_result(r) << std::endl;
        failed += r.pass ? 0 : 1;
    });
    std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 && !results.empty() ? 0 : 1;
}
