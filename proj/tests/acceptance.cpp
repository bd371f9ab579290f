// One line per acceptance criterion; nonzero exit if any fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "support/suites.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"hocolim acceptance suite"};
    suites::SuiteConfig cfg;
    bool serial = false;
    int only = 0;
    app.add_option("--seed", cfg.seed, "base seed");
    app.add_flag("--serial", serial, "run cases on one thread");
    app.add_option("--only", only, "run a single criterion (1-11)")->check(CLI::Range(0, 11));
    CLI11_PARSE(app, argc, argv);
    cfg.parallel = !serial;

    using Fn = suites::CriterionResult (*)(const suites::SuiteConfig&);
    const Fn all[] = {suites::colimit_oracle,      suites::universal_property, suites::tree_creation,
                      suites::circle_dichotomy,    suites::constructions_agree, suites::universality,
                      suites::factorization_system, suites::preservation,      suites::weak_limit,
                      suites::homology_sanity,     suites::truncation};
    int failed = 0;
    for (int k = 1; k <= 11; ++k) {
        if (only != 0 && only != k)
            continue;
        auto r = all[k - 1](cfg);
        std::printf("%s\n", r.line().c_str());
        std::fflush(stdout);
        if (!r.passed)
            ++failed;
    }
    std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
