// Acceptance gate: runs the required checks at full scale, one verdict line
// per check, plus the supplementary regime checks under "supp".
// Usage: acceptance [1-11|supp|all]   (default: all required checks 1-8)
// Exit 0 when every selected check passes, 2 otherwise.

#include <iostream>
#include <string>
#include <vector>

#include <longcycle/verify.hpp>

int main(int argc, char** argv) {
    using namespace longcycle::verify;
    const std::string sel = argc > 1 ? argv[1] : "all";
    std::vector<int> ids;
    if (sel == "all") {
        ids = {1, 2, 3, 4, 5, 6, 7, 8};
    } else if (sel == "supp") {
        ids = {9, 10, 11};
    } else {
        int id = 0;
        try {
            id = std::stoi(sel);
        } catch (...) {
        }
        if (id < 1 || id > 11) {
            std::cerr << "usage: acceptance [1-11|supp|all]\n";
            return 1;
        }
        ids = {id};
    }
    int failures = 0;
    for (int id : ids) {
        const CheckResult cr = run_check(id, VerifyLevel::full);
        print_check(std::cout, cr);
        if (!cr.pass) ++failures;
    }
    return failures == 0 ? 0 : 2;
}
