#ifndef QTC_VERIFY_HPP
#define QTC_VERIFY_HPP

#include <string>
#include <vector>

namespace qtc {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

/// Runs the full reproduction suite (all arithmetic exact, no tolerances).
/// `only` restricts to the named checks; `mutate` flips one generator
/// symbol before the first two-weight verification, as a fault-injection
/// sanity mode that must turn the check red.
std::vector<CheckResult> run_paper_checks(const std::vector<std::string>& only = {},
                                          bool mutate = false);

/// Names accepted by `only`, in execution order.
const std::vector<std::string>& paper_check_names();

}  // namespace qtc

#endif
