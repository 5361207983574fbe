#ifndef LABELAB_PROPS_HPP
#define LABELAB_PROPS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace labelab {

/// One acceptance criterion: a named check with a wall-clock ceiling.
struct PropResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
    double limit_ms = 0.0;
};

/// Runs the acceptance criteria (all of them when `criteria` is empty).
/// Randomized corpora derive from the seed; results are deterministic for a
/// fixed seed and independent of the worker count.
std::vector<PropResult> run_acceptance(const std::vector<int>& criteria = {},
                                       int workers = 1, unsigned seed = 0);

/// One pass/fail line per criterion plus a summary; returns true iff all
/// criteria passed.
bool print_acceptance(std::ostream& out, const std::vector<PropResult>& results);

} // namespace labelab

#endif
