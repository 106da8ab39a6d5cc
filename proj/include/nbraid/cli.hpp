#pragma once
// Command-line driver: group-spec parsing, verb dispatch, JSON reports,
// and the named verification suites.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace nbraid {

struct SuiteCheck {
  std::string name;
  bool ok = false;
  bool vacuous = false; // quantifier range empty for these parameters
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool ok = true;
};

// Named verification batteries behind `nbraid suite`:
//   lemma42  relations between bands, crossings and twists in the closed
//            groups, over the (genus, strands) grid
//   prop42   the boundary section: relator triviality and retraction
//   prop43   invisibility of the section action in mod-2 homology,
//            perturbation stability, and the mod-3 negative control
//   thm33    exact quotient orders and their multiplicativity in the split
//   thm-aug  augmentation ideal dimensions and decompositions, plus
//            random rewriting certificates
SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      int max_class, unsigned long long limit);

// Full driver; args excludes the program name.  Returns the process exit
// code: 0 pass, 1 check failed, 2 usage error, 3 resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace nbraid
