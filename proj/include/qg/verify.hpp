#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qg {

// One acceptance criterion outcome. `measured` and `tolerance` describe the
// binding sub-check (the one closest to, or past, its threshold); `detail`
// carries the full breakdown. `n`, `replicas` and `ks` are filled for the
// statistical criteria.
struct CriterionResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
  int n = 0;
  int replicas = 0;
  double ks = -1.0;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  std::string only;  // substring filter over criterion names; empty = all
};

// Runs every acceptance criterion (or the `only` subset) and returns one
// result per criterion, in order. When `log` is given, a pass/fail line is
// printed per criterion as it finishes.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts,
                                            std::ostream* log = nullptr);

}  // namespace qg
