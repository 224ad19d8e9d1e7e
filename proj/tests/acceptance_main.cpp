// Acceptance suite: runs every statistical verification criterion at its
// pinned tolerance and prints one pass/fail line per criterion.
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "qg/verify.hpp"

int main(int argc, char** argv) {
  qg::VerifyOptions opts;
  if (const char* env = std::getenv("QG_SEED")) opts.seed = std::strtoull(env, nullptr, 10);
  if (argc > 1) opts.only = argv[1];

  const auto results = qg::run_acceptance(opts, &std::cout);

  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
