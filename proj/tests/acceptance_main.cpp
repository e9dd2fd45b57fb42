// Acceptance suite runner: executes every verification check at full budget
// and prints one PASS/FAIL line per check. Exit code 0 iff everything passes.
// `--quick` skips the minutes-long oracle checks (those then report
// UNDECIDED, which still fails the gate).

#include <cstdio>
#include <cstring>

#include "oneplanar/acceptance.hpp"

int main(int argc, char** argv) {
  oneplanar::AcceptanceOptions opts;
  for (int i = 1; i < argc; i++) {
    if (std::strcmp(argv[i], "--quick") == 0) opts.skip_slow = true;
  }
  auto results = oneplanar::run_acceptance_suite(opts);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] %s%s%s\n", oneplanar::check_status_name(r.status), r.name.c_str(),
                r.detail.empty() ? "" : " - ", r.detail.c_str());
    std::fflush(stdout);
    if (r.status != oneplanar::CheckStatus::Pass) failures++;
  }
  std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
