#pragma once

#include <string>
#include <vector>

namespace devissage {

/// One checked statement inside a verification suite.
struct VerifyCase {
  std::string name;
  bool passed = false;
  std::string detail;  // what was compared, or why it failed
};

struct VerifySuite {
  std::string suite;
  std::vector<VerifyCase> cases;

  bool all_passed() const;
  int failed_count() const;
};

/// Knobs for the heavier sweeps.  The defaults match the library's
/// documented guarantees; tests and the acceptance gate run them as-is.
struct VerifyOptions {
  unsigned seed = 0;
  int ns_rank_samples = 50;  // random kernels for the rank-formula suite
  int chi_rewrites = 1000;   // seeded kernel words for the rewrite suite
  int max_order = 24;        // builtin corpus bound (exactness, hopf)
  int sylow_max_order = 48;  // nilpotent corpus bound for the sylow suite
  int mu_max = 8;            // largest cyclic degree for the mu-n suite
};

/// Run a named suite: ns-rank, mu-n, chi, exactness, sylow or hopf.
/// Throws std::invalid_argument for unknown names.
VerifySuite run_verify_suite(const std::string& name,
                             const VerifyOptions& options = {});

const std::vector<std::string>& verify_suite_names();

}  // namespace devissage
