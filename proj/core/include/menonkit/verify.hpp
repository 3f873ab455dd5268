#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace menonkit {

enum class IdentityId {
  menon_classical,
  menon_s,
  menon_general,
  lemma1,
  lemma2,
  lemma3,
  orthogonality,
  crs_route_agreement,
  totient_coherence,
};

std::string to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<std::string>& identity_names();

/// Parameter ranges for one sweep. Fields a given identity does not use are
/// ignored; -1 asks for the identity's default (see verify()).
struct SweepDomain {
  std::int64_t n_max = 50;  // n range [1, n_max]; crs: |n| <= n_max
  int s_min = 1;
  int s_max = 2;
  int k_max = 2;          // menon_general: constrained positions per tuple
  int r_max = -1;         // menon_general: unconstrained positions (default 1)
                          // crs_route_agreement: modulus range (default 30)
  std::int64_t j_max = -1;  // lemma3: j cap (default n^s); orthogonality: |n| cap (default 2 n_max)
  int samples = -1;       // menon_general: a-vectors per cell (default 20)
                          // lemma2: random psi tables per cell (default 100)
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;  // per-cell inner-loop estimate gate
  bool inject_failure = false;  // test-harness hook: skews every comparison
};

struct CellFailure {
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string lhs;
  std::string rhs;
};

/// Outcome of sweeping one identity over a domain. Always satisfies
/// checked = passed + failures.size() + skipped_overflow + skipped_budget.
struct IdentityReport {
  IdentityId id = IdentityId::menon_classical;
  SweepDomain domain;  // with defaults resolved
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t skipped_overflow = 0;
  std::uint64_t skipped_budget = 0;
  std::vector<CellFailure> failures;  // ordered by parameter tuple
  double wall_time_s = 0.0;

  bool ok() const { return failures.empty(); }
};

/// Sweep one identity. Cells are generated in canonical parameter order and
/// evaluated independently; any jobs value yields the identical report
/// except for wall_time_s. jobs <= 0 means hardware concurrency. Per-cell
/// overflow and budget conditions are recorded, never thrown; a numeric or
/// internal consistency error inside a cell is recorded as a failure.
IdentityReport verify(IdentityId id, const SweepDomain& domain, int jobs = 0);

}  // namespace menonkit
