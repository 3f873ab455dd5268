#include "menonkit/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <thread>

#include "menonkit/arith.hpp"
#include "menonkit/checked.hpp"
#include "menonkit/crsums.hpp"
#include "menonkit/identities.hpp"
#include "menonkit/totients.hpp"

namespace menonkit {

namespace {

constexpr std::int64_t kCrsSweepCap = 100'000;  // def route stays O(r^s) per cell

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t mix_key(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t state = 0x2545f4914f6cdd1dull;
  for (std::uint64_t p : parts) {
    state ^= p + 0x9e3779b97f4a7c15ull + (state << 6) + (state >> 2);
    (void)splitmix64(state);
  }
  return state;
}

std::string fmt_complex(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%.12g, %.12g)", z.real(), z.imag());
  return buf;
}

struct Cell {
  std::int64_t n = 1;
  int s = 1;
  int k = 1;
  int r = 0;
  std::int64_t j = 0;
  int t = 0;
  std::vector<std::int64_t> a;
};

enum class Status { pass, fail, overflow, budget };

struct Outcome {
  Status status = Status::pass;
  std::string lhs;
  std::string rhs;
};

Outcome pass() { return {}; }

Outcome int_compare(std::int64_t lhs, std::int64_t rhs, bool inject) {
  const std::int64_t rhs_eff = inject ? checked_add(rhs, 1) : rhs;
  if (lhs == rhs_eff) return pass();
  return {Status::fail, std::to_string(lhs), std::to_string(rhs_eff)};
}

Outcome complex_compare(std::complex<double> lhs, std::complex<double> rhs, bool inject) {
  const std::complex<double> rhs_eff = inject ? rhs + 1.0 : rhs;
  if (within_identity_tolerance(lhs, rhs_eff)) return pass();
  return {Status::fail, fmt_complex(lhs), fmt_complex(rhs_eff)};
}

using Eval = std::function<Outcome(const Cell&)>;
using ParamsFn = std::function<std::vector<std::pair<std::string, std::int64_t>>(const Cell&)>;

struct Sweep {
  std::vector<Cell> cells;
  Eval eval;
  ParamsFn params;
};

// ---- per-identity sweeps ----------------------------------------------

Sweep sweep_menon_classical(const SweepDomain& d) {
  Sweep sw;
  for (std::int64_t n = 1; n <= d.n_max; ++n) sw.cells.push_back({.n = n});
  sw.eval = [inject = d.inject_failure](const Cell& c) {
    const std::int64_t lhs = menon_classical_lhs(c.n);
    const std::int64_t rhs = checked_mul(euler_phi(c.n), tau(c.n));
    return int_compare(lhs, rhs, inject);
  };
  sw.params = [](const Cell& c) {
    return std::vector<std::pair<std::string, std::int64_t>>{{"n", c.n}};
  };
  return sw;
}

Sweep sweep_menon_s(const SweepDomain& d) {
  Sweep sw;
  for (std::int64_t n = 1; n <= d.n_max; ++n) {
    for (int s = d.s_min; s <= d.s_max; ++s) sw.cells.push_back({.n = n, .s = s});
  }
  sw.eval = [inject = d.inject_failure](const Cell& c) {
    return int_compare(menon_s_lhs(c.n, c.s), menon_s_rhs(c.n, c.s), inject);
  };
  sw.params = [](const Cell& c) {
    return std::vector<std::pair<std::string, std::int64_t>>{{"n", c.n}, {"s", c.s}};
  };
  return sw;
}

Sweep sweep_menon_general(const SweepDomain& d) {
  Sweep sw;
  for (std::int64_t n = 1; n <= d.n_max; ++n) {
    for (int s = d.s_min; s <= d.s_max; ++s) {
      for (int k = 1; k <= d.k_max; ++k) {
        for (int r = 0; r <= d.r_max; ++r) {
          std::uint64_t est = UINT64_MAX;
          try {
            est = menon_general_work_estimate(n, s, k, r);
          } catch (const overflow_error&) {
          }
          if (est > d.budget) {
            // One marker cell; the evaluator will re-raise the budget stop.
            sw.cells.push_back({.n = n, .s = s, .k = k, .r = r, .t = -1});
            continue;
          }
          const std::int64_t m = checked_pow(n, s);
          const DivisorSPowerTable table(m, s);
          std::vector<std::int64_t> valid;
          for (std::int64_t v = 1; v <= m; ++v) {
            if (table.ggcd(v) == 1) valid.push_back(v);
          }
          // All a-vectors when there are few enough, else seeded samples.
          std::uint64_t total = 1;
          bool enumerate = true;
          for (int i = 0; i < k && enumerate; ++i) {
            total *= valid.size();
            if (total > static_cast<std::uint64_t>(d.samples)) enumerate = false;
          }
          if (enumerate) {
            std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
            int t = 0;
            for (;;) {
              Cell c{.n = n, .s = s, .k = k, .r = r, .t = t++};
              for (std::size_t i = 0; i < idx.size(); ++i) c.a.push_back(valid[idx[i]]);
              sw.cells.push_back(std::move(c));
              std::size_t pos = 0;
              while (pos < idx.size() && idx[pos] + 1 == valid.size()) idx[pos++] = 0;
              if (pos == idx.size()) break;
              ++idx[pos];
            }
          } else {
            for (int t = 0; t < d.samples; ++t) {
              Cell c{.n = n, .s = s, .k = k, .r = r, .t = t};
              for (int i = 0; i < k; ++i) {
                std::uint64_t state = mix_key({d.seed, static_cast<std::uint64_t>(n),
                                               static_cast<std::uint64_t>(s),
                                               static_cast<std::uint64_t>(k),
                                               static_cast<std::uint64_t>(r),
                                               static_cast<std::uint64_t>(t),
                                               static_cast<std::uint64_t>(i)});
                c.a.push_back(valid[splitmix64(state) % valid.size()]);
              }
              sw.cells.push_back(std::move(c));
            }
          }
        }
      }
    }
  }
  sw.eval = [budget = d.budget, inject = d.inject_failure](const Cell& c) -> Outcome {
    if (c.t < 0) throw budget_error("menon_general sweep: cell over budget");
    const std::int64_t lhs = menon_general_lhs(c.n, c.s, c.a, c.r, budget);
    const std::int64_t rhs = menon_general_rhs(c.n, c.s, c.k, c.r);
    return int_compare(lhs, rhs, inject);
  };
  sw.params = [](const Cell& c) {
    std::vector<std::pair<std::string, std::int64_t>> p{
        {"n", c.n}, {"s", c.s}, {"k", c.k}, {"r", c.r}, {"t", c.t}};
    for (std::size_t i = 0; i < c.a.size(); ++i) {
      p.emplace_back("a" + std::to_string(i + 1), c.a[i]);
    }
    return p;
  };
  return sw;
}

Sweep sweep_lemma1(const SweepDomain& d) {
  Sweep sw;
  for (std::int64_t n = 1; n <= d.n_max; ++n) {
    for (int s = d.s_min; s <= d.s_max; ++s) sw.cells.push_back({.n = n, .s = s});
  }
  sw.eval = [inject = d.inject_failure](const Cell& c) -> Outcome {
    const Rational lhs = lemma1_lhs(c.n, c.s);
    Rational rhs = lemma1_rhs(c.n, c.s);
    if (inject) rhs += Rational(1);
    if (lhs == rhs) return pass();
    return {Status::fail, lhs.str(), rhs.str()};
  };
  sw.params = [](const Cell& c) {
    return std::vector<std::pair<std::string, std::int64_t>>{{"n", c.n}, {"s", c.s}};
  };
  return sw;
}

PairFn make_psi(std::uint64_t seed, const Cell& c, std::int64_t m) {
  if (c.t == 0) {
    return [](std::int64_t, std::int64_t) { return std::complex<double>(1.0, 0.0); };
  }
  auto table = std::make_shared<std::vector<std::complex<double>>>();
  table->reserve(static_cast<std::size_t>(m));
  std::uint64_t state = mix_key({seed, static_cast<std::uint64_t>(c.n),
                                 static_cast<std::uint64_t>(c.s),
                                 static_cast<std::uint64_t>(c.t)});
  for (std::int64_t i = 0; i < m; ++i) {
    const double re = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    const double im = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    table->emplace_back(re, im);
  }
  return [table](std::int64_t k, std::int64_t mod) {
    return (*table)[static_cast<std::size_t>((k - 1) % mod)];
  };
}

Sweep sweep_lemma2(const SweepDomain& d) {
  Sweep sw;
  for (std::int64_t n = 1; n <= d.n_max; ++n) {
    for (int s = d.s_min; s <= d.s_max; ++s) {
      for (int t = 0; t <= d.samples; ++t) sw.cells.push_back({.n = n, .s = s, .t = t});
    }
  }
  sw.eval = [seed = d.seed, inject = d.inject_failure](const Cell& c) -> Outcome {
    const std::int64_t m = checked_pow(c.n, c.s);
    if (m > 1'000'000) throw budget_error("lemma2 sweep: n^s over the complex-sum cap");
    const PairFn psi = make_psi(seed, c, m);
    return complex_compare(lemma2_lhs(c.n, c.s, psi), lemma2_rhs(c.n, c.s, psi), inject);
  };
  sw.params = [](const Cell& c) {
    return std::vector<std::pair<std::string, std::int64_t>>{{"n", c.n}, {"s", c.s}, {"t", c.t}};
  };
  return sw;
}

Sweep sweep_lemma3(const SweepDomain& d) {
  Sweep sw;
  for (std::int64_t n = 1; n <= d.n_max; ++n) {
    for (int s = d.s_min; s <= d.s_max; ++s) {
      std::int64_t m = 0;
      try {
        m = checked_pow(n, s);
      } catch (const overflow_error&) {
        sw.cells.push_back({.n = n, .s = s, .j = -1});  // marker: overflow at generation
        continue;
      }
      if (m > 1'000'000) {
        sw.cells.push_back({.n = n, .s = s, .j = -2});  // marker: over the sum cap
        continue;
      }
      const std::int64_t j_hi = d.j_max >= 0 ? std::min(d.j_max, m) : m;
      for (std::int64_t j = 0; j <= j_hi; ++j) sw.cells.push_back({.n = n, .s = s, .j = j});
    }
  }
  sw.eval = [inject = d.inject_failure](const Cell& c) -> Outcome {
    if (c.j == -1) throw overflow_error("lemma3 sweep: n^s overflows");
    if (c.j == -2) throw budget_error("lemma3 sweep: n^s over the complex-sum cap");
    const std::complex<double> lhs = lemma3_lhs(c.n, c.s, c.j);
    const auto rhs = static_cast<double>(lemma3_rhs(c.n, c.s, c.j));
    return complex_compare(lhs, {rhs, 0.0}, inject);
  };
  sw.params = [](const Cell& c) {
    return std::vector<std::pair<std::string, std::int64_t>>{{"n", c.n}, {"s", c.s}, {"j", c.j}};
  };
  return sw;
}

Sweep sweep_orthogonality(const SweepDomain& d) {
  Sweep sw;
  for (std::int64_t mod = 1; mod <= d.n_max; ++mod) {
    for (std::int64_t v = -d.j_max; v <= d.j_max; ++v) {
      sw.cells.push_back({.n = mod, .j = v});
    }
  }
  sw.eval = [inject = d.inject_failure](const Cell& c) {
    const int exact = orthogonality_indicator(c.n, c.j);
    const std::complex<double> sum = orthogonality_indicator_sum(c.n, c.j);
    return complex_compare(sum, {static_cast<double>(exact), 0.0}, inject);
  };
  sw.params = [](const Cell& c) {
    return std::vector<std::pair<std::string, std::int64_t>>{{"d_s", c.n}, {"n", c.j}};
  };
  return sw;
}

Sweep sweep_crs_routes(const SweepDomain& d) {
  Sweep sw;
  for (std::int64_t r = 1; r <= d.r_max; ++r) {
    for (int s = d.s_min; s <= d.s_max; ++s) {
      std::int64_t rs = 0;
      try {
        rs = checked_pow(r, s);
      } catch (const overflow_error&) {
        continue;  // outside the sweep domain entirely
      }
      if (rs > kCrsSweepCap) continue;
      for (std::int64_t n = -d.n_max; n <= d.n_max; ++n) {
        sw.cells.push_back({.n = r, .s = s, .j = n});
      }
    }
  }
  sw.eval = [inject = d.inject_failure](const Cell& c) -> Outcome {
    const std::int64_t via_divsum = cohen_ramanujan_divsum(c.n, c.s, c.j);
    const std::int64_t via_closed = cohen_ramanujan_closed(c.n, c.s, c.j);
    const CrsValue via_def = cohen_ramanujan_def(c.n, c.s, c.j);
    const std::int64_t mirrored = cohen_ramanujan_divsum(c.n, c.s, -c.j);
    const std::int64_t lhs = inject ? checked_add(via_divsum, 1) : via_divsum;
    if (lhs != via_closed) {
      return {Status::fail, std::to_string(lhs) + " (divisor_sum)",
              std::to_string(via_closed) + " (closed_form)"};
    }
    if (lhs != via_def.value) {
      return {Status::fail, std::to_string(lhs) + " (divisor_sum)",
              std::to_string(via_def.value) + " (definition)"};
    }
    if (lhs != mirrored) {
      return {Status::fail, std::to_string(lhs), std::to_string(mirrored) + " (at -n)"};
    }
    return pass();
  };
  sw.params = [](const Cell& c) {
    return std::vector<std::pair<std::string, std::int64_t>>{{"r", c.n}, {"s", c.s}, {"n", c.j}};
  };
  return sw;
}

Sweep sweep_totient_coherence(const SweepDomain& d) {
  Sweep sw;
  for (std::int64_t n = 1; n <= d.n_max; ++n) {
    for (int s = d.s_min; s <= d.s_max; ++s) sw.cells.push_back({.n = n, .s = s});
  }
  sw.eval = [inject = d.inject_failure](const Cell& c) -> Outcome {
    const std::int64_t m = checked_pow(c.n, c.s);
    const std::int64_t via_klee = klee(m, c.s);
    const std::int64_t via_cohen = cohen_totient(c.n, c.s);
    const std::int64_t via_jordan = jordan_totient(c.n, c.s);
    const std::int64_t lhs = inject ? checked_add(via_klee, 1) : via_klee;
    if (lhs != via_cohen || lhs != via_jordan) {
      return {Status::fail,
              std::to_string(lhs) + " (klee(n^s))",
              std::to_string(via_cohen) + " (cohen) / " + std::to_string(via_jordan) +
                  " (jordan)"};
    }
    std::int64_t divisor_sum = 0;
    for (std::int64_t dd : divisors(c.n)) {
      divisor_sum = checked_add(divisor_sum, jordan_totient(dd, c.s));
    }
    if (divisor_sum != m) {
      return {Status::fail, std::to_string(divisor_sum) + " (sum J_s(d))",
              std::to_string(m) + " (n^s)"};
    }
    if (klee(c.n, c.s) != klee_by_count(c.n, c.s)) {
      return {Status::fail, std::to_string(klee(c.n, c.s)) + " (klee)",
              std::to_string(klee_by_count(c.n, c.s)) + " (count)"};
    }
    if (tau_s(m, c.s) != tau(c.n)) {
      return {Status::fail, std::to_string(tau_s(m, c.s)) + " (tau_s(n^s))",
              std::to_string(tau(c.n)) + " (tau(n))"};
    }
    return pass();
  };
  sw.params = [](const Cell& c) {
    return std::vector<std::pair<std::string, std::int64_t>>{{"n", c.n}, {"s", c.s}};
  };
  return sw;
}

// ---- runner -------------------------------------------------------------

Outcome run_guarded(const Eval& eval, const Cell& cell) {
  try {
    return eval(cell);
  } catch (const overflow_error&) {
    return {Status::overflow, "", ""};
  } catch (const budget_error&) {
    return {Status::budget, "", ""};
  } catch (const numeric_error& e) {
    return {Status::fail, std::string("numeric error: ") + e.what(), ""};
  } catch (const internal_error& e) {
    return {Status::fail, std::string("internal error: ") + e.what(), ""};
  } catch (const domain_error& e) {
    return {Status::fail, std::string("domain error: ") + e.what(), ""};
  }
}

std::vector<Outcome> run_cells(const std::vector<Cell>& cells, const Eval& eval, int jobs) {
  std::vector<Outcome> out(cells.size());
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(jobs), cells.size() ? cells.size() : 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) out[i] = run_guarded(eval, cells[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) return;
        out[i] = run_guarded(eval, cells[i]);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

SweepDomain resolve_defaults(IdentityId id, SweepDomain d) {
  if (d.r_max < 0) {
    d.r_max = id == IdentityId::crs_route_agreement ? 30
              : id == IdentityId::menon_general     ? 1
                                                    : 0;
  }
  if (d.samples < 0) {
    d.samples = id == IdentityId::lemma2          ? 100
                : id == IdentityId::menon_general ? 20
                                                  : 0;
  }
  if (d.j_max < 0 && id == IdentityId::orthogonality) d.j_max = 2 * d.n_max;
  if (d.n_max < 1) throw domain_error("verify: n_max must be positive");
  if (d.s_min < 1 || d.s_max < d.s_min) throw domain_error("verify: bad s range");
  if (id == IdentityId::menon_general && d.k_max < 1) {
    throw domain_error("verify: k_max must be positive");
  }
  return d;
}

}  // namespace

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::menon_classical: return "menon_classical";
    case IdentityId::menon_s: return "menon_s";
    case IdentityId::menon_general: return "menon_general";
    case IdentityId::lemma1: return "lemma1";
    case IdentityId::lemma2: return "lemma2";
    case IdentityId::lemma3: return "lemma3";
    case IdentityId::orthogonality: return "orthogonality";
    case IdentityId::crs_route_agreement: return "crs_route_agreement";
    case IdentityId::totient_coherence: return "totient_coherence";
  }
  return "?";
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "menon_classical", "menon_s",       "menon_general",
      "lemma1",          "lemma2",        "lemma3",
      "orthogonality",   "crs_route_agreement", "totient_coherence"};
  return names;
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  const auto& names = identity_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<IdentityId>(i);
  }
  return std::nullopt;
}

IdentityReport verify(IdentityId id, const SweepDomain& domain, int jobs) {
  const SweepDomain d = resolve_defaults(id, domain);
  const auto start = std::chrono::steady_clock::now();

  Sweep sw;
  switch (id) {
    case IdentityId::menon_classical: sw = sweep_menon_classical(d); break;
    case IdentityId::menon_s: sw = sweep_menon_s(d); break;
    case IdentityId::menon_general: sw = sweep_menon_general(d); break;
    case IdentityId::lemma1: sw = sweep_lemma1(d); break;
    case IdentityId::lemma2: sw = sweep_lemma2(d); break;
    case IdentityId::lemma3: sw = sweep_lemma3(d); break;
    case IdentityId::orthogonality: sw = sweep_orthogonality(d); break;
    case IdentityId::crs_route_agreement: sw = sweep_crs_routes(d); break;
    case IdentityId::totient_coherence: sw = sweep_totient_coherence(d); break;
  }

  const std::vector<Outcome> outcomes = run_cells(sw.cells, sw.eval, jobs);

  IdentityReport report;
  report.id = id;
  report.domain = d;
  report.checked = outcomes.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    switch (outcomes[i].status) {
      case Status::pass: ++report.passed; break;
      case Status::overflow: ++report.skipped_overflow; break;
      case Status::budget: ++report.skipped_budget; break;
      case Status::fail:
        report.failures.push_back({sw.params(sw.cells[i]), outcomes[i].lhs, outcomes[i].rhs});
        break;
    }
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace menonkit
