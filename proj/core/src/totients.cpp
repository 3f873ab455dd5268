#include "menonkit/totients.hpp"

#include <string>

#include "menonkit/arith.hpp"
#include "menonkit/checked.hpp"

namespace menonkit {

namespace {

// Shared evaluation over an exponent walk, so the point evaluators and the
// sieve batch path run the same formulas on the same (p, e) streams.
template <typename PrimeExpRange>
std::int64_t eval_over_factors(BatchFn fn, int s, std::int64_t n, const PrimeExpRange& pe) {
  switch (fn) {
    case BatchFn::mobius: {
      std::int64_t v = 1;
      for (const auto& [p, e] : pe) {
        if (e >= 2) return 0;
        v = -v;
      }
      return v;
    }
    case BatchFn::phi: {
      std::int64_t v = 1;
      for (const auto& [p, e] : pe) {
        for (int i = 1; i < e; ++i) v *= p;
        v *= p - 1;
      }
      return v;
    }
    case BatchFn::jordan: {
      std::int64_t v = 1;
      for (const auto& [p, e] : pe) {
        const std::int64_t ps = checked_pow(p, s);
        v = checked_mul(v, checked_pow(ps, e - 1));
        v = checked_mul(v, ps - 1);
      }
      return v;
    }
    case BatchFn::klee: {
      // n prod_{p^s | n} (1 - p^{-s}): divide out every qualifying p^s
      // first, then multiply the (p^s - 1) factors; all steps exact and
      // bounded by n.
      std::int64_t v = n;
      for (const auto& [p, e] : pe) {
        if (e < s) continue;
        std::int64_t ps = 1;
        for (int i = 0; i < s; ++i) ps *= p;
        v /= ps;
        v *= ps - 1;
      }
      return v;
    }
    case BatchFn::tau_s: {
      std::int64_t v = 1;
      for (const auto& [p, e] : pe) v *= e / s + 1;
      return v;
    }
  }
  throw domain_error("unknown batch function");
}

int require_positive_s(int s, const char* who) {
  if (s < 1) throw domain_error(std::string(who) + ": s must be positive");
  return s;
}

}  // namespace

int mobius(const Factorization& f) {
  return static_cast<int>(eval_over_factors(BatchFn::mobius, 1, f.n, f.factors));
}

int mobius(std::int64_t n) { return mobius(factorize(n)); }

std::int64_t euler_phi(std::int64_t n) {
  const Factorization f = factorize(n);
  return eval_over_factors(BatchFn::phi, 1, n, f.factors);
}

std::int64_t tau(std::int64_t n) {
  const Factorization f = factorize(n);
  std::int64_t v = 1;
  for (const auto& [p, e] : f.factors) v *= e + 1;
  return v;
}

std::int64_t tau_s(std::int64_t m, int s) {
  require_positive_s(s, "tau_s");
  const Factorization f = factorize(m);
  return eval_over_factors(BatchFn::tau_s, s, m, f.factors);
}

std::int64_t jordan_totient(std::int64_t n, int s) {
  require_positive_s(s, "jordan_totient");
  const Factorization f = factorize(n);
  return eval_over_factors(BatchFn::jordan, s, n, f.factors);
}

std::int64_t cohen_totient(std::int64_t n, int s) {
  require_positive_s(s, "cohen_totient");
  const Factorization f = factorize(n);
  return eval_over_factors(BatchFn::jordan, s, n, f.factors);
}

std::int64_t klee(const Factorization& f, int s) {
  require_positive_s(s, "klee");
  return eval_over_factors(BatchFn::klee, s, f.n, f.factors);
}

std::int64_t klee(std::int64_t n, int s) { return klee(factorize(n), s); }

std::int64_t klee_by_count(std::int64_t n, int s) {
  if (n < 1) throw domain_error("klee_by_count: n must be positive");
  require_positive_s(s, "klee_by_count");
  std::int64_t count = 0;
  for (std::int64_t m = 1; m <= n; ++m) {
    if (generalized_gcd(m, n, s) == 1) ++count;
  }
  return count;
}

SieveTables::SieveTables(std::int64_t bound) : bound_(bound) {
  if (bound < 2) throw domain_error("SieveTables: bound must be >= 2");
  if (bound > (std::int64_t(1) << 31)) {
    throw domain_error("SieveTables: bound exceeds the 2^31-cell budget");
  }
  spf_.assign(static_cast<std::size_t>(bound) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > bound) break;
      spf_[i * p] = p;
    }
  }
}

std::int64_t SieveTables::spf(std::int64_t i) const {
  if (i < 2 || i > bound_) throw domain_error("SieveTables::spf: index out of range");
  return spf_[static_cast<std::size_t>(i)];
}

std::vector<std::int64_t> SieveTables::batch_eval(BatchFn fn, int s, std::int64_t lo,
                                                  std::int64_t hi) const {
  require_positive_s(s, "batch_eval");
  if (lo < 1 || hi < lo || hi > bound_) {
    throw domain_error("batch_eval: range must satisfy 1 <= lo <= hi <= bound");
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  std::vector<std::pair<std::int64_t, int>> pe;
  for (std::int64_t i = lo; i <= hi; ++i) {
    pe.clear();
    std::int64_t m = i;
    while (m > 1) {
      const std::int64_t p = spf_[static_cast<std::size_t>(m)];
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      pe.emplace_back(p, e);
    }
    out.push_back(eval_over_factors(fn, s, i, pe));
  }
  return out;
}

std::span<const std::int64_t> SieveTables::precompute(BatchFn fn, int s) {
  const auto key = std::make_pair(static_cast<int>(fn), s);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    std::vector<std::int64_t> values(static_cast<std::size_t>(bound_) + 1, 0);
    auto computed = batch_eval(fn, s, 1, bound_);
    std::copy(computed.begin(), computed.end(), values.begin() + 1);
    // Spot-check against the point evaluators on a deterministic
    // pseudo-random sample before the array is trusted.
    std::uint64_t state = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(bound_);
    for (int check = 0; check < 100; ++check) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      const std::int64_t i = static_cast<std::int64_t>(state % static_cast<std::uint64_t>(bound_)) + 1;
      const Factorization f = factorize(i);
      const std::int64_t expect = eval_over_factors(fn, s, i, f.factors);
      if (values[static_cast<std::size_t>(i)] != expect) {
        throw internal_error("SieveTables::precompute: cache disagrees with point evaluation");
      }
    }
    it = cache_.emplace(key, std::move(values)).first;
  }
  return std::span<const std::int64_t>(it->second);
}

SieveTables build_sieve(std::int64_t bound) { return SieveTables(bound); }

}  // namespace menonkit
