// Copyright 2026 The seqcx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEQCX_VERIFICATION_HPP_
#define SEQCX_VERIFICATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqcx/bitseq.hpp"
#include "seqcx/f2algebra.hpp"

namespace seqcx {

// Digit identities behind the lower bounds for squares of Thue-Morse and
// pattern sequences.
enum class IdentityId { kTi, kContra, kSk, kK2, kKeven, kK3, kKodd };
std::string to_string(IdentityId id);

struct IdentityReport {
  IdentityId id;
  unsigned ell = 0;
  unsigned k = 1;
  std::uint64_t range_lo = 0;  // checked index interval, inclusive
  std::uint64_t range_hi = 0;
  bool holds = true;
  std::optional<std::uint64_t> first_failure;
  std::string detail;  // intermediate digit counts, when meaningful
};

enum class BoundId { kThm1, kThm2, kSuwi, kRemark1, kRemark4, kEcThueMorse };
std::string to_string(BoundId id);

// margin is the minimum slack over the range: measured - bound for lower
// bounds, bound - measured for upper bounds. violations is empty iff
// margin >= 0.
struct BoundReport {
  BoundId id;
  unsigned k = 0;  // kThm2 only
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  double margin = 0.0;
  std::vector<std::size_t> violations;
  bool holds() const { return violations.empty(); }
};

// When `mutate` is set each check runs a deliberately broken variant of its
// identity; those must fail.

// t at (i + 2^(l+1))^2 equals t at (i + 2^(l+2))^2, both having digit sum
// s1(i^2) + s1(i) + 1, for 0 <= i <= isqrt(2^(l+2) - 1). Requires l >= 2.
// The mutation moves 2^(l+1) to 2^(l+1) + 1.
IdentityReport check_ti(unsigned ell, bool mutate = false);

// s1((2^l + 2^(l+1))^2) = 2 and s1((2^l + 2^(l+2))^2) = 3, so the two terms
// differ. Requires l >= 2. The mutation replaces the offset 2^l by 0.
IdentityReport check_contra(unsigned ell, bool mutate = false);

// s_k((i + 2^(l+2k-1))^2) = s_k((i + 2^(l+2k))^2) = s_k(i^2) + s_k(i) for
// 0 <= i <= isqrt(2^(l+2k-1) - 1). Requires k >= 2, l >= 1.
IdentityReport check_sk(unsigned k, unsigned ell, bool mutate = false);

// The designated offset i* (depending on k: 2, even, 3, odd > 3) makes the
// pattern terms at (i* + 2^(l+2k-1))^2 and (i* + 2^(l+2k))^2 differ, with the
// exact block counts listed in `detail`. The mutation uses i* = 0.
IdentityReport check_separator(unsigned k, unsigned ell, bool mutate = false);

// M(T', N) >= sqrt(2N/5) for each N in [n_lo, n_hi]; n_lo >= 21.
BoundReport check_theorem1(std::size_t n_lo, std::size_t n_hi);
// M(P'_k, N) >= sqrt(N/8) for each N in [n_lo, n_hi]; n_lo >= 2^(2k+2).
BoundReport check_theorem2(unsigned k, std::size_t n_lo, std::size_t n_hi);
// M(T, N) >= N/5 + 1 for each N in [n_lo, n_hi]; n_lo >= 4.
BoundReport check_suwi_bound(std::size_t n_lo, std::size_t n_hi);
// M(S, N) <= L(S, N) for each N in [n_lo, n_hi].
BoundReport check_moc_le_lc(const BitSeq& s, std::size_t n_lo,
                            std::size_t n_hi);
// E(S, N) <= sqrt(2N) for each listed N.
BoundReport check_remark4(const BitSeq& s, const std::vector<std::size_t>& ns);
// E(T, N) <= 5 via kernel search, for each N in [n_lo, n_hi].
BoundReport check_ec_thue_morse(std::size_t n_lo, std::size_t n_hi);

// (x+1)^3 y^2 + (x+1)^2 y + x
F2Bivariate thue_morse_annihilator();
// h(x, G_T(x)) = 0 mod x^N. With `mutate` the monomial x is dropped from h.
bool check_annihilator_T(std::size_t N, bool mutate = false);
// Lowest nonzero coefficient of h(x, G_T(x)) mod x^N, if any.
std::optional<std::size_t> annihilator_residual_T(std::size_t N,
                                                  bool mutate = false);

// One line per report: space separated key=value fields starting with id.
std::string to_record(const IdentityReport& r);
std::string to_record(const BoundReport& r);

struct SuiteOptions {
  unsigned lmax = 20;          // TI / CONTRA: l = 2..lmax
  unsigned kmax = 8;           // SK / separator: k = 2..kmax
  unsigned pattern_lmax = 12;  // SK / separator: l = 1..pattern_lmax
  std::size_t nmax = 100000;   // largest N for the M lower-bound checks
  std::size_t suwi_nmax = 5000;
  std::size_t annihilator_n = 16384;
  std::size_t ec_nmax = 256;
  bool mutate = false;
};

struct SuiteReport {
  std::vector<std::string> records;
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool budget_exceeded = false;
  bool ok() const { return failures == 0 && !budget_exceeded; }
};

// Runs every identity and bound check. `out_of_time` is polled between
// checks; once it returns true the remaining checks are skipped.
SuiteReport run_verification_suite(
    const SuiteOptions& options,
    const std::function<bool()>& out_of_time = [] { return false; });

}  // namespace seqcx

#endif  // SEQCX_VERIFICATION_HPP_
