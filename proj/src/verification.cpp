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

#include "seqcx/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "seqcx/big_index.hpp"
#include "seqcx/complexity.hpp"
#include "seqcx/sequences.hpp"

namespace seqcx {

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::kTi: return "TI";
    case IdentityId::kContra: return "CONTRA";
    case IdentityId::kSk: return "SK";
    case IdentityId::kK2: return "K2";
    case IdentityId::kKeven: return "KEVEN";
    case IdentityId::kK3: return "K3";
    case IdentityId::kKodd: return "KODD";
  }
  return "?";
}

std::string to_string(BoundId id) {
  switch (id) {
    case BoundId::kThm1: return "THM1";
    case BoundId::kThm2: return "THM2";
    case BoundId::kSuwi: return "SUWI";
    case BoundId::kRemark1: return "REMARK1";
    case BoundId::kRemark4: return "REMARK4";
    case BoundId::kEcThueMorse: return "EC_T";
  }
  return "?";
}

namespace {

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

// s_k of (offset + i)^2.
unsigned count_at(const BigIndex& offset, std::uint64_t i, unsigned k) {
  return pattern_count((offset + BigIndex(i)).square(), k);
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// Both shifted squares must carry exactly `expected(i)` blocks.
template <typename Expected>
void scan_shift_pair(IdentityReport& r, const BigIndex& near,
                     const BigIndex& far, unsigned k, Expected expected) {
  for (std::uint64_t i = r.range_lo; i <= r.range_hi; ++i) {
    const unsigned a = count_at(near, i, k);
    const unsigned b = count_at(far, i, k);
    const unsigned want = expected(i);
    if ((a & 1u) != (b & 1u) || a != want || b != want) {
      r.holds = false;
      r.first_failure = i;
      return;
    }
  }
}

}  // namespace

IdentityReport check_ti(unsigned ell, bool mutate) {
  require(ell >= 2, "check_ti requires l >= 2");
  require(ell <= 60, "check_ti requires l <= 60");
  IdentityReport r{};
  r.id = IdentityId::kTi;
  r.ell = ell;
  r.k = 1;
  r.range_hi = isqrt((std::uint64_t{1} << (ell + 2)) - 1);
  BigIndex near = BigIndex::Pow2(ell + 1);
  if (mutate) near += BigIndex(1);
  scan_shift_pair(r, near, BigIndex::Pow2(ell + 2), 1, [](std::uint64_t i) {
    return ones_count(BigIndex(i).square()) + ones_count(i) + 1;
  });
  return r;
}

IdentityReport check_contra(unsigned ell, bool mutate) {
  require(ell >= 2, "check_contra requires l >= 2");
  IdentityReport r{};
  r.id = IdentityId::kContra;
  r.ell = ell;
  r.k = 1;
  const BigIndex offset = mutate ? BigIndex(0) : BigIndex::Pow2(ell);
  const unsigned a = ones_count((offset + BigIndex::Pow2(ell + 1)).square());
  const unsigned b = ones_count((offset + BigIndex::Pow2(ell + 2)).square());
  r.detail = "s1=" + std::to_string(a) + "," + std::to_string(b);
  r.holds = a == 2 && b == 3 && (a & 1u) != (b & 1u);
  // The checked index is i* = 2^l; report its exponent to keep records short.
  r.range_lo = r.range_hi = mutate ? 0 : std::uint64_t{ell};
  r.detail += mutate ? " i*=0" : " i*=2^" + std::to_string(ell);
  if (!r.holds) r.first_failure = r.range_lo;
  return r;
}

IdentityReport check_sk(unsigned k, unsigned ell, bool mutate) {
  require(k >= 2, "check_sk requires k >= 2");
  require(ell >= 1, "check_sk requires l >= 1");
  require(ell + 2 * k <= 60, "check_sk requires l + 2k <= 60");
  IdentityReport r{};
  r.id = IdentityId::kSk;
  r.ell = ell;
  r.k = k;
  r.range_hi = isqrt((std::uint64_t{1} << (ell + 2 * k - 1)) - 1);
  BigIndex near = BigIndex::Pow2(ell + 2 * k - 1);
  if (mutate) near += BigIndex(1);
  scan_shift_pair(r, near, BigIndex::Pow2(ell + 2 * k), k,
                  [k](std::uint64_t i) {
                    return pattern_count(BigIndex(i).square(), k) +
                           pattern_count(i, k);
                  });
  return r;
}

IdentityReport check_separator(unsigned k, unsigned ell, bool mutate) {
  require(k >= 2, "check_separator requires k >= 2");
  require(ell >= 1, "check_separator requires l >= 1");
  IdentityReport r{};
  r.id = IdentityId::kK2;
  r.ell = ell;
  r.k = k;
  BigIndex offset;
  std::string offset_text;
  unsigned want_near = 0, want_far = 0;
  if (k == 2) {
    r.id = IdentityId::kK2;
    offset = BigIndex::Pow2(ell + 2);
    offset_text = "2^(l+2)";
    want_near = 0;
    want_far = 1;
  } else if (k % 2 == 0) {
    r.id = IdentityId::kKeven;
    offset = (BigIndex::Pow2(k) - BigIndex(1)) << ell;
    offset_text = "(2^k-1)2^l";
    want_near = k;
    want_far = 1;
  } else if (k == 3) {
    r.id = IdentityId::kK3;
    offset = BigIndex(7) << (ell + 3);
    offset_text = "7*2^(l+3)";
    want_near = 2;
    want_far = 1;
  } else {
    r.id = IdentityId::kKodd;
    offset = (BigIndex::Pow2(k - 1) - BigIndex(1)) << (ell + 2);
    offset_text = "(2^(k-1)-1)2^(l+2)";
    want_near = k - 2;
    want_far = 0;
  }
  if (mutate) {
    offset = BigIndex(0);
    offset_text = "0";
  }
  const unsigned a =
      pattern_count((offset + BigIndex::Pow2(ell + 2 * k - 1)).square(), k);
  const unsigned b =
      pattern_count((offset + BigIndex::Pow2(ell + 2 * k)).square(), k);
  r.detail = "sk=" + std::to_string(a) + "," + std::to_string(b) +
             " i*=" + offset_text;
  r.holds = a == want_near && b == want_far && (a & 1u) != (b & 1u);
  if (!r.holds) r.first_failure = 0;
  return r;
}

namespace {

// Lower bound check driven by a MOC profile. `meets(M, N)` is exact integer
// arithmetic; `bound(N)` is only used for the reported margin.
template <typename Meets, typename Bound>
BoundReport lower_bound_report(BoundId id, const SequenceSpec& spec,
                               std::size_t n_lo, std::size_t n_hi, Meets meets,
                               Bound bound) {
  BoundReport r{id, 0, n_lo, n_hi, std::numeric_limits<double>::infinity(), {}};
  if (n_hi < n_lo) return r;
  const ComplexityProfile profile = moc_profile(prefix(spec, n_hi), n_hi);
  for (std::size_t N = n_lo; N <= n_hi; ++N) {
    const std::size_t M = profile.points[N - 1].second;
    r.margin = std::min(r.margin, static_cast<double>(M) - bound(N));
    if (!meets(M, N)) r.violations.push_back(N);
  }
  return r;
}

}  // namespace

BoundReport check_theorem1(std::size_t n_lo, std::size_t n_hi) {
  require(n_lo >= 21, "check_theorem1 requires N >= 21");
  return lower_bound_report(
      BoundId::kThm1, SequenceSpec::ThueMorse(IndexPolynomial::Monomial(2)),
      n_lo, n_hi,
      [](std::size_t M, std::size_t N) { return 5 * M * M >= 2 * N; },
      [](std::size_t N) { return std::sqrt(2.0 * N / 5.0); });
}

BoundReport check_theorem2(unsigned k, std::size_t n_lo, std::size_t n_hi) {
  require(k >= 2 && k <= 30, "check_theorem2 requires 2 <= k <= 30");
  require(n_lo >= (std::size_t{1} << (2 * k + 2)),
          "check_theorem2 requires N >= 2^(2k+2)");
  BoundReport r = lower_bound_report(
      BoundId::kThm2, SequenceSpec::Pattern(k, IndexPolynomial::Monomial(2)),
      n_lo, n_hi,
      [](std::size_t M, std::size_t N) { return 8 * M * M >= N; },
      [](std::size_t N) { return std::sqrt(N / 8.0); });
  r.k = k;
  return r;
}

BoundReport check_suwi_bound(std::size_t n_lo, std::size_t n_hi) {
  require(n_lo >= 4, "check_suwi_bound requires N >= 4");
  return lower_bound_report(
      BoundId::kSuwi, SequenceSpec::ThueMorse(), n_lo, n_hi,
      [](std::size_t M, std::size_t N) { return 5 * M >= N + 5; },
      [](std::size_t N) { return N / 5.0 + 1.0; });
}

BoundReport check_moc_le_lc(const BitSeq& s, std::size_t n_lo,
                            std::size_t n_hi) {
  require(n_lo >= 1, "check_moc_le_lc requires N >= 1");
  BoundReport r{BoundId::kRemark1, 0, n_lo, n_hi,
                std::numeric_limits<double>::infinity(), {}};
  if (n_hi < n_lo) return r;
  const auto moc = moc_profile(s, n_hi);
  const auto lc = linear_profile(s, n_hi);
  for (std::size_t N = n_lo; N <= n_hi; ++N) {
    const auto M = moc.points[N - 1].second;
    const auto L = lc.points[N - 1].second;
    r.margin = std::min(r.margin, static_cast<double>(L) - static_cast<double>(M));
    if (M > L) r.violations.push_back(N);
  }
  return r;
}

BoundReport check_remark4(const BitSeq& s, const std::vector<std::size_t>& ns) {
  BoundReport r{BoundId::kRemark4, 0, 0, 0,
                std::numeric_limits<double>::infinity(), {}};
  if (ns.empty()) return r;
  r.n_lo = *std::min_element(ns.begin(), ns.end());
  r.n_hi = *std::max_element(ns.begin(), ns.end());
  for (auto N : ns) {
    const EcResult e = expansion_complexity(s, N);
    r.margin = std::min(r.margin, std::sqrt(2.0 * N) - static_cast<double>(e.value));
    if (e.exceeds_dmax || e.value * e.value > 2 * N) r.violations.push_back(N);
  }
  return r;
}

BoundReport check_ec_thue_morse(std::size_t n_lo, std::size_t n_hi) {
  require(n_lo >= 1, "check_ec_thue_morse requires N >= 1");
  BoundReport r{BoundId::kEcThueMorse, 0, n_lo, n_hi,
                std::numeric_limits<double>::infinity(), {}};
  if (n_hi < n_lo) return r;
  const BitSeq t = prefix(SequenceSpec::ThueMorse(), n_hi);
  for (std::size_t N = n_lo; N <= n_hi; ++N) {
    const EcResult e = expansion_complexity(t, N, 5);
    r.margin = std::min(r.margin, 5.0 - static_cast<double>(e.value));
    if (e.exceeds_dmax || e.value > 5) r.violations.push_back(N);
  }
  return r;
}

F2Bivariate thue_morse_annihilator() {
  const F2Bivariate x_plus_1(std::set<F2Bivariate::Monomial>{{0, 0}, {1, 0}});
  const F2Bivariate x(std::set<F2Bivariate::Monomial>{{1, 0}});
  const F2Bivariate y(std::set<F2Bivariate::Monomial>{{0, 1}});
  return x_plus_1 * x_plus_1 * x_plus_1 * y * y + x_plus_1 * x_plus_1 * y + x;
}

std::optional<std::size_t> annihilator_residual_T(std::size_t N, bool mutate) {
  require(N >= 1, "annihilator check requires N >= 1");
  F2Bivariate h = thue_morse_annihilator();
  if (mutate) h.toggle(1, 0);
  const BitSeq t = prefix(SequenceSpec::ThueMorse(), N);
  return eval_bivariate(h, series_from_bitseq(t, N)).lowest_term();
}

bool check_annihilator_T(std::size_t N, bool mutate) {
  return !annihilator_residual_T(N, mutate).has_value();
}

// ----------------------------------------------------------------- records

std::string to_record(const IdentityReport& r) {
  std::string out = "id=" + to_string(r.id);
  if (r.id != IdentityId::kTi && r.id != IdentityId::kContra) {
    out += " k=" + std::to_string(r.k);
  }
  out += " l=" + std::to_string(r.ell);
  if (r.id == IdentityId::kTi || r.id == IdentityId::kSk) {
    out += " range=" + std::to_string(r.range_lo) + ".." +
           std::to_string(r.range_hi);
  }
  out += r.holds ? " status=PASS" : " status=FAIL";
  out += " locus=" +
         (r.first_failure ? std::to_string(*r.first_failure) : std::string("-"));
  if (!r.detail.empty()) {
    std::string d = r.detail;
    std::replace(d.begin(), d.end(), ' ', ';');
    out += " detail=" + d;
  }
  return out;
}

std::string to_record(const BoundReport& r) {
  std::string out = "id=" + to_string(r.id);
  if (r.id == BoundId::kThm2) out += " k=" + std::to_string(r.k);
  out += " range=" + std::to_string(r.n_lo) + ".." + std::to_string(r.n_hi);
  out += r.holds() ? " status=PASS" : " status=FAIL";
  char margin[32];
  std::snprintf(margin, sizeof margin, "%.6f", r.margin);
  out += " margin=";
  out += margin;
  out += " locus=";
  if (r.violations.empty()) {
    out += "-";
  } else {
    // First few violating N, then the total.
    for (std::size_t i = 0; i < std::min<std::size_t>(5, r.violations.size());
         ++i) {
      if (i) out += ",";
      out += std::to_string(r.violations[i]);
    }
    out += " violations=" + std::to_string(r.violations.size());
  }
  return out;
}

// ------------------------------------------------------------------- suite

SuiteReport run_verification_suite(const SuiteOptions& o,
                                   const std::function<bool()>& out_of_time) {
  SuiteReport report;
  auto stop = [&] {
    if (!report.budget_exceeded && out_of_time()) {
      report.budget_exceeded = true;
      report.records.push_back("id=BUDGET status=EXCEEDED locus=-");
    }
    return report.budget_exceeded;
  };
  auto add = [&](const auto& r, bool holds) {
    ++report.checks;
    if (!holds) ++report.failures;
    report.records.push_back(to_record(r));
  };

  for (unsigned l = 2; l <= o.lmax && !stop(); ++l) {
    const auto r = check_ti(l, o.mutate);
    add(r, r.holds);
  }
  for (unsigned l = 2; l <= o.lmax && !stop(); ++l) {
    const auto r = check_contra(l, o.mutate);
    add(r, r.holds);
  }
  for (unsigned k = 2; k <= o.kmax; ++k) {
    for (unsigned l = 1; l <= o.pattern_lmax && !stop(); ++l) {
      const auto r = check_sk(k, l, o.mutate);
      add(r, r.holds);
    }
  }
  for (unsigned k = 2; k <= o.kmax; ++k) {
    for (unsigned l = 1; l <= o.pattern_lmax && !stop(); ++l) {
      const auto r = check_separator(k, l, o.mutate);
      add(r, r.holds);
    }
  }
  if (!stop()) {
    const auto r = check_annihilator_T(o.annihilator_n, o.mutate);
    ++report.checks;
    if (!r) ++report.failures;
    const auto residual = annihilator_residual_T(o.annihilator_n, o.mutate);
    report.records.push_back(
        "id=ANNIH_T N=" + std::to_string(o.annihilator_n) +
        (r ? " status=PASS" : " status=FAIL") + " locus=" +
        (residual ? std::to_string(*residual) : std::string("-")));
  }
  // The bound checks below are theorem statements rather than identities and
  // are not subject to mutation.
  if (o.nmax >= 21 && !stop()) {
    const auto r = check_theorem1(21, o.nmax);
    add(r, r.holds());
  }
  for (unsigned k = 2; k <= o.kmax && k <= 30; ++k) {
    const std::size_t lo = std::size_t{1} << (2 * k + 2);
    const std::size_t hi = std::min(o.nmax, std::size_t{1} << (2 * k + 8));
    if (lo > hi || stop()) continue;
    const auto r = check_theorem2(k, lo, hi);
    add(r, r.holds());
  }
  if (o.suwi_nmax >= 4 && !stop()) {
    const auto r = check_suwi_bound(4, o.suwi_nmax);
    add(r, r.holds());
  }
  if (o.ec_nmax >= 1 && !stop()) {
    const auto r = check_ec_thue_morse(1, o.ec_nmax);
    add(r, r.holds());
  }
  return report;
}

}  // namespace seqcx
