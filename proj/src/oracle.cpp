#include "maxalg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "maxalg/errors.hpp"
#include "maxalg/isometry.hpp"

namespace maxalg {

std::size_t Rng::index(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::index: empty range");
  return static_cast<std::size_t>(eng_() % bound);
}

double Rng::unit_open() { return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; }

double Rng::unit_closed_open() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t x = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double random_dyadic_scalar(Rng& rng) {
  return static_cast<double>(rng.index(16) + 1) * 0.25;
}

NonnegMatrix random_dyadic_matrix(Rng& rng, std::size_t rows, std::size_t cols, double zero_prob) {
  NonnegMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!rng.chance(zero_prob)) m.set(i, j, static_cast<double>(rng.index(64) + 1) * 0.25);
  return m;
}

NonnegVector random_dyadic_vector(Rng& rng, std::size_t n, double zero_prob) {
  std::vector<double> v(n, 0.0);
  for (auto& e : v)
    if (!rng.chance(zero_prob)) e = static_cast<double>(rng.index(64) + 1) * 0.25;
  return NonnegVector(std::move(v));
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(im[i - 1], im[rng.index(i)]);
  return Permutation(std::move(im));
}

std::string OracleReport::to_line() const {
  std::ostringstream os;
  os << (passed() ? "pass" : "fail") << ' ' << claim << " trials=" << trials << " seed=" << seed
     << " failures=" << failure_count;
  if (!failures.empty()) os << " first=" << failures.front().input;
  return os.str();
}

namespace {

// Definition-level diagonal value of one column, written independently of
// the analytic range code.
double oracle_column_value(const NonnegMatrix& a, const std::vector<std::size_t>& idx,
                           const std::vector<double>& x) {
  double v = 0.0;
  for (std::size_t s = 0; s < idx.size(); ++s)
    for (std::size_t t = 0; t < idx.size(); ++t)
      v = std::max(v, (x[s] * a(idx[s], idx[t])) * x[t]);
  return v;
}

std::vector<std::size_t> mask_indices(std::uint32_t mask) {
  std::vector<std::size_t> idx;
  for (std::uint32_t m = mask; m; m &= m - 1) idx.push_back(std::countr_zero(m));
  return idx;
}

}  // namespace

Interval oracle_wmax_k(const NonnegMatrix& a, std::size_t k, std::size_t grid,
                       std::uint64_t seed) {
  if (!a.square() || a.rows() == 0) throw std::invalid_argument("oracle_wmax_k: not square");
  const std::size_t n = a.rows();
  if (k == 0 || k > n) throw std::invalid_argument("oracle_wmax_k: k out of range");

  std::vector<double> values;

  // All 0/1 isometries supported on k-subsets: trace is the subset diagonal
  // max.
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  for (;;) {
    double v = 0.0;
    for (std::size_t i : comb) v = std::max(v, a(i, i));
    values.push_back(v);
    std::size_t pos = k;
    while (pos > 0 && comb[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++comb[pos - 1];
    for (std::size_t i = pos; i < k; ++i) comb[i] = comb[i - 1] + 1;
  }

  // Explicit witness for the largest entry: one column carries the
  // maximizing pair at value 1, remaining columns are unit columns.
  if (k < n) {
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a(i, j) > a(bi, bj)) bi = i, bj = j;
    std::vector<std::uint32_t> blocks{(1u << bi) | (1u << bj)};
    for (std::size_t i = 0; i < n && blocks.size() < k; ++i)
      if (i != bi && i != bj) blocks.push_back(1u << i);
    SupportPattern pat(n, std::move(blocks));
    MaxIsometry x;
    x.pattern = pat;
    for (std::size_t b = 0; b < pat.k(); ++b)
      x.values.push_back(std::vector<double>(pat.block_indices(b).size(), 1.0));
    double v = 0.0;
    for (std::size_t b = 0; b < pat.k(); ++b) {
      auto idx = pat.block_indices(b);
      v = std::max(v, oracle_column_value(a, idx, x.values[b]));
    }
    values.push_back(v);
  }

  // Random isometries.
  Rng rng(mix_seed(seed, 0x77ULL));
  for (std::size_t s = 0; s < grid; ++s) {
    std::vector<std::uint32_t> blocks(k, 0);
    for (;;) {
      for (auto& b : blocks) b = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t label = rng.index(k + 1);
        if (label > 0) blocks[label - 1] |= 1u << i;
      }
      if (std::all_of(blocks.begin(), blocks.end(), [](std::uint32_t b) { return b != 0; })) break;
    }
    double v = 0.0;
    for (std::uint32_t b : blocks) {
      auto idx = mask_indices(b);
      std::vector<double> x(idx.size());
      std::size_t unit = rng.index(idx.size());
      for (std::size_t t = 0; t < idx.size(); ++t) x[t] = (t == unit) ? 1.0 : rng.unit_open();
      v = std::max(v, oracle_column_value(a, idx, x));
    }
    values.push_back(v);
  }

  return max_convex_hull(values);
}

namespace {

// Attempt to realize `lambda` as the diagonal value of a column on `idx` by
// a deterministic scan of tuned candidates, verified by evaluation.
bool oracle_solve_column(const NonnegMatrix& a, const std::vector<std::size_t>& idx, double lambda,
                         std::size_t tries, std::vector<double>* out) {
  const std::size_t sz = idx.size();
  std::vector<double> x(sz, 1.0);
  auto verified = [&](const std::vector<double>& cand) {
    for (double v : cand)
      if (!(v > 0.0 && v <= 1.0)) return false;
    if (*std::max_element(cand.begin(), cand.end()) != 1.0) return false;
    return oracle_column_value(a, idx, cand) == lambda;
  };
  if (verified(x)) {
    *out = x;
    return true;
  }
  double big = 0.0;
  for (std::size_t s = 0; s < sz; ++s)
    for (std::size_t t = 0; t < sz; ++t) big = std::max(big, a(idx[s], idx[t]));
  if (lambda <= 0.0 || lambda > big) return false;
  double eps = 0.5;
  while (eps > 0.0 && (eps * big > lambda / 2 || (eps * big) * eps > lambda / 2)) eps /= 2;
  if (eps == 0.0) return false;

  for (std::size_t p = 0; p < sz; ++p) {
    if (a(idx[p], idx[p]) > lambda) continue;
    for (std::size_t s = 0; s < sz; ++s) x[s] = (s == p) ? 1.0 : eps;
    if (verified(x)) {
      *out = x;
      return true;
    }
    for (std::size_t j = 0; j < sz; ++j) {
      if (j == p) continue;
      // Tune coordinate j against each available carrier.
      std::vector<double> seeds;
      double off = std::max(a(idx[p], idx[j]), a(idx[j], idx[p]));
      if (off >= lambda) seeds.push_back(lambda / off);
      if (a(idx[j], idx[j]) >= lambda) seeds.push_back(std::sqrt(lambda / a(idx[j], idx[j])));
      for (double seed : seeds) {
        double lo = seed, hi = seed;
        for (std::size_t step = 0; step <= 2 * tries; ++step) {
          double cand = seed;
          if (step > 0) cand = (step % 2) ? (hi = std::nextafter(hi, 2.0)) : (lo = std::nextafter(lo, 0.0));
          if (!(cand > 0.0) || cand > 1.0) continue;
          for (std::size_t s = 0; s < sz; ++s) x[s] = (s == p) ? 1.0 : ((s == j) ? cand : eps);
          if (verified(x)) {
            *out = x;
            return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

Membership oracle_lambda_membership(const NonnegMatrix& a, std::size_t k, double lambda,
                                    std::size_t grid, std::uint64_t /*seed*/) {
  if (!a.square() || a.rows() == 0)
    throw std::invalid_argument("oracle_lambda_membership: not square");
  const std::size_t n = a.rows();
  if (k == 0 || k > n) throw std::invalid_argument("oracle_lambda_membership: k out of range");
  if (n > 12) throw limit_exceeded("oracle_lambda_membership: n > 12");

  // Independent family enumeration: label assignments with dedup.
  std::set<std::vector<std::uint32_t>> families;
  std::vector<std::size_t> label(n, 0);
  for (;;) {
    std::vector<std::uint32_t> blocks(k, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (label[i] > 0) blocks[label[i] - 1] |= 1u << i;
    bool ok = std::all_of(blocks.begin(), blocks.end(), [](std::uint32_t b) { return b != 0; });
    if (ok) {
      // Pairwise orthogonality straight from the entries.
      for (std::size_t b1 = 0; ok && b1 < k; ++b1)
        for (std::size_t b2 = b1 + 1; ok && b2 < k; ++b2)
          for (std::size_t i = 0; ok && i < n; ++i)
            for (std::size_t j = 0; ok && j < n; ++j)
              if (((blocks[b1] >> i) & 1u) && ((blocks[b2] >> j) & 1u))
                if (a(i, j) != 0.0 || a(j, i) != 0.0) ok = false;
    }
    if (ok) {
      std::sort(blocks.begin(), blocks.end(),
                [](std::uint32_t x, std::uint32_t y) { return std::countr_zero(x) < std::countr_zero(y); });
      families.insert(blocks);
    }
    std::size_t pos = 0;
    while (pos < n && label[pos] == k) label[pos++] = 0;
    if (pos == n) break;
    ++label[pos];
  }

  bool any_unresolved = false;
  for (const auto& blocks : families) {
    // Elementary bounds per block: the value of a column on T lies within
    // [min diagonal, max entry] and is zero exactly when the block is zero.
    bool excluded = false;
    for (std::uint32_t b : blocks) {
      auto idx = mask_indices(b);
      double mindiag = std::numeric_limits<double>::infinity(), big = 0.0;
      for (std::size_t s : idx) {
        mindiag = std::min(mindiag, a(s, s));
        for (std::size_t t : idx) big = std::max(big, a(s, t));
      }
      if (lambda < mindiag || lambda > big || (lambda == 0.0 && big > 0.0) ||
          (lambda > 0.0 && big == 0.0)) {
        excluded = true;
        break;
      }
    }
    if (excluded) continue;

    // Constructive attempt.
    std::vector<std::vector<double>> cols(k);
    bool all = true;
    for (std::size_t b = 0; b < k && all; ++b)
      all = oracle_solve_column(a, mask_indices(blocks[b]), lambda, grid, &cols[b]);
    if (all) {
      // Assemble and verify the full definition X^t A X = lambda I.
      NonnegMatrix x(n, k);
      for (std::size_t b = 0; b < k; ++b) {
        auto idx = mask_indices(blocks[b]);
        for (std::size_t t = 0; t < idx.size(); ++t) x.set(idx[t], b, cols[b][t]);
      }
      if (validate_isometry(x)) {
        NonnegMatrix d = otimes(otimes(transpose(x), a), x);
        bool exact = true;
        for (std::size_t i = 0; i < k && exact; ++i)
          for (std::size_t j = 0; j < k && exact; ++j)
            exact = d(i, j) == (i == j ? lambda : 0.0);
        if (exact) return Membership::member;
      }
    }
    any_unresolved = true;
  }
  return any_unresolved ? Membership::unknown : Membership::non_member_proved;
}

std::vector<double> oracle_achievable_grid(const NonnegMatrix& a,
                                           const std::vector<std::size_t>& support,
                                           std::size_t per_coord) {
  if (support.empty() || support.size() > 3)
    throw std::invalid_argument("oracle_achievable_grid: support size must be 1..3");
  if (per_coord < 2) throw std::invalid_argument("oracle_achievable_grid: grid too small");
  std::vector<std::size_t> idx = support;
  std::sort(idx.begin(), idx.end());

  // Uniform steps on (0,1] plus a geometric tail toward 0 for endpoint
  // studies near open bounds.
  std::vector<double> steps;
  for (std::size_t j = 1; j <= per_coord; ++j)
    steps.push_back(static_cast<double>(j) / static_cast<double>(per_coord));
  for (int g = 1; g <= 40; ++g) steps.push_back(std::ldexp(1.0, -g));

  const std::size_t sz = idx.size();
  std::vector<double> values;
  std::vector<double> x(sz);
  for (std::size_t anchor = 0; anchor < sz; ++anchor) {
    x[anchor] = 1.0;
    if (sz == 1) {
      values.push_back(oracle_column_value(a, idx, x));
      continue;
    }
    std::vector<std::size_t> rest;
    for (std::size_t s = 0; s < sz; ++s)
      if (s != anchor) rest.push_back(s);
    for (double u : steps) {
      x[rest[0]] = u;
      if (rest.size() == 1) {
        values.push_back(oracle_column_value(a, idx, x));
        continue;
      }
      for (double v : steps) {
        x[rest[1]] = v;
        values.push_back(oracle_column_value(a, idx, x));
      }
    }
  }
  return values;
}

void ClaimContext::fail(std::string input, std::string expected, std::string observed) {
  ++report_->failure_count;
  if (report_->failures.size() < 5)
    report_->failures.push_back({std::move(input), std::move(expected), std::move(observed)});
}

bool ClaimContext::check(bool ok, const std::string& input, const std::string& expected,
                         const std::string& observed) {
  if (!ok) fail(input, expected, observed);
  return ok;
}

OracleReport run_claim(const Claim& claim, std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("run_claim: trials must be >= 1");
  OracleReport report;
  report.claim = claim.id;
  report.trials = trials;
  report.seed = seed;
  ClaimContext ctx(seed, trials, &report);
  claim.body(ctx);
  return report;
}

std::vector<OracleReport> run_claim_suite(std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("run_claim_suite: trials must be >= 1");
  std::vector<OracleReport> reports;
  const auto& claims = claim_registry();
  for (std::size_t i = 0; i < claims.size(); ++i)
    reports.push_back(run_claim(claims[i], mix_seed(seed, i), trials));
  return reports;
}

}  // namespace maxalg
