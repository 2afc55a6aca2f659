#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "maxalg/interval.hpp"
#include "maxalg/matrix.hpp"

namespace maxalg {

/// Deterministic random source. Every draw goes through explicit integer ->
/// double mappings so results depend only on the mt19937_64 stream, which
/// the standard pins down exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform in [0, bound).
  std::size_t index(std::size_t bound);
  /// Uniform double in (0, 1].
  double unit_open();
  /// Uniform double in [0, 1).
  double unit_closed_open();
  bool chance(double p) { return unit_closed_open() < p; }

 private:
  std::mt19937_64 eng_;
};

/// Derives independent child seeds from a base seed (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

// Random instances used by property suites. Entries are dyadic rationals
// (quarters up to 16) so that products of up to four factors stay exactly
// representable and algebraic identities can be compared with ==.
double random_dyadic_scalar(Rng& rng);  // positive, quarters up to 4
NonnegMatrix random_dyadic_matrix(Rng& rng, std::size_t rows, std::size_t cols, double zero_prob);
NonnegVector random_dyadic_vector(Rng& rng, std::size_t n, double zero_prob);
Permutation random_permutation(Rng& rng, std::size_t n);

struct OracleFailure {
  std::string input;
  std::string expected;
  std::string observed;
};

/// One verified claim: identifier, trial count, driving seed and the
/// recorded counterexamples (capped; failure_count keeps the true total).
struct OracleReport {
  std::string claim;
  int trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t failure_count = 0;
  std::vector<OracleFailure> failures;

  bool passed() const { return failure_count == 0; }
  std::string to_line() const;
};

/// Hull of sampled trace values: all 0/1 isometries on k-subsets, an explicit
/// witness for the largest entry, plus `grid` random isometries. Written
/// against the definition only.
Interval oracle_wmax_k(const NonnegMatrix& a, std::size_t k, std::size_t grid,
                       std::uint64_t seed = 0);

enum class Membership { member, non_member_proved, unknown };

/// Definition-driven membership probe for the rank-k interval range: member
/// when an explicitly constructed isometry reproduces lambda exactly;
/// non_member_proved when elementary bounds exclude every support family;
/// unknown otherwise. `grid` caps the per-block construction attempts.
Membership oracle_lambda_membership(const NonnegMatrix& a, std::size_t k, double lambda,
                                    std::size_t grid, std::uint64_t seed = 0);

/// Sampled values of one block's diagonal: anchor choices x (uniform grid on
/// (0,1] with `per_coord` steps plus a geometric tail toward 0) for the other
/// coordinates. Supports of size <= 3.
std::vector<double> oracle_achievable_grid(const NonnegMatrix& a,
                                           const std::vector<std::size_t>& support,
                                           std::size_t per_coord);

/// Accumulates failures for one claim body.
class ClaimContext {
 public:
  ClaimContext(std::uint64_t seed, int trials, OracleReport* report)
      : rng(seed), trials(trials), report_(report) {}

  Rng rng;
  int trials;

  void fail(std::string input, std::string expected, std::string observed);
  bool check(bool ok, const std::string& input, const std::string& expected,
             const std::string& observed);

 private:
  OracleReport* report_;
};

struct Claim {
  std::string id;
  std::function<void(ClaimContext&)> body;
};

/// All registered property claims, one per documented invariant.
const std::vector<Claim>& claim_registry();

OracleReport run_claim(const Claim& claim, std::uint64_t seed, int trials);

/// Runs every registered claim with per-claim seeds derived from `seed`.
/// Reports are reproducible bit for bit given (seed, trials). trials >= 1.
std::vector<OracleReport> run_claim_suite(std::uint64_t seed, int trials);

}  // namespace maxalg
