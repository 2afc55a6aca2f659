#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "maxalg/interval.hpp"
#include "maxalg/isometry.hpp"
#include "maxalg/joint_range.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/oracle.hpp"
#include "maxalg/perm_range.hpp"
#include "maxalg/single_range.hpp"

// Registered property claims. Each body draws its own random instances from
// the claim context and checks one documented invariant, exactly unless the
// route involves sampling or transcendental functions. Random entries are
// dyadic rationals so that the products appearing in the identities are
// computed without rounding and can be compared with ==.

namespace maxalg {
namespace {

std::string show(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string show(const NonnegMatrix& a) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ";" : "") << '(';
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j);
    os << ')';
  }
  os << ']';
  return os.str();
}

std::string show(const Interval& iv) {
  std::ostringstream os;
  os.precision(17);
  os << (iv.lo_closed ? '[' : '(') << iv.lo << ',' << iv.hi << (iv.hi_closed ? ']' : ')');
  return os.str();
}

std::string show(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& iv : s.parts()) out += show(iv);
  return out;
}

std::string show(const std::vector<double>& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

std::size_t rand_dim(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + rng.index(hi - lo + 1);
}

// Definition-level diagonal value of one column, kept local so that claims
// do not lean on the library evaluation they are checking.
double direct_col_value(const NonnegMatrix& a, const std::vector<std::size_t>& idx,
                        const std::vector<double>& x) {
  double v = 0.0;
  for (std::size_t s = 0; s < idx.size(); ++s)
    for (std::size_t t = 0; t < idx.size(); ++t)
      v = std::max(v, (x[s] * a(idx[s], idx[t])) * x[t]);
  return v;
}

NonnegMatrix sandwich(const NonnegMatrix& a, const NonnegMatrix& x) {
  return otimes(otimes(transpose(x), a), x);
}

// D == lambda I_k for some lambda; reports lambda through out.
bool is_scalar_multiple_of_identity(const NonnegMatrix& d, double* out) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i == j) {
        if (d(i, j) != d(0, 0)) return false;
      } else if (d(i, j) != 0.0) {
        return false;
      }
    }
  *out = d(0, 0);
  return true;
}

// k nonempty disjoint blocks on n vertices, no orthogonality constraint.
SupportPattern random_pattern(Rng& rng, std::size_t n, std::size_t k) {
  for (;;) {
    std::vector<std::uint32_t> blocks(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t label = rng.index(k + 1);
      if (label > 0) blocks[label - 1] |= 1u << i;
    }
    if (std::all_of(blocks.begin(), blocks.end(), [](std::uint32_t b) { return b != 0; }))
      return SupportPattern(n, std::move(blocks));
  }
}

// Isometry with 16-bit dyadic entries: products against dyadic matrix
// entries and entrywise differences stay exactly representable, so real
// inequalities transfer to floating point verbatim.
MaxIsometry grid_isometry(Rng& rng, const SupportPattern& pat) {
  MaxIsometry x;
  x.pattern = pat;
  for (std::size_t b = 0; b < pat.k(); ++b) {
    std::size_t sz = pat.block_indices(b).size();
    std::vector<double> vals(sz);
    std::size_t unit = rng.index(sz);
    for (std::size_t t = 0; t < sz; ++t)
      vals[t] = (t == unit) ? 1.0
                            : static_cast<double>(rng.index(std::size_t{1} << 16) + 1) * 0x1.0p-16;
    x.values.push_back(std::move(vals));
  }
  return x;
}

std::vector<std::size_t> random_subset(Rng& rng, std::size_t n, std::size_t min_size) {
  std::vector<std::size_t> idx;
  while (idx.size() < min_size) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (rng.chance(0.6)) idx.push_back(i);
  }
  return idx;
}

NonnegMatrix principal_submatrix(const NonnegMatrix& a, const std::vector<std::size_t>& idx) {
  NonnegMatrix b(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) b.set(i, j, a(idx[i], idx[j]));
  return b;
}

// Rows of x spread onto rows row_map[i] of an n-row matrix.
NonnegMatrix embed_rows(const NonnegMatrix& x, const std::vector<std::size_t>& row_map,
                        std::size_t n) {
  NonnegMatrix y(n, x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != 0.0) y.set(row_map[i], j, x(i, j));
  return y;
}

double kth_smallest_diag(const NonnegMatrix& a, std::size_t k) {
  std::vector<double> d;
  for (std::size_t i = 0; i < a.rows(); ++i) d.push_back(a(i, i));
  std::sort(d.begin(), d.end());
  return d[k - 1];
}

PointSet pointwise_oplus(const PointSet& a, const PointSet& b) {
  std::vector<std::vector<double>> out;
  for (const auto& p : a.points)
    for (const auto& q : b.points) {
      std::vector<double> r(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) r[i] = std::max(p[i], q[i]);
      out.push_back(std::move(r));
    }
  return make_point_set(std::move(out));
}

void for_each_bijection(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> sigma(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      fn(sigma);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      sigma[pos] = v;
      rec(pos + 1);
      used[v] = false;
    }
  };
  rec(0);
}

MatrixTuple random_tuple(Rng& rng, std::size_t m, std::size_t n, double zero_prob) {
  std::vector<NonnegMatrix> mats;
  for (std::size_t l = 0; l < m; ++l) mats.push_back(random_dyadic_matrix(rng, n, n, zero_prob));
  return MatrixTuple(std::move(mats));
}

// Member and non-member probe values of an interval set, all exact doubles.
void probe_values(const IntervalSet& s, std::vector<double>* members,
                  std::vector<double>* non_members) {
  const auto& parts = s.parts();
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Interval& iv = parts[p];
    if (iv.lo_closed) members->push_back(iv.lo);
    if (iv.hi_closed && !iv.is_singleton()) members->push_back(iv.hi);
    if (!iv.is_singleton())
      for (double u : {0.25, 0.5, 0.75}) {
        double x = iv.lo + (iv.hi - iv.lo) * u;
        if (x > iv.lo && x < iv.hi) members->push_back(x);
      }
    if (!iv.lo_closed && !s.contains(iv.lo)) non_members->push_back(iv.lo);
    if (p + 1 < parts.size()) {
      double g = (iv.hi + parts[p + 1].lo) / 2;
      if (!s.contains(g)) non_members->push_back(g);
    }
  }
  if (!s.empty()) {
    if (s.parts().front().lo > 0.0) non_members->push_back(s.parts().front().lo / 2);
    non_members->push_back(s.parts().back().hi * 2 + 1.0);
  }
}

// Forward check that one block attains `lambda` as an exact double: park a
// unit anchor, tune one coordinate upward along the rounding grid. The
// column value is monotone in the tuned coordinate, so the first value at
// or above the target decides. Deliberately evaluated through
// direct_col_value rather than any library solver.
bool block_attains_exactly(const NonnegMatrix& a, const std::vector<std::size_t>& idx,
                           double lambda) {
  const std::size_t sz = idx.size();
  double big = 0.0, mind = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < sz; ++s) {
    mind = std::min(mind, a(idx[s], idx[s]));
    for (std::size_t t = 0; t < sz; ++t) big = std::max(big, a(idx[s], idx[t]));
  }
  if (lambda == big) return true;  // all-ones column, every product exact
  if (!(lambda >= mind) || lambda > big) return false;
  double eps = 0.5;
  for (int i = 0; i < 2000 && (eps * big > lambda / 2 || (eps * big) * eps > lambda / 2); ++i)
    eps /= 2;
  if (eps * big > lambda / 2) return false;
  std::vector<double> x(sz);
  for (std::size_t p = 0; p < sz; ++p) {
    if (a(idx[p], idx[p]) > lambda) continue;
    for (std::size_t s = 0; s < sz; ++s) x[s] = (s == p) ? 1.0 : eps;
    if (direct_col_value(a, idx, x) == lambda) return true;
    for (std::size_t j = 0; j < sz; ++j) {
      if (j == p) continue;
      double start = 1.0;
      bool any = false;
      auto seed = [&](double v) {
        if (v > 0.0) {
          start = std::min(start, v);
          any = true;
        }
      };
      if (a(idx[p], idx[j]) >= lambda) seed(lambda / a(idx[p], idx[j]));
      if (a(idx[j], idx[p]) >= lambda) seed(lambda / a(idx[j], idx[p]));
      if (a(idx[j], idx[j]) >= lambda) seed(std::sqrt(lambda / a(idx[j], idx[j])));
      if (!any) continue;
      for (int i = 0; i < 8 && start > 0.0; ++i) start = std::nextafter(start, 0.0);
      if (start <= 0.0) start = std::numeric_limits<double>::denorm_min();
      double q = start;
      for (int step = 0; step < 96; ++step) {
        x[j] = q;
        double v = direct_col_value(a, idx, x);
        if (v == lambda) return true;
        if (v > lambda || q == 1.0) break;
        q = std::nextafter(q, 2.0);
        if (q > 1.0) q = 1.0;
      }
      x[j] = eps;
    }
  }
  return false;
}

// A value is a certified member when some orthogonal family attains it
// exactly in every block simultaneously. Certified values must round-trip
// through witness_isometry; values inside the real-arithmetic range can
// still fail certification when the rounding grid of every product map
// skips them, and no exact witness exists at all.
bool certified_lambda(const NonnegMatrix& a, std::size_t k, double lambda) {
  auto fams = enumerate_support_families(a, k, kDefaultFamilyLimit);
  std::map<std::vector<std::size_t>, bool> cache;
  for (const SupportPattern& pat : fams) {
    bool all = true;
    for (std::size_t b = 0; b < pat.k() && all; ++b) {
      auto idx = pat.block_indices(b);
      auto it = cache.find(idx);
      if (it == cache.end()) it = cache.emplace(idx, block_attains_exactly(a, idx, lambda)).first;
      all = it->second;
    }
    if (all) return true;
  }
  return false;
}

std::vector<Claim> build_registry() {
  std::vector<Claim> reg;
  auto add = [&reg](std::string id, std::function<void(ClaimContext&)> body) {
    reg.push_back({std::move(id), std::move(body)});
  };

  // ---------------------------------------------------------------- core

  add("core.semiring-axioms", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.2);
      NonnegMatrix b = random_dyadic_matrix(ctx.rng, n, n, 0.2);
      NonnegMatrix c = random_dyadic_matrix(ctx.rng, n, n, 0.2);
      NonnegMatrix zero(n, n);
      ctx.check(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)), show(a), "oplus associative", "");
      ctx.check(oplus(a, b) == oplus(b, a), show(a), "oplus commutative", "");
      ctx.check(oplus(a, a) == a, show(a), "oplus idempotent", "");
      ctx.check(oplus(a, zero) == a, show(a), "zero neutral for oplus", "");
      ctx.check(otimes(otimes(a, b), c) == otimes(a, otimes(b, c)), show(a), "otimes associative",
                "");
      ctx.check(otimes(a, oplus(b, c)) == oplus(otimes(a, b), otimes(a, c)), show(a),
                "otimes distributes over oplus", "");
      ctx.check(otimes(oplus(b, c), a) == oplus(otimes(b, a), otimes(c, a)), show(a),
                "right distributivity", "");
      ctx.check(otimes(NonnegMatrix::identity(n), a) == a && otimes(a, NonnegMatrix::identity(n)) == a,
                show(a), "identity law", "");
      ctx.check(otimes(zero, a) == zero && otimes(a, zero) == zero, show(a), "zero annihilates", "");
    }
  });

  add("core.trace-identities", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.2);
      NonnegMatrix b = random_dyadic_matrix(ctx.rng, n, n, 0.2);
      double alpha = random_dyadic_scalar(ctx.rng);
      ctx.check(max_trace(transpose(a)) == max_trace(a), show(a), "tr(A^t) == tr(A)", "");
      ctx.check(max_trace(otimes(a, b)) == max_trace(otimes(b, a)), show(a),
                "tr(A otimes B) == tr(B otimes A)", "");
      ctx.check(max_trace(oplus(a, b)) == std::max(max_trace(a), max_trace(b)), show(a),
                "tr(A oplus B) == tr(A) oplus tr(B)", "");
      ctx.check(max_trace(scale(alpha, a)) == alpha * max_trace(a), show(a),
                "tr(alpha A) == alpha tr(A)", "");
    }
  });

  add("core.norm-axioms", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.25);
      NonnegMatrix b = random_dyadic_matrix(ctx.rng, n, n, 0.25);
      double alpha = random_dyadic_scalar(ctx.rng);
      Permutation u = random_permutation(ctx.rng, n);
      ctx.check(sup_norm(a) >= 0.0, show(a), "norm nonnegative", show(sup_norm(a)));
      NonnegMatrix zero(n, n);
      ctx.check((sup_norm(a) == 0.0) == (a == zero), show(a), "norm zero iff zero matrix", "");
      ctx.check(sup_norm(scale(alpha, a)) == alpha * sup_norm(a), show(a), "norm homogeneous", "");
      ctx.check(sup_norm(transpose(a)) == sup_norm(a), show(a), "norm transpose invariant", "");
      ctx.check(sup_norm(conjugate_by_permutation(a, u)) == sup_norm(a), show(a),
                "norm conjugation invariant", "");
      ctx.check(sup_norm(oplus(a, b)) == std::max(sup_norm(a), sup_norm(b)), show(a),
                "norm of oplus is max of norms", "");
      ctx.check(sup_norm(otimes(a, b)) <= sup_norm(a) * sup_norm(b), show(a),
                "norm submultiplicative", show(sup_norm(otimes(a, b))));
      std::size_t m = 1 + ctx.rng.index(3);
      double powed = sup_norm(a);
      for (std::size_t i = 1; i < m; ++i) powed *= sup_norm(a);
      ctx.check(sup_norm(otimes_power(a, m)) <= powed, show(a), "power norm bound", "");
      // x, y with norm <= 1: entries in [0,1].
      std::vector<double> xv(n), yv(n);
      for (auto& e : xv) e = ctx.rng.chance(0.2) ? 0.0 : ctx.rng.unit_open();
      for (auto& e : yv) e = ctx.rng.chance(0.2) ? 0.0 : ctx.rng.unit_open();
      NonnegMatrix xy = outer_product(NonnegVector(xv), NonnegVector(yv));
      ctx.check(sup_norm(otimes(a, xy)) <= sup_norm(a), show(a),
                "norm of A x y^t bounded by norm of A", "");
    }
  });

  add("core.operator-norm", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 6);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.25);
      // Witness: the all-ones vector attains the norm.
      NonnegMatrix ones(n, 1);
      for (std::size_t i = 0; i < n; ++i) ones.set(i, 0, 1.0);
      ctx.check(sup_norm(otimes(a, ones)) == sup_norm(a), show(a), "all-ones attains norm", "");
      // Every unit-ball vector stays below it.
      NonnegMatrix x(n, 1);
      for (std::size_t i = 0; i < n; ++i) x.set(i, 0, ctx.rng.chance(0.2) ? 0.0 : ctx.rng.unit_open());
      ctx.check(sup_norm(otimes(a, x)) <= sup_norm(a), show(a), "unit ball below norm", "");
    }
  });

  add("core.hull-endpoints", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t count = 1 + ctx.rng.index(8);
      std::vector<double> vals;
      for (std::size_t i = 0; i < count; ++i) vals.push_back(random_dyadic_scalar(ctx.rng));
      Interval h = max_convex_hull(vals);
      ctx.check(h.lo == *std::min_element(vals.begin(), vals.end()) &&
                    h.hi == *std::max_element(vals.begin(), vals.end()),
                show(vals), "hull is [min, max]", show(h));
      for (double v : vals)
        ctx.check(h.contains(v), show(vals), "hull contains every value", show(v));
      std::vector<Interval> parts;
      for (std::size_t i = 0; i < 2; ++i) {
        double lo = random_dyadic_scalar(ctx.rng), hi = lo + random_dyadic_scalar(ctx.rng);
        parts.push_back(Interval::closed(lo, hi));
      }
      IntervalSet s(parts);
      Interval hs = max_convex_hull(s);
      ctx.check(hs.lo == s.inf() && hs.hi == s.sup() && hs.lo_closed && hs.hi_closed, show(s),
                "interval-set hull spans inf..sup", show(hs));
    }
  });

  add("core.permutation-conjugation", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 6);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.2);
      Permutation p = random_permutation(ctx.rng, n);
      NonnegMatrix b = conjugate_by_permutation(a, p);
      NonnegMatrix u = p.to_matrix();
      ctx.check(b == sandwich(a, u), show(a), "relabeling equals U^t A U", "");
      ctx.check(max_trace(b) == max_trace(a) && sup_norm(b) == sup_norm(a), show(a),
                "trace and norm conjugation invariant", "");
      ctx.check(wmax(b) == wmax(a), show(a), "wmax conjugation invariant", "");
      ctx.check(conjugate_by_permutation(a, Permutation::identity(n)) == a, show(a),
                "identity conjugation", "");
    }
  });

  add("core.scaled-permutation-product-norm", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      double alpha = random_dyadic_scalar(ctx.rng);
      Permutation u = random_permutation(ctx.rng, n);
      NonnegMatrix c = random_dyadic_matrix(ctx.rng, n, n, 0.3);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.set(i, j, std::min(c(i, j), alpha));
      NonnegMatrix a = oplus(scale(alpha, u.to_matrix()), c);
      NonnegMatrix b = random_dyadic_matrix(ctx.rng, n, n, 0.3);
      double lhs = sup_norm(otimes(a, b));
      double rhs = sup_norm(otimes(b, a));
      double expected = alpha * sup_norm(b);
      ctx.check(lhs == expected && rhs == expected, show(a) + " B=" + show(b),
                "norm(AB) == norm(BA) == alpha norm(B)",
                show(lhs) + " vs " + show(rhs) + " vs " + show(expected));
    }
  });

  add("core.toeplitz-builder", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 3, 6);
      std::vector<double> bands(2 * n - 3);
      for (auto& b : bands) b = random_dyadic_scalar(ctx.rng);
      NonnegMatrix a = build_banded_toeplitz(NonnegVector(bands), n);
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          std::ptrdiff_t off = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j);
          if (off == static_cast<std::ptrdiff_t>(n) - 1 || -off == static_cast<std::ptrdiff_t>(n) - 1)
            ok = a(i, j) == 0.0;
          else
            ok = a(i, j) == bands[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(n) - 2 - off)];
        }
      ctx.check(ok, show(a), "entries follow the bands with zero corners", "");
      AdjacencyGraph g(a);
      bool adj_ok = true;
      for (std::size_t i = 0; i < n && adj_ok; ++i)
        for (std::size_t j = 0; j < n && adj_ok; ++j) {
          if (i == j) continue;
          bool corner = (i == 0 && j == n - 1) || (i == n - 1 && j == 0);
          adj_ok = g.edge(i, j) == !corner;
        }
      ctx.check(adj_ok, show(a), "zero pattern is complete minus the corner pair", "");
    }
  });

  add("core.eigenvalue-membership", [](ClaimContext& ctx) {
    Tolerance tol;
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 6);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.35);
      double sigma = max_eigenvalue(a);
      ctx.check(wmax(a).contains_approx(sigma, tol), show(a), "eigenvalue inside wmax",
                show(sigma));
      NonnegVector d = random_dyadic_vector(ctx.rng, n, 0.3);
      NonnegMatrix dm = NonnegMatrix::diagonal(d);
      double want = sup_norm(d);
      ctx.check(tol.close(max_eigenvalue(dm), want), show(dm), "diagonal eigenvalue is max loop",
                show(max_eigenvalue(dm)));
      NonnegMatrix upper(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          upper.set(i, j, random_dyadic_scalar(ctx.rng));
      ctx.check(max_eigenvalue(upper) == 0.0, show(upper), "acyclic matrix has eigenvalue zero",
                show(max_eigenvalue(upper)));
    }
  });

  // ------------------------------------------------------------- isometry

  add("isometry.validator-definition", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 8);
      std::size_t k = 1 + ctx.rng.index(n);
      SupportPattern pat = random_pattern(ctx.rng, n, k);
      MaxIsometry x = sample_isometry(pat, ctx.rng.next());
      ctx.check(static_cast<bool>(validate_isometry(x)), show(x.to_matrix()), "sample validates",
                validate_isometry(x).reason);
      NonnegMatrix xm = x.to_matrix();
      ctx.check(otimes(transpose(xm), xm) == NonnegMatrix::identity(k), show(xm),
                "X^t otimes X == I exactly", "");
      // Corruptions must be rejected.
      NonnegMatrix low = xm;
      for (std::size_t i = 0; i < n; ++i)
        if (low(i, 0) != 0.0) low.set(i, 0, low(i, 0) * 0.5);
      ctx.check(!validate_isometry(low).ok, show(low), "column losing its unit is rejected", "");
      NonnegMatrix big = xm;
      for (std::size_t i = 0; i < n; ++i)
        if (big(i, 0) == 1.0) {
          big.set(i, 0, 1.5);
          break;
        }
      ctx.check(!validate_isometry(big).ok, show(big), "entry above one is rejected", "");
      if (k >= 2) {
        NonnegMatrix shared = xm;
        std::size_t row = pat.block_indices(0).front();
        shared.set(row, 1, 0.5);
        ctx.check(!validate_isometry(shared).ok, show(shared), "shared row is rejected", "");
      }
    }
  });

  add("isometry.full-rank-is-permutation", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 8);
      SupportPattern pat = random_pattern(ctx.rng, n, n);
      MaxIsometry x = sample_isometry(pat, ctx.rng.next());
      NonnegMatrix xm = x.to_matrix();
      bool perm = static_cast<bool>(validate_isometry(xm));
      std::vector<bool> seen(n, false);
      for (std::size_t j = 0; j < n && perm; ++j) {
        std::size_t nonzero = 0, unit_row = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (xm(i, j) != 0.0) {
            ++nonzero;
            unit_row = i;
            perm = perm && xm(i, j) == 1.0;
          }
        perm = perm && nonzero == 1 && !seen[unit_row];
        if (perm) seen[unit_row] = true;
      }
      ctx.check(perm, show(xm), "full-rank isometry is a permutation matrix", "");
    }
  });

  add("isometry.family-enumeration-bruteforce", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t k = 1 + ctx.rng.index(std::min<std::size_t>(n, 3));
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.55);
      std::set<std::vector<std::uint32_t>> expected;
      std::vector<std::size_t> label(n, 0);
      for (;;) {
        std::vector<std::uint32_t> blocks(k, 0);
        for (std::size_t i = 0; i < n; ++i)
          if (label[i] > 0) blocks[label[i] - 1] |= 1u << i;
        bool ok = std::all_of(blocks.begin(), blocks.end(),
                              [](std::uint32_t b) { return b != 0; });
        for (std::size_t b1 = 0; ok && b1 < k; ++b1)
          for (std::size_t b2 = b1 + 1; ok && b2 < k; ++b2)
            for (std::size_t i = 0; ok && i < n; ++i)
              for (std::size_t j = 0; ok && j < n; ++j)
                if (((blocks[b1] >> i) & 1u) && ((blocks[b2] >> j) & 1u))
                  ok = a(i, j) == 0.0 && a(j, i) == 0.0;
        if (ok) {
          std::sort(blocks.begin(), blocks.end(), [](std::uint32_t x, std::uint32_t y) {
            return std::countr_zero(x) < std::countr_zero(y);
          });
          expected.insert(blocks);
        }
        std::size_t pos = 0;
        while (pos < n && label[pos] == k) label[pos++] = 0;
        if (pos == n) break;
        ++label[pos];
      }
      std::set<std::vector<std::uint32_t>> got;
      for (const auto& pat : enumerate_support_families(a, k, kDefaultFamilyLimit))
        got.insert(pat.blocks);
      ctx.check(got == expected, show(a) + " k=" + show(static_cast<double>(k)),
                "family enumeration matches label brute force",
                show(static_cast<double>(got.size())) + " vs " +
                    show(static_cast<double>(expected.size())));
      if (k == 1)
        ctx.check(got.size() == (std::size_t{1} << n) - 1, show(a),
                  "k=1 yields every nonempty subset", show(static_cast<double>(got.size())));
    }
  });

  add("isometry.orthogonality-structure", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 2, 6);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.5);
      AdjacencyGraph g(a);
      std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
      std::uint32_t s = 1u + static_cast<std::uint32_t>(ctx.rng.next()) % full;
      std::uint32_t rest = full & ~s;
      if (rest == 0) continue;
      std::uint32_t u = rest;
      // Random nonempty submask of the complement.
      std::uint32_t pick = static_cast<std::uint32_t>(ctx.rng.next());
      if ((u & pick) != 0) u &= pick;
      ctx.check(blocks_orthogonal(g, s, u) == blocks_orthogonal(g, u, s), show(a),
                "orthogonality is symmetric", "");
      // Orthogonality against the entries themselves.
      bool direct = true;
      for (std::size_t i = 0; i < n && direct; ++i)
        for (std::size_t j = 0; j < n && direct; ++j)
          if (((s >> i) & 1u) && ((u >> j) & 1u)) direct = a(i, j) == 0.0 && a(j, i) == 0.0;
      ctx.check(blocks_orthogonal(g, s, u) == direct, show(a), "orthogonality matches entries", "");
      if (blocks_orthogonal(g, s, u)) {
        std::uint32_t sub = s & static_cast<std::uint32_t>(ctx.rng.next());
        if (sub)
          ctx.check(blocks_orthogonal(g, sub, u), show(a), "orthogonality survives submasks", "");
      }
    }
  });

  add("isometry.sampling-determinism", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 8);
      std::size_t k = 1 + ctx.rng.index(n);
      SupportPattern pat = random_pattern(ctx.rng, n, k);
      std::uint64_t seed = ctx.rng.next();
      MaxIsometry x = sample_isometry(pat, seed);
      MaxIsometry y = sample_isometry(pat, seed);
      ctx.check(x.values == y.values && x.pattern == y.pattern, show(x.to_matrix()),
                "same seed gives identical isometry", "");
      std::vector<std::uint32_t> singles;
      for (std::size_t i = 0; i < k; ++i) singles.push_back(1u << i);
      MaxIsometry forced = sample_isometry(SupportPattern(n, singles), ctx.rng.next());
      bool all_one = true;
      for (const auto& block : forced.values)
        for (double v : block) all_one = all_one && v == 1.0;
      ctx.check(all_one, show(forced.to_matrix()), "singleton blocks force unit entries", "");
    }
  });

  // ------------------------------------------------------------- single

  add("single.wmax-vs-oracle", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 6);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.25);
      Interval w = wmax(a);
      Interval o = oracle_wmax_k(a, 1, 64, ctx.rng.next());
      ctx.check(o.lo == w.lo && o.hi == w.hi, show(a), "sampled hull endpoints equal wmax",
                show(o) + " vs " + show(w));
      ctx.check(w.lo <= o.lo && o.hi <= w.hi, show(a), "sampled hull inside wmax", show(o));
    }
  });

  add("single.wmax-k-vs-oracle", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 6);
      std::size_t k = 1 + ctx.rng.index(n);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.25);
      Interval w = wmax_k(a, k);
      Interval o = oracle_wmax_k(a, k, 64, ctx.rng.next());
      ctx.check(o.lo == w.lo && o.hi == w.hi, show(a) + " k=" + show(static_cast<double>(k)),
                "sampled hull endpoints equal wmax_k", show(o) + " vs " + show(w));
    }
  });

  add("single.wmax-k-chain", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 8);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.25);
      ctx.check(wmax_k(a, 1) == wmax(a), show(a), "wmax_k at k=1 equals wmax", "");
      for (std::size_t k = 1; k + 1 <= n; ++k) {
        Interval big = wmax_k(a, k), small = wmax_k(a, k + 1);
        ctx.check(big.lo <= small.lo && small.hi <= big.hi,
                  show(a) + " k=" + show(static_cast<double>(k)), "rank chain is decreasing",
                  show(small) + " not in " + show(big));
      }
      Interval top = wmax_k(a, n);
      ctx.check(top.is_singleton() && top.lo == max_trace(a), show(a),
                "full-rank range is the trace singleton", show(top));
    }
  });

  add("single.wmax-k-halfway-identity", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 2, 8);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.25);
      for (std::size_t k = (n + 1) / 2; k < n; ++k) {
        double c = kth_smallest_diag(a, k);
        Interval rest = wmax_k(a, n - k);
        Interval combined{std::max(c, rest.lo), std::max(c, rest.hi), true, true};
        ctx.check(combined == wmax_k(a, k), show(a) + " k=" + show(static_cast<double>(k)),
                  "upper-half range equals c oplus lower-half range",
                  show(combined) + " vs " + show(wmax_k(a, k)));
      }
    }
  });

  add("single.wmax-k-equal-block-ranges", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t k = rand_dim(ctx.rng, 1, 3);
      std::vector<NonnegMatrix> blocks;
      for (std::size_t b = 0; b < k; ++b) {
        std::size_t nb = rand_dim(ctx.rng, 2, 3);
        NonnegMatrix m(nb, nb);
        for (std::size_t i = 0; i < nb; ++i)
          for (std::size_t j = 0; j < nb; ++j)
            m.set(i, j, static_cast<double>(ctx.rng.index(13) + 4) * 0.25);  // [1, 4]
        m.set(0, 0, 1.0);
        m.set(0, 1, 4.0);
        blocks.push_back(m);
      }
      NonnegMatrix a = block_diag(blocks);
      Interval whole = wmax(a);
      for (std::size_t m = 1; m <= k; ++m)
        ctx.check(wmax_k(a, m) == whole, show(a) + " m=" + show(static_cast<double>(m)),
                  "equal block ranges collapse the rank chain",
                  show(wmax_k(a, m)) + " vs " + show(whole));
    }
  });

  add("single.wmax-k-structured-product", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t r = rand_dim(ctx.rng, 1, 3);
      std::size_t inner = rand_dim(ctx.rng, 1, 3);
      std::size_t n = r + inner;
      NonnegMatrix c = random_dyadic_matrix(ctx.rng, r, r, 0.2);
      std::size_t zero_target = ctx.rng.index(r);
      c.set(zero_target, zero_target, 0.0);
      NonnegMatrix a1 = random_dyadic_matrix(ctx.rng, inner, inner, 0.2);
      NonnegMatrix b1 = random_dyadic_matrix(ctx.rng, inner, inner, 0.2);
      NonnegMatrix a = block_diag({NonnegMatrix::identity(r), a1});
      NonnegMatrix b = block_diag({c, b1});
      NonnegMatrix ab = otimes(a, b);
      ctx.check(ab == block_diag({c, otimes(a1, b1)}), show(a) + show(b),
                "product keeps the block structure", show(ab));
      std::size_t s = 0;
      for (std::size_t i = 0; i < r; ++i)
        if (c(i, i) == 0.0) ++s;
      double bound = std::max(sup_norm(otimes(a1, b1)), sup_norm(c));
      for (std::size_t k = 1; k < n; ++k) {
        Interval w = wmax_k(ab, k);
        double lo = k <= s ? 0.0 : kth_smallest_diag(ab, k);
        ctx.check(w == Interval::closed(lo, bound), show(ab) + " k=" + show(static_cast<double>(k)),
                  "structured product range", show(w));
      }
      NonnegMatrix ba = otimes(b, a);
      if (sup_norm(otimes(a1, b1)) == sup_norm(otimes(b1, a1))) {
        for (std::size_t k = 1; k <= s; ++k)
          ctx.check(wmax_k(ab, k) == wmax_k(ba, k), show(ab),
                    "equal inner norms give equal product ranges", "");
      }
      ctx.check(wmax(ab) == Interval::closed(0.0, bound), show(ab),
                "product wmax starts at zero", show(wmax(ab)));
    }
  });

  add("single.achievable-set-grid-oracle", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.4);
      std::size_t size = 1 + ctx.rng.index(std::min<std::size_t>(n, 3));
      std::vector<std::size_t> pool(n);
      for (std::size_t i = 0; i < n; ++i) pool[i] = i;
      for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + ctx.rng.index(n - i)]);
      std::vector<std::size_t> support(pool.begin(), pool.begin() + size);
      Interval analytic = achievable_diag_set(a, support);
      std::vector<double> samples = oracle_achievable_grid(a, support, 32);
      Interval hull = max_convex_hull(samples);
      bool inside = hull.lo >= analytic.lo && hull.hi <= analytic.hi &&
                    (analytic.lo_closed || hull.lo > analytic.lo);
      ctx.check(inside, show(a), "sampled hull inside analytic set",
                show(hull) + " vs " + show(analytic));
      ctx.check(hull.hi == analytic.hi, show(a), "upper endpoint attained exactly",
                show(hull) + " vs " + show(analytic));
      if (analytic.lo_closed)
        ctx.check(hull.lo == analytic.lo, show(a), "closed lower endpoint attained exactly",
                  show(hull) + " vs " + show(analytic));
      else
        ctx.check(hull.lo > 0.0 && hull.lo <= 1e-3, show(a),
                  "open-zero bound approached but never hit", show(hull.lo));
    }
  });

  add("single.lambda-chain", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.4);
      IntervalSet prev = lambda_k(a, 1);
      ctx.check(prev == IntervalSet({wmax(a)}), show(a), "rank-1 set equals wmax",
                show(prev) + " vs " + show(wmax(a)));
      for (std::size_t k = 2; k <= n; ++k) {
        IntervalSet cur = lambda_k(a, k);
        ctx.check(cur.subset_of(prev), show(a) + " k=" + show(static_cast<double>(k)),
                  "rank chain is decreasing", show(cur) + " not in " + show(prev));
        prev = cur;
      }
    }
  });

  add("single.lambda-scaling-transpose", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t k = 1 + ctx.rng.index(n);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.4);
      double alpha = random_dyadic_scalar(ctx.rng);
      IntervalSet base = lambda_k(a, k);
      IntervalSet scaled = lambda_k(scale(alpha, a), k);
      std::vector<Interval> expect;
      for (const auto& iv : base.parts())
        expect.push_back({alpha * iv.lo, alpha * iv.hi, iv.lo_closed, iv.hi_closed});
      ctx.check(scaled == IntervalSet(expect), show(a) + " alpha=" + show(alpha),
                "range scales with the matrix", show(scaled));
      ctx.check(lambda_k(transpose(a), k) == base, show(a), "range is transpose invariant", "");
      Permutation p = random_permutation(ctx.rng, n);
      ctx.check(lambda_k(conjugate_by_permutation(a, p), k) == base, show(a),
                "range is conjugation invariant", "");
    }
  });

  add("single.lambda-scalar-matrix", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      double alpha = random_dyadic_scalar(ctx.rng);
      NonnegMatrix scalar = scale(alpha, NonnegMatrix::identity(n));
      for (std::size_t k = 1; k <= n; ++k)
        ctx.check(lambda_k(scalar, k) == IntervalSet({Interval::singleton(alpha)}),
                  show(scalar) + " k=" + show(static_cast<double>(k)),
                  "scalar matrix has singleton range", show(lambda_k(scalar, k)));
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.4);
      bool is_scalar = true;
      for (std::size_t i = 0; i < n && is_scalar; ++i)
        for (std::size_t j = 0; j < n && is_scalar; ++j)
          is_scalar = (i == j) ? a(i, j) == a(0, 0) : a(i, j) == 0.0;
      ctx.check(!lambda_k(a, n).empty() == is_scalar, show(a),
                "full-rank range nonempty exactly for scalar matrices", "");
    }
  });

  add("single.lambda-submatrix-blocks", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 2, 5);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.45);
      std::vector<std::size_t> idx = random_subset(ctx.rng, n, 1);
      NonnegMatrix b = principal_submatrix(a, idx);
      for (std::size_t k = 1; k <= idx.size(); ++k)
        ctx.check(lambda_k(b, k).subset_of(lambda_k(a, k)),
                  show(a) + " sub=" + show(b) + " k=" + show(static_cast<double>(k)),
                  "principal submatrix range embeds",
                  show(lambda_k(b, k)) + " not in " + show(lambda_k(a, k)));
      // Block union and block intersection.
      std::size_t n2 = rand_dim(ctx.rng, 1, 3);
      NonnegMatrix c = random_dyadic_matrix(ctx.rng, n2, n2, 0.45);
      NonnegMatrix big = block_diag({a, c});
      for (std::size_t k = 1; k <= std::min(n, n2); ++k) {
        IntervalSet whole = lambda_k(big, k);
        ctx.check(lambda_k(a, k).subset_of(whole) && lambda_k(c, k).subset_of(whole),
                  show(big) + " k=" + show(static_cast<double>(k)), "block ranges embed", "");
      }
      std::size_t k1 = 1 + ctx.rng.index(n), k2 = 1 + ctx.rng.index(n2);
      IntervalSet l1 = lambda_k(a, k1), l2 = lambda_k(c, k2);
      std::vector<Interval> meet;
      for (const auto& p1 : l1.parts())
        for (const auto& p2 : l2.parts())
          if (auto iv = intersect(p1, p2)) meet.push_back(*iv);
      ctx.check(IntervalSet(meet).subset_of(lambda_k(big, k1 + k2)),
                show(big) + " k1,k2=" + show(static_cast<double>(k1)) + "," +
                    show(static_cast<double>(k2)),
                "intersection of block ranges embeds at the combined rank", "");
    }
  });

  add("single.lambda-in-wmax-k", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t k = 1 + ctx.rng.index(n);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.4);
      IntervalSet ls = lambda_k(a, k);
      Interval w = wmax_k(a, k);
      for (const auto& part : ls.parts())
        ctx.check(part.lo >= w.lo && part.hi <= w.hi,
                  show(a) + " k=" + show(static_cast<double>(k)),
                  "interval range sits inside the trace range", show(part) + " vs " + show(w));
    }
  });

  add("single.lambda-witness-roundtrip", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t k = 1 + ctx.rng.index(n);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.4);
      IntervalSet ls = lambda_k(a, k);
      std::vector<double> cands, non_members;
      probe_values(ls, &cands, &non_members);
      // Entry-anchored interior values: exact scaled copies of matrix
      // entries, reachable on the rounding grid whenever a family admits
      // them. The generic midpoint probes from probe_values stay in as
      // soundness-only candidates.
      for (const Interval& iv : ls.parts()) {
        if (iv.is_singleton()) continue;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            for (double d : {0.0625, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875}) {
              double v = a(r, c) * d;
              if (v > iv.lo && v < iv.hi) cands.push_back(v);
            }
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      for (double lambda : cands) {
        bool certified = certified_lambda(a, k, lambda);
        auto x = witness_isometry(a, k, lambda);
        if (certified &&
            !ctx.check(x.has_value(), show(a) + " k=" + show(static_cast<double>(k)),
                       "witness found for attainable member " + show(lambda), "none"))
          continue;
        if (!x) continue;
        ctx.check(static_cast<bool>(validate_isometry(*x)), show(x->to_matrix()),
                  "witness validates", validate_isometry(*x).reason);
        NonnegMatrix d = sandwich(a, x->to_matrix());
        double got = 0.0;
        bool diag = is_scalar_multiple_of_identity(d, &got);
        ctx.check(diag && got == lambda, show(a) + " lambda=" + show(lambda),
                  "witness reproduces lambda exactly", diag ? show(got) : "not scalar");
        ctx.check(ls.contains(lambda), show(a) + " lambda=" + show(lambda),
                  "witnessed value lies in the computed range", "");
      }
      for (double lambda : non_members)
        ctx.check(!witness_isometry(a, k, lambda).has_value(),
                  show(a) + " k=" + show(static_cast<double>(k)),
                  "no witness for non-member " + show(lambda), "witness produced");
    }
  });

  add("single.lambda-sampling-soundness", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t k = 1 + ctx.rng.index(n);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.4);
      IntervalSet ls = lambda_k(a, k);
      auto families = enumerate_support_families(a, k, kDefaultFamilyLimit);
      for (std::size_t s = 0; s < 20 && !families.empty(); ++s) {
        const SupportPattern& pat = families[ctx.rng.index(families.size())];
        MaxIsometry x = sample_isometry(pat, ctx.rng.next());
        NonnegMatrix d = sandwich(a, x.to_matrix());
        double lambda = 0.0;
        if (is_scalar_multiple_of_identity(d, &lambda))
          ctx.check(ls.contains(lambda), show(a) + " k=" + show(static_cast<double>(k)),
                    "equalized sample lies in the computed range", show(lambda));
      }
    }
  });

  add("single.lambda-membership-consistency", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 4);
      std::size_t k = 1 + ctx.rng.index(n);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.4);
      IntervalSet ls = lambda_k(a, k);
      std::vector<double> members, non_members;
      probe_values(ls, &members, &non_members);
      for (double lambda : members) {
        Membership m = oracle_lambda_membership(a, k, lambda, 64);
        ctx.check(m != Membership::non_member_proved, show(a) + " lambda=" + show(lambda),
                  "member never disproved by the oracle", "");
      }
      for (double lambda : non_members) {
        Membership m = oracle_lambda_membership(a, k, lambda, 64);
        ctx.check(m != Membership::member, show(a) + " lambda=" + show(lambda),
                  "non-member never constructed by the oracle", "");
      }
    }
  });

  add("single.lambda-radius", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t k = 1 + ctx.rng.index(n);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.4);
      IntervalSet ls = lambda_k(a, k);
      RadiusValue r = lambda_radius(a, k);
      ctx.check(r.is_bottom() == ls.empty(), show(a), "bottom exactly for the empty range", "");
      if (!ls.empty()) {
        ctx.check(r.value == ls.sup(), show(a), "radius is the supremum", show(*r.value));
        ctx.check(*r.value <= sup_norm(a), show(a), "radius below the norm", show(*r.value));
      }
      RadiusValue r1 = lambda_radius(a, 1);
      ctx.check(!r1.is_bottom() && *r1.value == sup_norm(a), show(a),
                "rank-1 radius equals the norm", "");
    }
  });

  add("single.rank-one-sum-bound", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t s = 1 + ctx.rng.index(3);
      std::vector<std::pair<NonnegVector, NonnegVector>> factors;
      NonnegMatrix z(n, n);
      for (std::size_t j = 0; j < s; ++j) {
        NonnegVector x = random_dyadic_vector(ctx.rng, n, 0.3);
        NonnegVector y = random_dyadic_vector(ctx.rng, n, 0.3);
        z = oplus(z, outer_product(x, y));
        factors.emplace_back(std::move(x), std::move(y));
      }
      std::size_t k = 1 + ctx.rng.index(n);
      RankOneSumBound bound = rank_one_sum_bound(factors, k);
      IntervalSet ls = lambda_k(z, k);
      ctx.check(ls.subset_of(bound.cover), show(z), "range covered by factor ranges",
                show(ls) + " not in " + show(bound.cover));
      ctx.check(bound.radius_bound == sup_norm(z), show(z),
                "radius bound is the norm of the sum", show(bound.radius_bound));
      RadiusValue r = lambda_radius(z, k);
      if (!r.is_bottom())
        ctx.check(*r.value <= bound.radius_bound, show(z), "radius below the bound",
                  show(*r.value));
    }
  });

  // -------------------------------------------------------------- joint

  add("joint.eval-definition", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(3);
      std::size_t k = 1 + ctx.rng.index(n);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      SupportPattern pat = random_pattern(ctx.rng, n, k);
      MaxIsometry x = sample_isometry(pat, ctx.rng.next());
      std::vector<double> got = joint_eval(tup, x);
      std::vector<double> direct(m, 0.0);
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t b = 0; b < pat.k(); ++b)
          direct[l] = std::max(
              direct[l], direct_col_value(tup.mats[l], pat.block_indices(b), x.values[b]));
      ctx.check(got == direct, show(tup.mats[0]), "evaluation matches the per-column definition",
                show(got) + " vs " + show(direct));
      ctx.check(joint_eval(tup, x.to_matrix()) == got, show(tup.mats[0]),
                "matrix route agrees with the structured route", "");
      std::vector<double> traces;
      for (const auto& mat : tup.mats) traces.push_back(max_trace(mat));
      ctx.check(joint_eval(tup, NonnegMatrix::identity(n)) == traces, show(tup.mats[0]),
                "identity evaluates to the trace tuple", "");
    }
  });

  add("joint.box-containment", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(3);
      std::size_t k = 1 + ctx.rng.index(n);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      std::uint64_t seed = ctx.rng.next();
      PointCloud cloud = joint_sample_cloud(tup, k, 50, seed);
      ctx.check(!cloud.proven_empty && cloud.points.size() == 50, show(tup.mats[0]),
                "cloud produced for every feasible rank", "");
      BoxRegion box = joint_bounding_box(tup, k);
      for (const auto& p : cloud.points)
        ctx.check(box.contains(p), show(tup.mats[0]) + " k=" + show(static_cast<double>(k)),
                  "every sample inside the bounding box", show(p));
      PointCloud again = joint_sample_cloud(tup, k, 50, seed);
      ctx.check(again.points == cloud.points, show(tup.mats[0]), "cloud deterministic in seed",
                "");
      if (k == n) {
        std::vector<double> full = joint_exact_full(tup);
        for (const auto& p : cloud.points)
          ctx.check(p == full, show(tup.mats[0]), "full-rank cloud collapses to the trace tuple",
                    show(p));
      }
    }
  });

  add("joint.diagonal-tuple", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t k = 1 + ctx.rng.index(n);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.25);
      MatrixTuple tup(std::vector<NonnegMatrix>{a, a, a});
      PointCloud cloud = joint_sample_cloud(tup, k, 40, ctx.rng.next());
      Interval w = wmax_k(a, k);
      for (const auto& p : cloud.points) {
        ctx.check(p[0] == p[1] && p[1] == p[2], show(a), "repeated tuple stays on the diagonal",
                  show(p));
        ctx.check(w.contains(p[0]), show(a), "diagonal coordinate inside the trace range",
                  show(p[0]));
      }
    }
  });

  add("joint.shift-subadditivity", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(3);
      std::size_t k = 1 + ctx.rng.index(n);
      MatrixTuple ta = random_tuple(ctx.rng, m, n, 0.25);
      MatrixTuple tb = random_tuple(ctx.rng, m, n, 0.25);
      std::vector<double> alphas;
      std::vector<NonnegMatrix> shifted, summed;
      for (std::size_t l = 0; l < m; ++l) {
        alphas.push_back(random_dyadic_scalar(ctx.rng));
        shifted.push_back(oplus(ta.mats[l], scale(alphas[l], NonnegMatrix::identity(n))));
        summed.push_back(oplus(ta.mats[l], tb.mats[l]));
      }
      MatrixTuple ts(shifted), tsum(summed);
      SupportPattern pat = random_pattern(ctx.rng, n, k);
      MaxIsometry x = sample_isometry(pat, ctx.rng.next());
      std::vector<double> base = joint_eval(ta, x), other = joint_eval(tb, x);
      std::vector<double> shift_got = joint_eval(ts, x), sum_got = joint_eval(tsum, x);
      bool shift_ok = true, sum_ok = true;
      for (std::size_t l = 0; l < m; ++l) {
        shift_ok = shift_ok && shift_got[l] == std::max(base[l], alphas[l]);
        sum_ok = sum_ok && sum_got[l] == std::max(base[l], other[l]);
      }
      ctx.check(shift_ok, show(ta.mats[0]), "identity shift adds the scalar per coordinate",
                show(shift_got));
      ctx.check(sum_ok, show(ta.mats[0]), "tuple oplus evaluates to coordinate oplus",
                show(sum_got));
    }
  });

  add("joint.conjugation", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(2);
      std::size_t k = 1 + ctx.rng.index(n);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      Permutation u = random_permutation(ctx.rng, n);
      std::vector<NonnegMatrix> conj;
      for (const auto& mat : tup.mats) conj.push_back(conjugate_by_permutation(mat, u));
      MatrixTuple tc(conj);
      SupportPattern pat = random_pattern(ctx.rng, n, k);
      MaxIsometry x = sample_isometry(pat, ctx.rng.next());
      NonnegMatrix moved = otimes(u.to_matrix(), x.to_matrix());
      ctx.check(joint_eval(tc, x) == joint_eval(tup, moved), show(tup.mats[0]),
                "conjugated tuple evaluates through the moved isometry", "");
    }
  });

  add("joint.subtuple-embedding", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 2, 5);
      std::size_t m = 1 + ctx.rng.index(2);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      std::vector<std::size_t> idx = random_subset(ctx.rng, n, 1);
      std::vector<NonnegMatrix> subs;
      for (const auto& mat : tup.mats) subs.push_back(principal_submatrix(mat, idx));
      MatrixTuple sub(subs);
      std::size_t k = 1 + ctx.rng.index(idx.size());
      SupportPattern pat = random_pattern(ctx.rng, idx.size(), k);
      MaxIsometry x = sample_isometry(pat, ctx.rng.next());
      NonnegMatrix padded = embed_rows(x.to_matrix(), idx, n);
      ctx.check(static_cast<bool>(validate_isometry(padded)), show(padded),
                "padded isometry stays valid", "");
      ctx.check(joint_eval(sub, x.to_matrix()) == joint_eval(tup, padded), show(tup.mats[0]),
                "principal subtuple point is a tuple point", "");
      // Block tuples contain both block clouds.
      std::size_t p = rand_dim(ctx.rng, 1, 3);
      MatrixTuple other = random_tuple(ctx.rng, m, p, 0.25);
      std::vector<NonnegMatrix> stacked;
      for (std::size_t l = 0; l < m; ++l)
        stacked.push_back(block_diag({tup.mats[l], other.mats[l]}));
      MatrixTuple big(stacked);
      std::size_t kk = 1 + ctx.rng.index(std::min(n, p));
      SupportPattern pa = random_pattern(ctx.rng, n, kk);
      MaxIsometry xa = sample_isometry(pa, ctx.rng.next());
      std::vector<std::size_t> upper(n);
      for (std::size_t i = 0; i < n; ++i) upper[i] = i;
      ctx.check(joint_eval(tup, xa.to_matrix()) ==
                    joint_eval(big, embed_rows(xa.to_matrix(), upper, n + p)),
                show(tup.mats[0]), "upper block point is a block-tuple point", "");
      SupportPattern pb = random_pattern(ctx.rng, p, kk);
      MaxIsometry xb = sample_isometry(pb, ctx.rng.next());
      std::vector<std::size_t> lower(p);
      for (std::size_t i = 0; i < p; ++i) lower[i] = n + i;
      ctx.check(joint_eval(other, xb.to_matrix()) ==
                    joint_eval(big, embed_rows(xb.to_matrix(), lower, n + p)),
                show(other.mats[0]), "lower block point is a block-tuple point", "");
    }
  });

  add("joint.column-deletion", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 3, 6);
      std::size_t m = 2;
      std::size_t k = m + ctx.rng.index(n - m);  // m <= k < n, so k+1 <= n
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      SupportPattern pat = random_pattern(ctx.rng, n, k + 1);
      MaxIsometry x = sample_isometry(pat, ctx.rng.next());
      std::vector<std::vector<double>> per_col(m, std::vector<double>(k + 1, 0.0));
      std::vector<double> lambda(m, 0.0);
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t b = 0; b <= k; ++b) {
          per_col[l][b] = direct_col_value(tup.mats[l], pat.block_indices(b), x.values[b]);
          lambda[l] = std::max(lambda[l], per_col[l][b]);
        }
      std::optional<std::size_t> drop;
      for (std::size_t s = 0; s <= k && !drop; ++s) {
        bool keeps = true;
        for (std::size_t l = 0; l < m && keeps; ++l) {
          double rest = 0.0;
          for (std::size_t b = 0; b <= k; ++b)
            if (b != s) rest = std::max(rest, per_col[l][b]);
          keeps = rest == lambda[l];
        }
        if (keeps) drop = s;
      }
      if (!ctx.check(drop.has_value(), show(tup.mats[0]),
                     "a redundant column exists when columns exceed the arity", ""))
        continue;
      std::vector<std::uint32_t> blocks;
      MaxIsometry reduced;
      for (std::size_t b = 0; b <= k; ++b)
        if (b != *drop) {
          blocks.push_back(pat.blocks[b]);
          reduced.values.push_back(x.values[b]);
        }
      reduced.pattern = SupportPattern(n, blocks);
      ctx.check(joint_eval(tup, reduced) == lambda, show(tup.mats[0]),
                "dropping the redundant column keeps the point", "");
    }
  });

  add("joint.lipschitz", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(3);
      std::size_t k = 1 + ctx.rng.index(n);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      SupportPattern pa = random_pattern(ctx.rng, n, k);
      SupportPattern pb = ctx.rng.chance(0.5) ? pa : random_pattern(ctx.rng, n, k);
      NonnegMatrix x = grid_isometry(ctx.rng, pa).to_matrix();
      NonnegMatrix y = grid_isometry(ctx.rng, pb).to_matrix();
      LipschitzCert cert = lipschitz_certificate(tup, x, y);
      ctx.check(cert.holds(), show(tup.mats[0]) + " X=" + show(x) + " Y=" + show(y),
                "evaluation difference within the bound",
                show(cert.lhs) + " > " + show(cert.rhs));
      LipschitzCert same = lipschitz_certificate(tup, x, x);
      ctx.check(same.lhs == 0.0 && same.rhs == 0.0, show(x), "identical arguments give (0, 0)",
                "");
    }
  });

  add("joint.full-rank-point", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(3);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      std::vector<double> traces;
      for (const auto& mat : tup.mats) traces.push_back(max_trace(mat));
      ctx.check(joint_exact_full(tup) == traces, show(tup.mats[0]),
                "full-rank point is the trace tuple", show(joint_exact_full(tup)));
      std::vector<NonnegMatrix> scaled;
      std::vector<double> want;
      for (std::size_t l = 0; l < m; ++l) {
        double alpha = random_dyadic_scalar(ctx.rng);
        scaled.push_back(scale(alpha, tup.mats[l]));
        want.push_back(alpha * traces[l]);
      }
      ctx.check(joint_exact_full(MatrixTuple(scaled)) == want, show(tup.mats[0]),
                "scaling multiplies the trace tuple", "");
    }
  });

  // --------------------------------------------------------------- perm

  add("perm.range-bruteforce", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 4);
      std::size_t m = 1 + ctx.rng.index(2);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.2);
      NonnegVector c = random_dyadic_vector(ctx.rng, n, 0.2);
      NonnegMatrix cm = random_dyadic_matrix(ctx.rng, n, n, 0.3);
      std::vector<std::vector<double>> joint_pts;
      std::vector<std::vector<double>> big_pts;
      for_each_bijection(n, [&](const std::vector<std::size_t>& sigma) {
        std::vector<double> p(m, 0.0), q(m, 0.0);
        for (std::size_t l = 0; l < m; ++l) {
          for (std::size_t i = 0; i < n; ++i)
            p[l] = std::max(p[l], c[i] * tup.mats[l](sigma[i], sigma[i]));
          Permutation perm{std::vector<std::size_t>(sigma)};
          NonnegMatrix u = perm.to_matrix();
          q[l] = max_trace(otimes(cm, sandwich(tup.mats[l], u)));
        }
        joint_pts.push_back(p);
        big_pts.push_back(q);
      });
      ctx.check(joint_c_range(tup, c) == make_point_set(joint_pts), show(tup.mats[0]),
                "weighted range matches bijection brute force", "");
      ctx.check(joint_C_range(tup, cm) == make_point_set(big_pts), show(tup.mats[0]),
                "matrix-weighted range matches the trace chain brute force", "");
      PointSet single = c_range(tup.mats[0], c);
      std::vector<std::vector<double>> firsts;
      for (const auto& p : joint_pts) firsts.push_back({p[0]});
      ctx.check(single == make_point_set(firsts), show(tup.mats[0]),
                "single-matrix range agrees with the first coordinate", "");
    }
  });

  add("perm.diag-C-reduction", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(3);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      NonnegVector c = random_dyadic_vector(ctx.rng, n, 0.25);
      NonnegMatrix cd = NonnegMatrix::diagonal(c);
      ctx.check(joint_C_range(tup, cd) == joint_c_range(tup, c), show(tup.mats[0]),
                "diagonal weight matrix reduces to the weight vector", "");
      ctx.check(C_range(tup.mats[0], cd) == c_range(tup.mats[0], c), show(tup.mats[0]),
                "single-matrix reduction agrees", "");
    }
  });

  add("perm.projection-cardinality", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(3);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      NonnegVector c = random_dyadic_vector(ctx.rng, n, 0.25);
      PointSet joint = joint_c_range(tup, c);
      std::size_t r = 0;
      for (std::size_t l = 0; l < m; ++l) {
        PointSet single = c_range(tup.mats[l], c);
        r = std::max(r, single.cardinality());
        std::vector<std::vector<double>> proj;
        for (const auto& p : joint.points) proj.push_back({p[l]});
        ctx.check(make_point_set(proj) == single, show(tup.mats[l]),
                  "coordinate projection equals the single-matrix range", "");
      }
      std::size_t fact = 1;
      for (std::size_t i = 2; i <= n; ++i) fact *= i;
      ctx.check(r <= joint.cardinality() && joint.cardinality() <= fact, show(tup.mats[0]),
                "cardinality between the largest factor and n!",
                show(static_cast<double>(joint.cardinality())));
      // Singleton factors force the product set.
      std::vector<NonnegMatrix> flat;
      std::vector<double> expect;
      double cmax = 0.0;
      for (std::size_t i = 0; i < n; ++i) cmax = std::max(cmax, c[i]);
      for (std::size_t l = 0; l < m; ++l) {
        double d = random_dyadic_scalar(ctx.rng);
        NonnegMatrix mat = scale(d, NonnegMatrix::identity(n));
        flat.push_back(mat);
        expect.push_back(d * cmax);
      }
      PointSet singleton = joint_c_range(MatrixTuple(flat), c);
      ctx.check(singleton.cardinality() == 1 && singleton.points[0] == expect, show(flat[0]),
                "singleton factors collapse the joint range", "");
    }
  });

  add("perm.shift", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(3);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      NonnegMatrix cm = random_dyadic_matrix(ctx.rng, n, n, 0.3);
      double trc = max_trace(cm);
      std::vector<NonnegMatrix> shifted;
      std::vector<double> alphas;
      for (std::size_t l = 0; l < m; ++l) {
        alphas.push_back(random_dyadic_scalar(ctx.rng));
        shifted.push_back(oplus(tup.mats[l], scale(alphas[l], NonnegMatrix::identity(n))));
      }
      PointSet base = joint_C_range(tup, cm);
      std::vector<std::vector<double>> moved;
      for (const auto& p : base.points) {
        std::vector<double> q(m);
        for (std::size_t l = 0; l < m; ++l) q[l] = std::max(p[l], alphas[l] * trc);
        moved.push_back(q);
      }
      ctx.check(joint_C_range(MatrixTuple(shifted), cm) == make_point_set(moved),
                show(tup.mats[0]), "identity shifts translate the range by the weighted trace",
                "");
    }
  });

  add("perm.subadditivity", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 4);
      std::size_t m = 1 + ctx.rng.index(2);
      MatrixTuple ta = random_tuple(ctx.rng, m, n, 0.25);
      MatrixTuple tb = random_tuple(ctx.rng, m, n, 0.25);
      NonnegMatrix cm = random_dyadic_matrix(ctx.rng, n, n, 0.3);
      NonnegMatrix dm = random_dyadic_matrix(ctx.rng, n, n, 0.3);
      std::vector<NonnegMatrix> summed;
      for (std::size_t l = 0; l < m; ++l) summed.push_back(oplus(ta.mats[l], tb.mats[l]));
      PointSet lhs = joint_C_range(MatrixTuple(summed), cm);
      PointSet sum_sets = pointwise_oplus(joint_C_range(ta, cm), joint_C_range(tb, cm));
      ctx.check(lhs.subset_of(sum_sets), show(ta.mats[0]),
                "range of the oplus tuple within the oplus of ranges", "");
      PointSet lhs2 = joint_C_range(ta, oplus(cm, dm));
      PointSet sum2 = pointwise_oplus(joint_C_range(ta, cm), joint_C_range(ta, dm));
      ctx.check(lhs2.subset_of(sum2), show(ta.mats[0]),
                "range for the oplus weight within the oplus of ranges", "");
    }
  });

  add("perm.conjugation", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(2);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      NonnegMatrix cm = random_dyadic_matrix(ctx.rng, n, n, 0.3);
      Permutation u = random_permutation(ctx.rng, n);
      std::vector<NonnegMatrix> conj;
      for (const auto& mat : tup.mats) conj.push_back(conjugate_by_permutation(mat, u));
      ctx.check(joint_C_range(MatrixTuple(conj), cm) == joint_C_range(tup, cm), show(tup.mats[0]),
                "conjugating the tuple preserves the range", "");
      ctx.check(joint_C_range(tup, conjugate_by_permutation(cm, u)) == joint_C_range(tup, cm),
                show(tup.mats[0]), "conjugating the weight matrix preserves the range", "");
      NonnegVector c = random_dyadic_vector(ctx.rng, n, 0.25);
      ctx.check(joint_c_range(MatrixTuple(conj), c) == joint_c_range(tup, c), show(tup.mats[0]),
                "weighted range conjugation invariant", "");
    }
  });

  add("perm.transpose", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(2);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      NonnegMatrix cm = random_dyadic_matrix(ctx.rng, n, n, 0.3);
      std::vector<NonnegMatrix> trans;
      for (const auto& mat : tup.mats) trans.push_back(transpose(mat));
      ctx.check(joint_C_range(MatrixTuple(trans), cm) == joint_C_range(tup, transpose(cm)),
                show(tup.mats[0]), "transposing the tuple transposes the weight", "");
      NonnegVector c = random_dyadic_vector(ctx.rng, n, 0.25);
      ctx.check(joint_c_range(MatrixTuple(trans), c) == joint_c_range(tup, c), show(tup.mats[0]),
                "weighted range transpose invariant", "");
    }
  });

  add("perm.scalar-and-affine-C", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      std::size_t m = 1 + ctx.rng.index(3);
      MatrixTuple tup = random_tuple(ctx.rng, m, n, 0.25);
      double alpha = random_dyadic_scalar(ctx.rng);
      double beta = random_dyadic_scalar(ctx.rng);
      std::vector<double> traces;
      for (const auto& mat : tup.mats) traces.push_back(max_trace(mat));
      PointSet scalar = joint_C_range(tup, scale(alpha, NonnegMatrix::identity(n)));
      std::vector<double> want(m);
      for (std::size_t l = 0; l < m; ++l) want[l] = alpha * traces[l];
      ctx.check(scalar.cardinality() == 1 && scalar.points[0] == want, show(tup.mats[0]),
                "scalar weight collapses to the scaled trace tuple", "");
      NonnegMatrix cm = random_dyadic_matrix(ctx.rng, n, n, 0.3);
      NonnegMatrix affine = oplus(scale(alpha, cm), scale(beta, NonnegMatrix::identity(n)));
      PointSet base = joint_C_range(tup, cm);
      std::vector<std::vector<double>> mapped;
      for (const auto& p : base.points) {
        std::vector<double> q(m);
        for (std::size_t l = 0; l < m; ++l) q[l] = std::max(alpha * p[l], beta * traces[l]);
        mapped.push_back(q);
      }
      ctx.check(joint_C_range(tup, affine) == make_point_set(mapped), show(tup.mats[0]),
                "affine weight acts pointwise on the range", "");
      // Constant weight vectors collapse the weighted range.
      std::vector<double> cv(n, alpha);
      PointSet flat = joint_c_range(tup, NonnegVector(cv));
      ctx.check(flat.cardinality() == 1 && flat.points[0] == want, show(tup.mats[0]),
                "constant weights collapse to the scaled trace tuple", "");
    }
  });

  add("perm.hull", [](ClaimContext& ctx) {
    for (int t = 0; t < ctx.trials; ++t) {
      std::size_t n = rand_dim(ctx.rng, 1, 5);
      NonnegMatrix a = random_dyadic_matrix(ctx.rng, n, n, 0.25);
      NonnegVector c = random_dyadic_vector(ctx.rng, n, 0.25);
      PointSet values = c_range(a, c);
      Interval hull = c_range_hull(a, c);
      std::vector<double> scalars = values.scalars();
      ctx.check(hull.lo == *std::min_element(scalars.begin(), scalars.end()) &&
                    hull.hi == *std::max_element(scalars.begin(), scalars.end()),
                show(a), "hull spans the enumerated extremes", show(hull));
      ctx.check(values.contains({hull.lo}) && values.contains({hull.hi}), show(a),
                "hull endpoints are members", "");
    }
  });

  return reg;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

}  // namespace maxalg
