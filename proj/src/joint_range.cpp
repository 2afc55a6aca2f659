#include "maxalg/joint_range.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "maxalg/errors.hpp"

namespace maxalg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

MatrixTuple::MatrixTuple(std::vector<NonnegMatrix> ms) : mats(std::move(ms)) {
  if (mats.empty()) throw std::invalid_argument("matrix tuple: empty");
  for (const auto& m : mats) {
    if (!m.square() || m.rows() != mats[0].rows())
      throw std::invalid_argument("matrix tuple: matrices must be square and of equal size");
  }
  if (mats[0].rows() == 0) throw std::invalid_argument("matrix tuple: empty matrices");
}

bool BoxRegion::contains(const std::vector<double>& p) const {
  if (p.size() != coords.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!coords[i].contains(p[i])) return false;
  return true;
}

std::vector<double> joint_eval(const MatrixTuple& t, const NonnegMatrix& x) {
  if (x.rows() != t.dim()) throw std::invalid_argument("joint_eval: row count mismatch");
  NonnegMatrix xt = transpose(x);
  std::vector<double> out;
  out.reserve(t.arity());
  for (const auto& a : t.mats) out.push_back(max_trace(otimes(otimes(xt, a), x)));
  return out;
}

std::vector<double> joint_eval(const MatrixTuple& t, const MaxIsometry& x) {
  return joint_eval(t, x.to_matrix());
}

BoxRegion joint_bounding_box(const MatrixTuple& t, std::size_t k) {
  BoxRegion box;
  for (const auto& a : t.mats) box.coords.push_back(wmax_k(a, k));
  return box;
}

std::vector<double> joint_exact_full(const MatrixTuple& t) {
  std::vector<double> out;
  out.reserve(t.arity());
  for (const auto& a : t.mats) out.push_back(max_trace(a));
  return out;
}

PointCloud joint_sample_cloud(const MatrixTuple& t, std::size_t k, std::size_t samples,
                              std::uint64_t seed, std::uint64_t limit) {
  const std::size_t n = t.dim();
  if (k == 0 || k > n) throw std::invalid_argument("joint_sample_cloud: k out of range");
  PointCloud cloud;
  cloud.seed = seed;

  // Support patterns for trace sampling carry no orthogonality constraint:
  // enumerate disjoint families over the edgeless graph when feasible.
  std::vector<SupportPattern> patterns;
  bool enumerated = false;
  if (n <= 12) {
    try {
      AdjacencyGraph g = AdjacencyGraph::edgeless(n);
      for_each_support_family(g, k, limit, [&](const std::vector<std::uint32_t>& blocks) {
        patterns.push_back(SupportPattern(n, blocks));
      });
      enumerated = true;
    } catch (const limit_exceeded&) {
      patterns.clear();
    }
  }
  if (enumerated && patterns.empty()) {
    cloud.proven_empty = true;
    return cloud;
  }

  std::uint64_t state = splitmix64(seed ^ 0x636c6f7564ULL);
  auto draw = [&state] { return state = splitmix64(state); };
  cloud.points.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    SupportPattern pat;
    if (enumerated) {
      pat = patterns[static_cast<std::size_t>(draw() % patterns.size())];
    } else {
      // Rejection: assign each index to one of k blocks or none; k singleton
      // blocks always exist, so this terminates fast.
      for (;;) {
        std::vector<std::uint32_t> blocks(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t label = static_cast<std::size_t>(draw() % (k + 1));
          if (label > 0) blocks[label - 1] |= 1u << i;
        }
        if (std::all_of(blocks.begin(), blocks.end(), [](std::uint32_t b) { return b != 0; })) {
          pat = SupportPattern(n, std::move(blocks));
          break;
        }
      }
    }
    cloud.points.push_back(joint_eval(t, sample_isometry(pat, draw())));
  }
  return cloud;
}

LipschitzCert lipschitz_certificate(const MatrixTuple& t, const NonnegMatrix& x,
                                    const NonnegMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("lipschitz_certificate: shape mismatch");
  std::vector<double> fx = joint_eval(t, x), fy = joint_eval(t, y);
  LipschitzCert cert;
  for (std::size_t i = 0; i < fx.size(); ++i)
    cert.lhs = std::max(cert.lhs, std::abs(fx[i] - fy[i]));

  double norm_sum = 0.0;
  for (const auto& a : t.mats) norm_sum = std::max(norm_sum, sup_norm(a));
  double xnorm = sup_norm(x), ynorm = sup_norm(y);
  double diff = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) diff = std::max(diff, std::abs(x(i, j) - y(i, j)));
  cert.rhs = (norm_sum * (xnorm + ynorm)) * diff;
  return cert;
}

}  // namespace maxalg
