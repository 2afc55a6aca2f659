#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "maxalg/matrix.hpp"

// Largest geometric cycle mean via log weights: strongly connected
// components first, then the classic dynamic program over walk lengths
// (Karp) inside each component.

namespace maxalg {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct SccDecomposition {
  std::vector<std::vector<std::size_t>> components;
};

// Iterative Tarjan.
SccDecomposition strongly_connected(const std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = out.size();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  SccDecomposition res;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t edge = 0;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != SIZE_MAX) continue;
    std::vector<Frame> call{{root}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < out[f.v].size()) {
        std::size_t w = out[f.v][f.edge++];
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<std::size_t> comp;
          for (;;) {
            std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
            if (w == f.v) break;
          }
          res.components.push_back(std::move(comp));
        }
        std::size_t v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return res;
}

// Maximum cycle mean of the log-weight subgraph induced on one component.
double karp_cycle_mean(const std::vector<std::size_t>& comp,
                       const std::vector<std::vector<std::pair<std::size_t, double>>>& out) {
  const std::size_t s = comp.size();
  std::vector<std::size_t> pos(out.size(), SIZE_MAX);
  for (std::size_t i = 0; i < s; ++i) pos[comp[i]] = i;

  // d[k][v]: best walk weight of length k from comp[0] to v, within comp.
  std::vector<std::vector<double>> d(s + 1, std::vector<double>(s, kNegInf));
  d[0][0] = 0.0;
  for (std::size_t k = 1; k <= s; ++k) {
    for (std::size_t i = 0; i < s; ++i) {
      if (d[k - 1][i] == kNegInf) continue;
      for (const auto& [w, wt] : out[comp[i]]) {
        std::size_t j = pos[w];
        if (j == SIZE_MAX) continue;
        d[k][j] = std::max(d[k][j], d[k - 1][i] + wt);
      }
    }
  }

  double best = kNegInf;
  for (std::size_t v = 0; v < s; ++v) {
    if (d[s][v] == kNegInf) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < s; ++k) {
      if (d[k][v] == kNegInf) continue;
      worst = std::min(worst, (d[s][v] - d[k][v]) / static_cast<double>(s - k));
    }
    best = std::max(best, worst);
  }
  return best;
}

}  // namespace

double max_eigenvalue(const NonnegMatrix& a) {
  if (!a.square()) throw std::invalid_argument("max_eigenvalue: matrix not square");
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::vector<std::pair<std::size_t, double>>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) > 0.0) {
        adj[i].push_back(j);
        out[i].push_back({j, std::log(a(i, j))});
      }
    }
  }

  double best = kNegInf;
  for (const auto& comp : strongly_connected(adj).components) {
    if (comp.size() == 1) {
      std::size_t v = comp[0];
      if (a(v, v) > 0.0) best = std::max(best, std::log(a(v, v)));
      continue;
    }
    best = std::max(best, karp_cycle_mean(comp, out));
  }
  double result = best == kNegInf ? 0.0 : std::exp(best);

  // Cycles of length 1 and 2 admit direct evaluation (exact, resp. one
  // multiply and one correctly rounded square root). The maximum cycle mean
  // dominates both, so taking the max can only sharpen the log-space value;
  // in particular a dominant self-loop comes back bit-exact.
  for (std::size_t i = 0; i < n; ++i) {
    result = std::max(result, a(i, i));
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) > 0.0 && a(j, i) > 0.0)
        result = std::max(result, std::sqrt(a(i, j) * a(j, i)));
  }
  return result;
}

}  // namespace maxalg
