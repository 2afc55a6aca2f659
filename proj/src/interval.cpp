#include "maxalg/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maxalg {

bool Tolerance::close(double a, double b) const {
  if (a == b) return true;
  return std::abs(a - b) <= rel_eq * std::max(std::abs(a), std::abs(b));
}

namespace {

void check_interval(const Interval& iv) {
  if (!(iv.lo <= iv.hi)) throw std::invalid_argument("interval: lo > hi");
  if (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed))
    throw std::invalid_argument("interval: degenerate interval must be closed");
}

}  // namespace

Interval Interval::closed(double lo, double hi) {
  Interval iv{lo, hi, true, true};
  check_interval(iv);
  return iv;
}

Interval Interval::half_open_below(double lo, double hi) {
  Interval iv{lo, hi, false, true};
  check_interval(iv);
  return iv;
}

bool Interval::contains(double x) const {
  if (x < lo || (x == lo && !lo_closed)) return false;
  if (x > hi || (x == hi && !hi_closed)) return false;
  return true;
}

bool Interval::contains_approx(double x, const Tolerance& tol) const {
  if (contains(x)) return true;
  return tol.close(x, lo) || tol.close(x, hi);
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  if (r.lo > r.hi) return std::nullopt;
  if (r.lo == r.hi && !(r.lo_closed && r.hi_closed)) return std::nullopt;
  return r;
}

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  for (const auto& iv : parts) check_interval(iv);
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;  // closed end first
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.hi_closed < b.hi_closed;
  });
  for (const auto& iv : parts) {
    if (parts_.empty()) {
      parts_.push_back(iv);
      continue;
    }
    Interval& cur = parts_.back();
    bool joins = iv.lo < cur.hi || (iv.lo == cur.hi && (cur.hi_closed || iv.lo_closed));
    if (!joins) {
      parts_.push_back(iv);
      continue;
    }
    if (iv.hi > cur.hi) {
      cur.hi = iv.hi;
      cur.hi_closed = iv.hi_closed;
    } else if (iv.hi == cur.hi) {
      cur.hi_closed = cur.hi_closed || iv.hi_closed;
    }
  }
}

bool IntervalSet::contains(double x) const {
  for (const auto& iv : parts_)
    if (iv.contains(x)) return true;
  return false;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  // Parts of `other` are separated, so each part of *this must fit inside a
  // single part of `other`.
  for (const auto& p : parts_) {
    bool covered = false;
    for (const auto& q : other.parts_) {
      bool lo_ok = q.lo < p.lo || (q.lo == p.lo && (q.lo_closed || !p.lo_closed));
      bool hi_ok = q.hi > p.hi || (q.hi == p.hi && (q.hi_closed || !p.hi_closed));
      if (lo_ok && hi_ok) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

double IntervalSet::inf() const {
  if (parts_.empty()) throw std::invalid_argument("inf of empty interval set");
  return parts_.front().lo;
}

double IntervalSet::sup() const {
  if (parts_.empty()) throw std::invalid_argument("sup of empty interval set");
  return parts_.back().hi;
}

Interval max_convex_hull(const IntervalSet& s) {
  if (s.empty()) throw std::invalid_argument("hull of empty interval set");
  return Interval::closed(s.inf(), s.sup());
}

Interval max_convex_hull(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("hull of empty value list");
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return Interval::closed(*lo, *hi);
}

}  // namespace maxalg
