#pragma once

// Cyclic index arithmetic on a window {0, ..., w-1}.
//
// sigma(c, w, i) is the unordered pair {i+c, i-c} taken around the cycle;
// it degenerates to a single index exactly when 2c == w.  The ball
// B_k(i) is the union of sigma(c, w, i) over c = 1..k, i.e. everything
// within cyclic distance k of i, excluding i itself.  These neighbourhoods
// are the building blocks of every adjacency rule in the subgraph factory,
// applied both to slot indices (window s) and part indices (window j).

#include <algorithm>
#include <vector>

#include "errors.hpp"

namespace mjstar {

namespace detail {

inline void check_window(int w, int i) {
  if (w < 1) throw PreconditionError("cyclic window must be positive");
  if (i < 0 || i >= w) throw PreconditionError("cyclic index out of window");
}

inline void check_offset(int c, int w, int i) {
  check_window(w, i);
  if (c < 1 || c > w - 1) throw PreconditionError("cyclic offset must lie in [1, w-1]");
}

}  // namespace detail

// A residue index carried together with its window size.
struct CyclicIndex {
  int value;
  int window;

  CyclicIndex(int value_, int window_) : value(value_), window(window_) {
    detail::check_window(window, value);
  }

  friend bool operator==(const CyclicIndex&, const CyclicIndex&) = default;
};

// i + c reduced into the window.
inline int sigma_plus(int c, int w, int i) {
  detail::check_offset(c, w, i);
  int a = i + c;
  if (a > w - 1) a -= w;
  return a;
}

// i - c reduced into the window.
inline int sigma_minus(int c, int w, int i) {
  detail::check_offset(c, w, i);
  int a = i - c;
  if (a < 0) a += w;
  return a;
}

// The set {i+c, i-c}, ascending; a single element when the two offsets meet.
inline std::vector<int> sigma(int c, int w, int i) {
  int a1 = sigma_plus(c, w, i);
  int a2 = sigma_minus(c, w, i);
  if (a1 == a2) return {a1};
  if (a1 > a2) std::swap(a1, a2);
  return {a1, a2};
}

// Membership in sigma(c, w, i) without materialising the set.
inline bool in_sigma(int c, int w, int i, int x) {
  detail::check_offset(c, w, i);
  if (x < 0 || x >= w) throw PreconditionError("cyclic index out of window");
  int diff = x - i;
  if (diff < 0) diff += w;
  return diff == c || diff == w - c;
}

// Membership in the radius-k ball around i: cyclic distance in [1, k].
inline bool in_ball(int k, int w, int i, int x) {
  detail::check_window(w, i);
  if (k < 0 || k > w - 1) throw PreconditionError("ball radius must lie in [0, w-1]");
  if (x < 0 || x >= w) throw PreconditionError("cyclic index out of window");
  int diff = x - i;
  if (diff < 0) diff += w;
  if (diff == 0) return false;
  return diff <= k || w - diff <= k;
}

// All indices within cyclic distance k of i, sorted ascending.  B_0 is
// empty; |B_k| = 2k while 2k <= w-1, after which the two arcs overlap and
// the ball is everything except i.
inline std::vector<int> ball(int k, int w, int i) {
  detail::check_window(w, i);
  if (k < 0 || k > w - 1) throw PreconditionError("ball radius must lie in [0, w-1]");
  std::vector<int> out;
  out.reserve(2 * static_cast<std::size_t>(k));
  for (int x = 0; x < w; ++x) {
    if (in_ball(k, w, i, x)) out.push_back(x);
  }
  return out;
}

}  // namespace mjstar
