#pragma once

// The star arrowing threshold on balanced multipartite hosts.
//
// For stars S_n = K_{1,n-1} and S_m, the threshold m_j(S_n, S_m) is the
// least s such that every red/blue colouring of the edges of K_{j x s}
// contains a red S_n or a blue S_m.  A colouring avoids both ("is good")
// iff every red degree is <= n-2 and every blue degree is <= m-2; since
// red and blue degrees sum to (j-1)s at every vertex, the whole question
// reduces to counting degree budget, and the threshold has a three-branch
// closed form.  Below the threshold this header also produces an explicit
// good colouring built from a (near-)regular red spanning subgraph.

#include <algorithm>
#include <string>

#include "errors.hpp"
#include "factory.hpp"
#include "graph.hpp"

namespace mjstar {

enum class Branch {
  TrivialStar,     // n == 2 or m == 2: one colour is forbidden outright
  SpecialOddCase,  // (n+m-4)/(j-1) = s with j, s, n odd: parity blocks s
  General,
};

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::TrivialStar: return "TrivialStar";
    case Branch::SpecialOddCase: return "SpecialOddCase";
    case Branch::General: return "General";
  }
  return "?";
}

struct RamseyAnswer {
  int j;
  int n;
  int m;
  int value;
  Branch branch;
  int lower;
  int upper;
};

namespace detail {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

inline void check_threshold_args(int j, int n, int m) {
  if (j < 3) throw PreconditionError("threshold needs at least 3 parts");
  if (n < 2 || m < 2) throw PreconditionError("stars need order >= 2");
}

}  // namespace detail

// ceil((n+m-3)/(j-1)): above this s the degree budget (j-1)s exceeds
// (n-2)+(m-2) at every vertex, so some star appears in any colouring.
inline int upper_bound(int j, int n, int m) {
  detail::check_threshold_args(j, n, m);
  if (n < 3 || m < 3) throw PreconditionError("bound formulas need n, m >= 3");
  return detail::ceil_div(n + m - 3, j - 1);
}

// ceil((n+m-4)/(j-1)): below this s a good colouring always exists.
inline int lower_bound(int j, int n, int m) {
  detail::check_threshold_args(j, n, m);
  if (n < 3 || m < 3) throw PreconditionError("bound formulas need n, m >= 3");
  return detail::ceil_div(n + m - 4, j - 1);
}

// True iff no (n-2)-regular spanning subgraph of K_{j x s} exists for
// parity reasons: j * s * (n-2) odd.
inline bool handshake_blocks(const Shape& sh, int n) {
  check_shape(sh);
  return (sh.parts % 2 == 1) && (sh.slots % 2 == 1) && ((n - 2) % 2 == 1);
}

// The exact-division case in which the lower bound is already sharp:
// n+m-4 = (j-1)s with j, s and n odd (then m is odd too, so the condition
// is symmetric in n and m).  At that s a good colouring would need an
// (n-2)-regular red part, which the handshake identity rules out.
inline bool special_branch_applies(int j, int n, int m) {
  detail::check_threshold_args(j, n, m);
  if (n < 3 || m < 3) return false;
  if ((n + m - 4) % (j - 1) != 0) return false;
  const int s = (n + m - 4) / (j - 1);
  return j % 2 == 1 && s % 2 == 1 && n % 2 == 1;
}

// The closed form for m_j(S_n, S_m).
inline RamseyAnswer size_ramsey(int j, int n, int m) {
  detail::check_threshold_args(j, n, m);
  if (n == 2 || m == 2) {
    // A red S_2 is a single red edge, so good colourings are all-blue (or
    // symmetrically all-red) and only the other star's budget matters.
    const int value = detail::ceil_div(std::max(n, m) - 1, j - 1);
    return {j, n, m, value, Branch::TrivialStar, value, value};
  }
  const int lo = lower_bound(j, n, m);
  const int hi = upper_bound(j, n, m);
  if (special_branch_applies(j, n, m)) return {j, n, m, lo, Branch::SpecialOddCase, lo, hi};
  return {j, n, m, hi, Branch::General, lo, hi};
}

// No red S_n and no blue S_m.
inline bool coloring_is_good(const TwoColoring& c, int n, int m) {
  if (n < 2 || m < 2) throw PreconditionError("stars need order >= 2");
  return c.max_degree(Color::Red) <= n - 2 && c.max_degree(Color::Blue) <= m - 2;
}

// The generated colouring missed a star budget at some vertex.  With the
// capped red target degree this cannot happen below the threshold; kept
// so a regression would surface with its witness vertex.
struct NotAWitness : std::logic_error {
  Vertex vertex;
  Color color;

  NotAWitness(Vertex v, Color c)
      : std::logic_error("generated colouring exceeds the " +
                         std::string(c == Color::Red ? "red" : "blue") + " budget at vertex (" +
                         std::to_string(v.part) + "," + std::to_string(v.slot) + ")"),
        vertex(v),
        color(c) {}
};

// An explicit good colouring of K_{j x s} for s below the threshold: red
// is a near-regular spanning subgraph of target degree min(n-2, (j-1)s),
// blue the complement.  Throws ThresholdExceeded at or above the
// threshold, where no good colouring exists.
inline TwoColoring witness_coloring(const Shape& sh, int n, int m) {
  check_shape(sh);
  const int j = sh.parts, s = sh.slots;
  const RamseyAnswer answer = size_ramsey(j, n, m);
  if (s >= answer.value)
    throw ThresholdExceeded("s=" + std::to_string(s) + " is not below the threshold " +
                            std::to_string(answer.value));

  const int target = std::min(n - 2, (j - 1) * s);
  const MpGraph red = near_regular_subgraph(j, s, target);
  TwoColoring col = TwoColoring::from_red(red);
  for (int a = 0; a < sh.vertex_count(); ++a) {
    const Vertex v = unflat(sh, a);
    if (col.degree(v, Color::Red) > n - 2) throw NotAWitness(v, Color::Red);
    if (col.degree(v, Color::Blue) > m - 2) throw NotAWitness(v, Color::Blue);
  }
  return col;
}

}  // namespace mjstar
