#pragma once

// Factory for degree-uniform spanning subgraphs of K_{j x s}.
//
// A feasible uniform degree d (1 <= d <= (j-1)s, j*s*d even) is written as
// a multiple of the per-slot cross budget j-1 plus a small residue, and
// the split is tagged by the parities of j, s and d.  Each tag owns an
// adjacency rule assembled from cyclic neighbourhoods: part (a) always
// spends 2*k1*(j-1) degree on all parts of the slots within the k1-ball,
// and the remaining parts place the residue inside the own slot column,
// on the two slots at distance k1+1, or on the antipodal slot column.
// Construction is rule-driven and then validated degree by degree; a
// mismatch raises ConstructionInvalid instead of being patched silently.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclic.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace mjstar {

enum class CaseTag {
  L1EvenQuotient,  // j odd,  s odd,  d = 2k1(j-1) + 2k2
  L1OddQuotient,   // j odd,  s odd,  d = (2k1+1)(j-1) + 2k2
  C1Even,          // j even, s odd,  d = 2k1(j-1) + 2k2
  C1OddSimple,     // j even, s odd,  d = 2k1(j-1) + 2k2 + 1
  C1OddQuotient,   // j even, s odd,  d = (2k1+1)(j-1) + rem
  C2Even,          // j even, s even, d = 2k1(j-1) + 2k2
  C2Odd,           // j even, s even, d = 2k1(j-1) + 2k2 + 1
  C3Even,          // j odd,  s even, d = 2k1(j-1) + 2k2
  C4Odd,           // j odd,  s even, d = 2k1(j-1) + 2k2 + 1
};

inline const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::L1EvenQuotient: return "L1-even-quotient";
    case CaseTag::L1OddQuotient: return "L1-odd-quotient";
    case CaseTag::C1Even: return "C1-even";
    case CaseTag::C1OddSimple: return "C1-odd-simple";
    case CaseTag::C1OddQuotient: return "C1-odd-quotient";
    case CaseTag::C2Even: return "C2-even";
    case CaseTag::C2Odd: return "C2-odd";
    case CaseTag::C3Even: return "C3-even";
    case CaseTag::C4Odd: return "C4-odd";
  }
  return "?";
}

// Tagged split of the requested degree.  k1 counts whole 2(j-1) blocks,
// k2 (or rem, for the mixed-parity quotient tag) is the leftover spent
// inside slot columns, and w_quot is the quarter width (j-1+rem)/4 used
// by the odd-quotient rules.
struct Decomposition {
  CaseTag tag;
  int k1 = 0;
  int k2 = 0;
  int rem = 0;
  int w_quot = 0;

  // Rebuild d from the tagged formula; must reproduce the input exactly.
  int reconstruct(int parts) const {
    const int block = parts - 1;
    switch (tag) {
      case CaseTag::L1EvenQuotient:
      case CaseTag::C1Even:
      case CaseTag::C2Even:
      case CaseTag::C3Even: return 2 * k1 * block + 2 * k2;
      case CaseTag::L1OddQuotient: return (2 * k1 + 1) * block + 2 * k2;
      case CaseTag::C1OddQuotient: return (2 * k1 + 1) * block + rem;
      case CaseTag::C1OddSimple:
      case CaseTag::C2Odd:
      case CaseTag::C4Odd: return 2 * k1 * block + 2 * k2 + 1;
    }
    return -1;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

namespace detail {

// The window bounds each tag must respect for its rule to make sense.
inline bool windows_ok(int j, int s, const Decomposition& dec) {
  if (dec.k1 < 0) return false;
  switch (dec.tag) {
    case CaseTag::L1EvenQuotient:
      return 2 * dec.k1 <= s - 1 && dec.k2 >= 1 && 2 * dec.k2 <= j - 1;
    case CaseTag::L1OddQuotient:
      return 2 * dec.k1 <= s - 3 && dec.k2 >= 1 && 2 * dec.k2 <= j - 1 && dec.w_quot >= 1;
    case CaseTag::C1Even:
      return 2 * dec.k1 <= s - 1 && dec.k2 >= 1 && 2 * dec.k2 <= j - 2;
    case CaseTag::C1OddSimple:
      return 2 * dec.k1 <= s - 1 && dec.k2 >= 0 && 2 * dec.k2 <= j - 2;
    case CaseTag::C1OddQuotient:
      return 2 * dec.k1 <= s - 3 && dec.rem >= 1 && dec.rem <= j - 1 && dec.w_quot >= 1;
    case CaseTag::C2Even:
    case CaseTag::C3Even:
      return 2 * dec.k1 <= s - 2 && dec.k2 >= 1 && dec.k2 <= j - 1;
    case CaseTag::C2Odd:
    case CaseTag::C4Odd:
      return 2 * dec.k1 <= s - 2 && dec.k2 >= 0 && dec.k2 < j - 1;
  }
  return false;
}

}  // namespace detail

// Canonical decomposition of degree d on the (j, s) host: take the residue
// of d (or d-1 when a +1 slack is in play) modulo the block size 2(j-1)
// first, borrowing one block when the residue misses its window, with the
// quotient parity selecting between the even- and odd-quotient tags.
inline Decomposition decompose(int j, int s, int d) {
  if (j < 3) throw PreconditionError("decompose needs at least 3 parts");
  if (s < 1) throw PreconditionError("decompose needs at least 1 slot");
  if (d < 0) throw PreconditionError("decompose needs degree >= 0");
  if (d == 0)
    throw NoDecomposition("degree 0 has no tagged decomposition; the empty subgraph needs none");
  if (d > (j - 1) * s)
    throw DegreeTooLarge("degree " + std::to_string(d) + " exceeds host degree " +
                         std::to_string((j - 1) * s));
  if (j % 2 == 1 && s % 2 == 1 && d % 2 == 1)
    throw ParityInfeasible("j, s and d all odd: j*s*d is odd, no d-regular spanning subgraph");

  const int block = 2 * (j - 1);
  Decomposition dec{};
  if (j % 2 == 1 && s % 2 == 1) {
    const int r = d % block;
    if (r > 0 && r <= j - 1) {
      dec = {CaseTag::L1EvenQuotient, (d - r) / block, r / 2, 0, 0};
    } else {
      const int res = (r == 0) ? j - 1 : r - (j - 1);
      dec = {CaseTag::L1OddQuotient, (d - (j - 1) - res) / block, res / 2, res,
             (j - 1 + res) / 4};
    }
  } else if (j % 2 == 0 && s % 2 == 1) {
    if (d % 2 == 0) {
      const int r = d % block;
      if (r > 0 && r <= j - 2) {
        dec = {CaseTag::C1Even, (d - r) / block, r / 2, 0, 0};
      } else {
        const int res = (r == 0) ? j - 1 : r - (j - 1);
        dec = {CaseTag::C1OddQuotient, (d - (j - 1) - res) / block, 0, res, (j - 1 + res) / 4};
      }
    } else {
      const int r = (d - 1) % block;
      if (r <= j - 2) {
        dec = {CaseTag::C1OddSimple, (d - 1 - r) / block, r / 2, 0, 0};
      } else {
        const int res = r - (j - 2);
        dec = {CaseTag::C1OddQuotient, (d - (j - 1) - res) / block, 0, res, (j - 1 + res) / 4};
      }
    }
  } else if (d % 2 == 0) {
    const int r = d % block;
    const int k2 = (r == 0) ? j - 1 : r / 2;
    dec = {j % 2 == 0 ? CaseTag::C2Even : CaseTag::C3Even, (d - 2 * k2) / block, k2, 0, 0};
  } else {
    const int r = (d - 1) % block;
    dec = {j % 2 == 0 ? CaseTag::C2Odd : CaseTag::C4Odd, (d - 1 - r) / block, r / 2, 0, 0};
  }

  if (!detail::windows_ok(j, s, dec) || dec.reconstruct(j) != d)
    throw NoDecomposition("no tagged decomposition for j=" + std::to_string(j) +
                          " s=" + std::to_string(s) + " d=" + std::to_string(d));
  return dec;
}

// Every rule part whose clauses make u and v adjacent, as a string of
// part labels 'a', 'b', ...  Each atomic clause appends independently, so
// tests can assert the parts never overlap (the result has length <= 1 on
// every pair); for adjacency itself only emptiness matters.
inline std::string rule_parts(const Decomposition& dec, const Shape& sh, Vertex u, Vertex v) {
  check_shape(sh);
  check_vertex(sh, u);
  check_vertex(sh, v);
  std::string parts;
  if (u.part == v.part) return parts;
  const int j = sh.parts, s = sh.slots;
  const int i = u.part, l = u.slot, p = v.part, r = v.slot;
  const auto add = [&parts](char label) { parts.push_back(label); };

  // part (a), common to all tags: every vertex of the slots within the
  // k1-ball of the own slot.
  if (dec.k1 > 0 && in_ball(dec.k1, s, l, r)) add('a');

  switch (dec.tag) {
    case CaseTag::L1EvenQuotient:
    case CaseTag::C1Even:
      if (r == l && in_ball(dec.k2, j, i, p)) add('b');
      break;

    case CaseTag::L1OddQuotient: {
      // The extra block (j-1) + 2k2 is even; it is spent either entirely
      // on the two slots at distance k1+1 (when divisible by 4) or with a
      // leftover pair inside the own slot column.
      if (((j - 1) + 2 * dec.k2) % 4 == 0) {
        if (in_sigma(dec.k1 + 1, s, l, r) && in_ball(dec.w_quot, j, i, p)) add('b');
      } else {
        if (in_sigma(dec.k1 + 1, s, l, r) && in_ball(dec.w_quot, j, i, p)) add('c');
        if (r == l && in_ball(1, j, i, p)) add('c');
      }
      break;
    }

    case CaseTag::C1OddSimple:
      if (r == l && in_ball(dec.k2, j, i, p)) add('b');
      if (r == l && in_sigma(j / 2, j, i, p)) add('c');
      break;

    case CaseTag::C1OddQuotient: {
      if (in_sigma(dec.k1 + 1, s, l, r) && in_ball(dec.w_quot, j, i, p)) add('b');
      // Leftover of (j-1) + rem modulo 4, spent inside the own slot column.
      switch (((j - 1) + dec.rem) % 4) {
        case 1:
          if (r == l && in_sigma(j / 2, j, i, p)) add('c');
          break;
        case 2:
          if (r == l && in_sigma(1, j, i, p)) add('d');
          break;
        case 3:
          if (r == l && (in_sigma(1, j, i, p) || in_sigma(j / 2, j, i, p))) add('e');
          break;
        default: break;
      }
      break;
    }

    case CaseTag::C2Even: {
      const int half = j / 2;
      if (dec.k2 < half) {
        if (r == l && in_ball(dec.k2, j, i, p)) add('b');
      } else if (dec.k2 < j - 1) {
        // Own column takes a full (j-2)/2-ball, the antipodal slot the rest.
        if (r == l && in_ball((j - 2) / 2, j, i, p)) add('c');
        if (in_sigma(s / 2, s, l, r) && in_ball(dec.k2 - (j - 2) / 2, j, i, p)) add('c');
      } else {
        if (r == l) add('d');
        if (in_sigma(s / 2, s, l, r)) add('d');
      }
      break;
    }

    case CaseTag::C2Odd: {
      if (dec.k2 <= (j - 2) / 2) {
        if (r == l && in_ball(dec.k2, j, i, p)) add('b');
        if (r == l && in_sigma(j / 2, j, i, p)) add('b');
      } else {
        if (r == l) add('c');
        if (in_sigma(s / 2, s, l, r) && in_ball(dec.k2 - (j - 2) / 2, j, i, p)) add('c');
      }
      break;
    }

    case CaseTag::C3Even: {
      const int half = (j - 1) / 2;
      if (dec.k2 <= half) {
        if (r == l && in_ball(dec.k2, j, i, p)) add('b');
      } else {
        if (r == l) add('c');
        if (in_sigma(s / 2, s, l, r) && in_ball(dec.k2 - half, j, i, p)) add('c');
      }
      break;
    }

    case CaseTag::C4Odd: {
      // j odd leaves an odd residue 2k2+1; the odd unit crosses to the
      // antipodal slot with a direction split so both endpoints agree.
      const int half = (j - 1) / 2;
      const bool axis = in_sigma(s / 2, s, l, r);
      if (dec.k2 < half) {
        if (r == l && in_ball(dec.k2, j, i, p)) add('b');
        if (axis && r > l && p == sigma_plus(dec.k2 + 1, j, i)) add('b');
        if (axis && r < l && p == sigma_minus(dec.k2 + 1, j, i)) add('b');
      } else if (dec.k2 == half) {
        if (r == l) add('c');
        if (axis && r > l && p == sigma_plus(dec.k2 + 1, j, i)) add('c');
        if (axis && r < l && p == sigma_minus(dec.k2 + 1, j, i)) add('c');
      } else {
        const int t = dec.k2 - half;
        if (r == l) add('d');
        if (axis && in_ball(t, j, i, p)) add('d');
        if (axis && r > l && p == sigma_plus(t + 1, j, i)) add('d');
        if (axis && r < l && p == sigma_minus(t + 1, j, i)) add('d');
      }
      break;
    }
  }
  return parts;
}

// First (and, by disjointness, only) matching part; '\0' when non-adjacent.
inline char rule_part(const Decomposition& dec, const Shape& sh, Vertex u, Vertex v) {
  const std::string parts = rule_parts(dec, sh, u, v);
  return parts.empty() ? '\0' : parts.front();
}

inline bool adjacency_rule(const Decomposition& dec, const Shape& sh, Vertex u, Vertex v) {
  return !rule_parts(dec, sh, u, v).empty();
}

// Outcome of one rule-driven construction: the degree histogram of the
// built graph and how many edges each rule part contributed.
struct ConstructionReport {
  int requested_d = 0;
  std::map<int, int> histogram;
  bool valid = false;
  std::vector<std::pair<std::string, int>> rule_trace;
};

// The built graph failed its degree validation; carries the evidence.
struct ConstructionInvalid : std::logic_error {
  ConstructionReport report;

  ConstructionInvalid(int j, int s, int d, ConstructionReport rep)
      : std::logic_error("construction j=" + std::to_string(j) + " s=" + std::to_string(s) +
                         " d=" + std::to_string(d) + " failed degree validation"),
        report(std::move(rep)) {}
};

struct Construction {
  MpGraph graph;
  Decomposition decomposition;
  ConstructionReport report;
};

// Build the d-regular spanning subgraph for the canonical decomposition
// and validate it.  Requires d >= 1; the empty graph needs no rule.
inline Construction build_construction(int j, int s, int d) {
  const Decomposition dec = decompose(j, s, d);
  const Shape sh{j, s};
  MpGraph g(sh);
  std::map<char, int> trace;
  const int n = sh.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Vertex u = unflat(sh, a), v = unflat(sh, b);
      if (u.part == v.part) continue;
      if (const char part = rule_part(dec, sh, u, v)) {
        g.add_edge(u, v);
        ++trace[part];
      }
    }
  }

  ConstructionReport report;
  report.requested_d = d;
  for (int a = 0; a < n; ++a) ++report.histogram[g.degree(unflat(sh, a))];
  report.valid = is_regular(g, d);
  for (const auto& [label, count] : trace)
    report.rule_trace.emplace_back(std::string(1, label), count);
  if (!report.valid) throw ConstructionInvalid(j, s, d, report);
  return {std::move(g), dec, std::move(report)};
}

// d-regular spanning subgraph of K_{j x s}; throws DegreeTooLarge or
// ParityInfeasible when no such subgraph exists.
inline MpGraph regular_subgraph(int j, int s, int d) {
  if (j < 3) throw PreconditionError("regular_subgraph needs at least 3 parts");
  if (s < 1) throw PreconditionError("regular_subgraph needs at least 1 slot");
  if (d < 0) throw PreconditionError("degree must be non-negative");
  if (d > (j - 1) * s)
    throw DegreeTooLarge("degree " + std::to_string(d) + " exceeds host degree " +
                         std::to_string((j - 1) * s));
  if (d == 0) return MpGraph(Shape{j, s});
  return build_construction(j, s, d).graph;
}

// d-regular when j*s*d is even, otherwise (d-1)-regular: the best uniform
// degree not above d that the handshake identity allows.
inline MpGraph near_regular_subgraph(int j, int s, int d) {
  if (d >= 1 && j % 2 == 1 && s % 2 == 1 && d % 2 == 1) return regular_subgraph(j, s, d - 1);
  return regular_subgraph(j, s, d);
}

}  // namespace mjstar
