#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>

#include "gridwalk/enumerate.hpp"
#include "gridwalk/grid.hpp"

namespace gridwalk {

// Published claims about which cell pairs of a square admit a full-cover
// walk. Thm2+/Thm2- cover even sides (adjacent non-corner pairs yes,
// non-adjacent pairs no); Thm4i/Thm4ii/Thm6 are the odd-side families
// (main diagonals; spaced same-row/column pairs away from the 2nd and
// (n-1)th lines; odd-length diagonals).
enum class TheoremId { Thm2Plus, Thm2Minus, Thm4i, Thm4ii, Thm6 };
enum class ClaimKind { ClaimedYes, ClaimedNo, Unspecified };

inline const char* theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::Thm2Plus: return "Thm2+";
    case TheoremId::Thm2Minus: return "Thm2-";
    case TheoremId::Thm4i: return "Thm4i";
    case TheoremId::Thm4ii: return "Thm4ii";
    case TheoremId::Thm6: return "Thm6";
  }
  return "?";
}

inline const char* claim_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::ClaimedYes: return "claimed_yes";
    case ClaimKind::ClaimedNo: return "claimed_no";
    case ClaimKind::Unspecified: return "unspecified";
  }
  return "?";
}

struct PairClaim {
  GridSpec grid;
  Cell a, b;
  ClaimKind kind = ClaimKind::Unspecified;
  std::optional<TheoremId> theorem;  // set iff kind is not Unspecified
};

enum class Agreement { Agree, PaperOverclaims, PaperUnderclaims, NotAudited };

inline const char* agreement_name(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::PaperOverclaims: return "paper_overclaims";
    case Agreement::PaperUnderclaims: return "paper_underclaims";
    case Agreement::NotAudited: return "not_audited";
  }
  return "?";
}

struct AuditVerdict {
  PairClaim claim;
  int oracle_max_steps = -1;  // -1 when the oracle was not run
  bool oracle_says_max_walk = false;
  Agreement agreement = Agreement::NotAudited;
};

namespace detail {
inline void require_pair(const GridSpec& g, Cell a, Cell b) {
  require_in_bounds(g, a);
  require_in_bounds(g, b);
  if (a == b) throw std::invalid_argument("pair cells must differ");
}
}  // namespace detail

// Even sides: yes for edge-adjacent pairs with no corner involved, no for
// non-adjacent pairs, unspecified when a corner takes part.
inline PairClaim classify_pair_even(const GridSpec& g, Cell a, Cell b) {
  if (g.n % 2 != 0)
    throw std::invalid_argument("classify_pair_even requires an even side");
  detail::require_pair(g, a, b);
  GridSpec rook(g.n, MoveSet::Rook);
  PairClaim claim{g, a, b, ClaimKind::Unspecified, std::nullopt};
  if (!is_adjacent(rook, a, b)) {
    claim.kind = ClaimKind::ClaimedNo;
    claim.theorem = TheoremId::Thm2Minus;
  } else if (!is_corner(g, a) && !is_corner(g, b)) {
    claim.kind = ClaimKind::ClaimedYes;
    claim.theorem = TheoremId::Thm2Plus;
  }
  return claim;
}

// Odd sides; no negative family is published, so anything outside the
// three positive ones stays unspecified.
inline PairClaim classify_pair_odd(const GridSpec& g, Cell a, Cell b) {
  if (g.n % 2 != 1)
    throw std::invalid_argument("classify_pair_odd requires an odd side");
  if (g.n < 3) throw std::invalid_argument("odd side must be at least 3");
  detail::require_pair(g, a, b);
  PairClaim claim{g, a, b, ClaimKind::Unspecified, std::nullopt};
  int n = g.n;

  bool main_diag = (a.row == a.col && b.row == b.col) ||
                   (a.row + a.col == n + 1 && b.row + b.col == n + 1);
  if (main_diag) {
    claim.kind = ClaimKind::ClaimedYes;
    claim.theorem = TheoremId::Thm4i;
    return claim;
  }

  auto excluded_line = [&](Cell c) {
    return c.row == 2 || c.row == n - 1 || c.col == 2 || c.col == n - 1;
  };
  bool same_row_spaced = a.row == b.row && std::abs(a.col - b.col) >= 2;
  bool same_col_spaced = a.col == b.col && std::abs(a.row - b.row) >= 2;
  if ((same_row_spaced || same_col_spaced) && !excluded_line(a) &&
      !excluded_line(b)) {
    claim.kind = ClaimKind::ClaimedYes;
    claim.theorem = TheoremId::Thm4ii;
    return claim;
  }

  // Odd-length diagonals, parallel to either main diagonal. Parallel to
  // the principal one: row - col constant, offset even. Parallel to the
  // anti one: row + col constant, offset from n + 1 even.
  bool principal_family =
      a.row - a.col == b.row - b.col && (a.row - a.col) % 2 == 0;
  bool anti_family =
      a.row + a.col == b.row + b.col && (a.row + a.col - (n + 1)) % 2 == 0;
  if (principal_family || anti_family) {
    claim.kind = ClaimKind::ClaimedYes;
    claim.theorem = TheoremId::Thm6;
    return claim;
  }
  return claim;
}

inline PairClaim classify_pair(const GridSpec& g, Cell a, Cell b) {
  return g.n % 2 == 0 ? classify_pair_even(g, a, b)
                      : classify_pair_odd(g, a, b);
}

// Closed form for the number of pairs connected by maximum walks on a
// side-2n grid: 2n(4n - 2), i.e. the count of unordered edge-adjacent
// pairs. Note the published count does not apply its own corner
// exclusion; see claimed_yes_pair_count.
inline std::int64_t corollary_pair_count(int n_half) {
  if (n_half < 2)
    throw std::invalid_argument("corollary needs n_half >= 2 (side >= 4)");
  return std::int64_t{2} * n_half * (4 * n_half - 2);
}

// Direct enumeration of unordered edge-adjacent pairs on a side x side
// grid (the quantity the closed form above counts).
inline std::int64_t adjacent_pair_count(int side) {
  if (side < 2) throw std::invalid_argument("side must be at least 2");
  GridSpec g(side, MoveSet::Rook);
  std::int64_t count = 0;
  for (int r = 1; r <= side; ++r)
    for (int c = 1; c <= side; ++c)
      for (Cell nb : neighbors(g, {r, c}))
        if (Cell{r, c} < nb) ++count;
  return count;
}

// Unordered pairs classified ClaimedYes on an even grid (adjacency minus
// corner-involving pairs). Smaller than corollary_pair_count by 8 for
// side >= 3, which is the corner exclusion the closed form ignores.
inline std::int64_t claimed_yes_pair_count(int side) {
  GridSpec g(side, MoveSet::Rook);
  if (side % 2 != 0) throw std::invalid_argument("even side required");
  std::int64_t count = 0;
  for (int r1 = 1; r1 <= side; ++r1)
    for (int c1 = 1; c1 <= side; ++c1)
      for (int r2 = r1; r2 <= side; ++r2)
        for (int c2 = (r2 == r1 ? c1 + 1 : 1); c2 <= side; ++c2) {
          PairClaim claim = classify_pair_even(g, {r1, c1}, {r2, c2});
          if (claim.kind == ClaimKind::ClaimedYes) ++count;
        }
  return count;
}

// Runs the exhaustive oracle against a claim. Oversized grids are left
// NotAudited unless the guard override is set (the n > 8 hard cap still
// throws).
inline AuditVerdict audit(const PairClaim& claim,
                          const SearchOptions& opt = {}) {
  AuditVerdict verdict{claim, -1, false, Agreement::NotAudited};
  try {
    check_enumeration_guard(claim.grid, opt.override_guard);
  } catch (const ResourceLimitError&) {
    if (opt.override_guard) throw;
    return verdict;
  }
  GridSpec rook(claim.grid.n, MoveSet::Rook);
  EnumerationResult oracle = longest_between(rook, claim.a, claim.b, opt);
  verdict.oracle_max_steps = oracle.max_steps;
  verdict.oracle_says_max_walk =
      oracle.max_steps == claim.grid.n * claim.grid.n - 1;
  switch (claim.kind) {
    case ClaimKind::Unspecified:
      verdict.agreement = Agreement::NotAudited;
      break;
    case ClaimKind::ClaimedYes:
      verdict.agreement = verdict.oracle_says_max_walk
                              ? Agreement::Agree
                              : Agreement::PaperOverclaims;
      break;
    case ClaimKind::ClaimedNo:
      verdict.agreement = verdict.oracle_says_max_walk
                              ? Agreement::PaperUnderclaims
                              : Agreement::Agree;
      break;
  }
  return verdict;
}

}  // namespace gridwalk
