#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "swapset/certificate.hpp"
#include "swapset/errors.hpp"
#include "swapset/graph.hpp"

namespace swapset {

/// m columns by n rows. Vertex (i, j) has column i in [1, m], row j in
/// [1, n] and flat id (i-1)*n + (j-1), matching grid_graph(m, n).
struct GridSpec {
  int m = 1;
  int n = 1;

  bool contains(int i, int j) const { return i >= 1 && i <= m && j >= 1 && j <= n; }
  Vertex id(int i, int j) const { return (i - 1) * n + (j - 1); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Membership in the diagonal perfect dominating set S_t of the infinite
/// grid: the points with 2y = x + 5s + 2t for some integer s.
inline bool perfect_dom_member(long long x, long long y, int t) {
  if (t < 0 || t > 4) throw ContractError("perfect_dom_member: t must lie in 0..4");
  long long r = (2 * y - x - 2 * t) % 5;
  return r == 0;
}

enum class Token : char { none = 0, black = 1, white = 2 };

class TokenBoard {
public:
  TokenBoard(int m, int n) : spec_{m, n}, cells_(static_cast<std::size_t>(m) * n, Token::none) {
    if (m < 1 || n < 1) throw ContractError("TokenBoard: empty grid");
  }

  const GridSpec& spec() const { return spec_; }

  Token at(int i, int j) const { return spec_.contains(i, j) ? cells_[spec_.id(i, j)] : Token::none; }

  void set(int i, int j, Token t) {
    if (!spec_.contains(i, j)) throw ContractError("TokenBoard: position outside grid");
    cells_[spec_.id(i, j)] = t;
  }

  std::vector<std::pair<int, int>> positions(Token t) const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= spec_.m; ++i)
      for (int j = 1; j <= spec_.n; ++j)
        if (at(i, j) == t) out.emplace_back(i, j);
    return out;
  }
  std::vector<std::pair<int, int>> black() const { return positions(Token::black); }
  std::vector<std::pair<int, int>> white() const { return positions(Token::white); }

  std::size_t token_count() const {
    return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](Token t) { return t != Token::none; }));
  }

  /// Row n first so the picture reads with the origin bottom-left.
  std::string render() const {
    std::string out;
    for (int j = spec_.n; j >= 1; --j) {
      for (int i = 1; i <= spec_.m; ++i) {
        Token t = at(i, j);
        out += t == Token::black ? 'B' : t == Token::white ? 'W' : '.';
      }
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const TokenBoard&, const TokenBoard&) = default;

private:
  GridSpec spec_;
  std::vector<Token> cells_;
};

/// Upper bound for the grid construction: floor((n+2)(m+3)/5).
inline long long grid_swap_bound(int m, int n) { return static_cast<long long>(n + 2) * (m + 3) / 5; }

struct GridSwap {
  Graph graph;
  SwapCertificate certificate;
  TokenBoard board;
  int repaired_corners = 0;
  int repair_changes = 0;
};

namespace detail {

inline std::pair<int, int> shift_target(int i, int j, Token t) {
  return {t == Token::black ? i + 1 : i - 1, j};
}

inline bool in_dprime(const TokenBoard& b, int i, int j) {
  return b.at(i - 1, j) == Token::black || b.at(i + 1, j) == Token::white;
}

/// Problems visible inside the rectangle [i0,i1] x [j0,j1]: tokens that
/// cannot move (target off-grid, occupied, or shared with another token)
/// and vertices missed by D or by D'.
inline int local_faults(const TokenBoard& b, int i0, int i1, int j0, int j1) {
  const GridSpec& s = b.spec();
  i0 = std::max(i0, 1), j0 = std::max(j0, 1), i1 = std::min(i1, s.m), j1 = std::min(j1, s.n);
  int faults = 0;
  for (int i = i0 - 1; i <= i1 + 1; ++i)
    for (int j = j0; j <= j1; ++j) {
      Token t = b.at(i, j);
      if (t == Token::none) continue;
      auto [ti, tj] = shift_target(i, j, t);
      bool near = (i >= i0 && i <= i1) || (ti >= i0 && ti <= i1);
      if (!near) continue;
      if (!s.contains(ti, tj) || b.at(ti, tj) != Token::none) {
        ++faults;
        continue;
      }
      if (t == Token::black && b.at(ti + 1, tj) == Token::white) ++faults;
    }
  static constexpr std::array<std::pair<int, int>, 5> closed{{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  for (int i = i0; i <= i1; ++i)
    for (int j = j0; j <= j1; ++j) {
      bool by_d = false, by_dp = false;
      for (auto [di, dj] : closed) {
        int x = i + di, y = j + dj;
        if (!s.contains(x, y)) continue;
        by_d = by_d || b.at(x, y) != Token::none;
        by_dp = by_dp || in_dprime(b, x, y);
      }
      faults += !by_d;
      faults += !by_dp;
    }
  return faults;
}

inline void place_if_vacant(TokenBoard& b, int i, int j, Token t) {
  if (b.spec().contains(i, j) && b.at(i, j) == Token::none) b.set(i, j, t);
}

/// The base placement from S_3 before any corner repair.
inline TokenBoard base_board(int m, int n) {
  constexpr int t = 3;
  TokenBoard b(m, n);
  auto colour = [m](int i) { return i < m ? Token::black : Token::white; };
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (perfect_dom_member(i, j, t)) b.set(i, j, colour(i));
  for (int i = 1; i <= m; ++i) {
    if (perfect_dom_member(i, n + 1, t)) place_if_vacant(b, i, n, colour(i));
    if (perfect_dom_member(i, 0, t)) place_if_vacant(b, i, 1, colour(i));
  }
  for (int j = 1; j <= n; ++j) {
    if (perfect_dom_member(0, j, t) || perfect_dom_member(-1, j, t)) place_if_vacant(b, 2, j, Token::white);
    if (perfect_dom_member(m + 1, j, t)) place_if_vacant(b, m, j, Token::white);
  }
  if (perfect_dom_member(0, n + 1, t)) place_if_vacant(b, 2, n, Token::white);
  if (perfect_dom_member(m + 1, n + 1, t)) place_if_vacant(b, m, n, Token::white);
  // Tokens from (m-2,1) and (m,1) would both land on (m-1,1).
  if (b.at(m, 1) == Token::white && b.at(m - 2, 1) == Token::black) {
    b.set(m, 1, Token::none);
    place_if_vacant(b, m, 2, Token::white);
  }
  return b;
}

/// Exhaustive search over the 3x3 corner window at (ci, cj) (the corner
/// cell) for the assignment with fewest changed cells, then fewest tokens,
/// that leaves no faults within two cells of the window. Returns the number
/// of changed cells, or -1 when nothing works.
inline int repair_corner(TokenBoard& b, int ci, int cj) {
  const int di = ci == 1 ? 1 : -1, dj = cj == 1 ? 1 : -1;
  std::array<std::pair<int, int>, 9> cells;
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c) cells[a * 3 + c] = {ci + di * a, cj + dj * c};
  int wi0 = std::min(ci, ci + 2 * di), wi1 = std::max(ci, ci + 2 * di);
  int wj0 = std::min(cj, cj + 2 * dj), wj1 = std::max(cj, cj + 2 * dj);
  std::array<Token, 9> original;
  for (int k = 0; k < 9; ++k) original[k] = b.at(cells[k].first, cells[k].second);

  TokenBoard scratch = b;
  auto best = std::make_tuple(std::numeric_limits<int>::max(), 0, 0);
  bool found = false;
  std::array<Token, 9> best_cfg{};
  int total = 1;
  for (int k = 0; k < 9; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::array<Token, 9> cfg;
    int changes = 0, tokens = 0;
    for (int k = 0, c = code; k < 9; ++k, c /= 3) {
      cfg[k] = static_cast<Token>(c % 3);
      changes += cfg[k] != original[k];
      tokens += cfg[k] != Token::none;
    }
    auto key = std::make_tuple(changes, tokens, code);
    if (found && key >= best) continue;
    for (int k = 0; k < 9; ++k) scratch.set(cells[k].first, cells[k].second, cfg[k]);
    if (local_faults(scratch, wi0 - 2, wi1 + 2, wj0 - 2, wj1 + 2) == 0) {
      best = key;
      best_cfg = cfg;
      found = true;
    }
  }
  if (!found) return -1;
  for (int k = 0; k < 9; ++k) b.set(cells[k].first, cells[k].second, best_cfg[k]);
  return std::get<0>(best);
}

inline SwapCertificate board_certificate(const TokenBoard& b) {
  const GridSpec& s = b.spec();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 1; i <= s.m; ++i)
    for (int j = 1; j <= s.n; ++j) {
      Token t = b.at(i, j);
      if (t == Token::none) continue;
      auto [ti, tj] = shift_target(i, j, t);
      if (!s.contains(ti, tj)) throw ConstructionError("grid token would leave the grid");
      pairs.emplace_back(s.id(i, j), s.id(ti, tj));
    }
  return certificate_from_pairs(static_cast<std::size_t>(s.m) * s.n, std::move(pairs));
}

} // namespace detail

/// Token construction on P_m □ P_n: D is the token set, D' moves every black
/// token one column right and every white token one column left.
inline GridSwap grid_swap_construct(int m, int n) {
  if (n < 8 || m < n) throw ContractError("grid_swap_construct: requires m >= n >= 8");
  TokenBoard board = detail::base_board(m, n);
  GridSwap out{grid_graph(m, n), {}, board};

  const std::array<std::pair<int, int>, 4> corners{{{1, 1}, {1, n}, {m, 1}, {m, n}}};
  for (auto [ci, cj] : corners) {
    int i0 = std::min(ci, ci == 1 ? 3 : m - 2), i1 = std::max(ci, ci == 1 ? 3 : m - 2);
    int j0 = std::min(cj, cj == 1 ? 3 : n - 2), j1 = std::max(cj, cj == 1 ? 3 : n - 2);
    if (detail::local_faults(board, i0 - 2, i1 + 2, j0 - 2, j1 + 2) == 0) continue;
    int changes = detail::repair_corner(board, ci, cj);
    if (changes < 0)
      throw ConstructionError("no corner repair at (" + std::to_string(ci) + "," + std::to_string(cj) + ")");
    ++out.repaired_corners;
    out.repair_changes += changes;
  }
  if (detail::local_faults(board, 1, m, 1, n) != 0)
    throw ConstructionError("grid construction leaves faults away from the corners");

  out.board = board;
  out.certificate = detail::board_certificate(board);
  Verdict v = verify_certificate(out.graph, out.certificate);
  if (!v) throw ConstructionError("grid certificate fails: " + std::string(to_string(v.violation)));
  if (static_cast<long long>(out.certificate.size()) > grid_swap_bound(m, n))
    throw ConstructionError("grid certificate exceeds the size bound");
  return out;
}

// --- P3 x P_{4k+1} -------------------------------------------------------

struct StripSwap {
  Graph graph;
  SwapCertificate certificate;
};

namespace detail {

// One column of the strip, rows 1..3 (the P3 coordinate). Each cell is
// '.', or a role ('D' or 'E' for D') followed by where its partner sits:
// '<' previous column, '>' next column, '^' one row lower in P3, 'v' one
// row higher.
using StripColumn = std::array<const char*, 3>;

inline constexpr std::array<StripColumn, 2> strip_prefix{{
    {".", "Ev", "D^"},
    {"D>", ".", "D>"},
}};
inline constexpr std::array<StripColumn, 4> strip_cycle{{
    {"E<", ".", "E<"},
    {".", "D>", "."},
    {".", "E<", "."},
    {"D>", ".", "D>"},
}};
inline constexpr std::array<StripColumn, 3> strip_suffix{{
    {"E<", ".", "E<"},
    {".", "Dv", "E^"},
    {"Ev", "D^", "."},
}};

} // namespace detail

/// A swap set of size 3k+2 on P3 □ P_{4k+1}, laid out as grid_graph(3, 4k+1)
/// (column = P3 coordinate, row = position along the strip).
inline StripSwap p3_strip_swap(int k) {
  if (k < 3) throw ContractError("p3_strip_swap: requires k >= 3");
  std::vector<detail::StripColumn> cols(detail::strip_prefix.begin(), detail::strip_prefix.end());
  for (int r = 0; r < k - 1; ++r) cols.insert(cols.end(), detail::strip_cycle.begin(), detail::strip_cycle.end());
  cols.insert(cols.end(), detail::strip_suffix.begin(), detail::strip_suffix.end());

  const int len = static_cast<int>(cols.size());
  GridSpec s{3, len};
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int c = 0; c < len; ++c)
    for (int r = 0; r < 3; ++r) {
      const char* cell = cols[c][r];
      if (cell[0] != 'D') continue;
      int pr = r, pc = c;
      switch (cell[1]) {
      case '<': --pc; break;
      case '>': ++pc; break;
      case '^': --pr; break;
      case 'v': ++pr; break;
      }
      pairs.emplace_back(s.id(r + 1, c + 1), s.id(pr + 1, pc + 1));
    }
  StripSwap out{grid_graph(3, static_cast<std::size_t>(len)), certificate_from_pairs(3 * static_cast<std::size_t>(len), std::move(pairs))};
  Verdict v = verify_certificate(out.graph, out.certificate);
  if (!v) throw ConstructionError("strip certificate fails: " + std::string(to_string(v.violation)));
  return out;
}

// --- domination number of grids ------------------------------------------

/// Exact γ(P_rows □ P_cols) by a cell-by-cell sweep. The frontier keeps one
/// state per row: 0 chosen, 1 dominated, 2 not yet dominated.
inline int gamma_grid_dp(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ContractError("gamma_grid_dp: empty grid");
  if (rows > 8) throw BudgetError("gamma_grid_dp: rows must be at most 8");
  int states = 1;
  for (int r = 0; r < rows; ++r) states *= 3;
  std::vector<int> pow3(rows + 1, 1);
  for (int r = 1; r <= rows; ++r) pow3[r] = pow3[r - 1] * 3;
  auto digit = [&](int st, int r) { return st / pow3[r] % 3; };
  auto put = [&](int st, int r, int d) { return st + (d - digit(st, r)) * pow3[r]; };

  constexpr int inf = std::numeric_limits<int>::max() / 2;
  // Before the first column every row holds a phantom "dominated" cell.
  int start = 0;
  for (int r = 0; r < rows; ++r) start = put(start, r, 1);
  std::vector<int> cur(states, inf), next(states, inf);
  cur[start] = 0;
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      std::fill(next.begin(), next.end(), inf);
      for (int st = 0; st < states; ++st) {
        if (cur[st] >= inf) continue;
        int left = digit(st, r);
        int above = r > 0 ? digit(st, r - 1) : 1;
        // choose the cell
        {
          int ns = put(st, r, 0);
          if (r > 0 && above == 2) ns = put(ns, r - 1, 1);
          next[ns] = std::min(next[ns], cur[st] + 1);
        }
        // skip it; the left cell leaves the frontier and must be covered
        if (left != 2) {
          int d = (left == 0 || (r > 0 && above == 0)) ? 1 : 2;
          int ns = put(st, r, d);
          next[ns] = std::min(next[ns], cur[st]);
        }
      }
      std::swap(cur, next);
    }
  int best = inf;
  for (int st = 0; st < states; ++st) {
    bool ok = true;
    for (int r = 0; r < rows && ok; ++r) ok = digit(st, r) != 2;
    if (ok) best = std::min(best, cur[st]);
  }
  return best;
}

// --- density report ----------------------------------------------------------

struct GridDensityRow {
  int m = 0;
  int n = 0;
  std::size_t size = 0;
  double mn_over_5 = 0;
  long long bound = 0;
  int gamma = -1; // -1 when the DP is out of range
};

inline std::vector<GridDensityRow> grid_density_report(int max_mn) {
  std::vector<GridDensityRow> rows;
  for (int n = 8; n <= max_mn; ++n)
    for (int m = n; m <= max_mn; ++m) {
      GridSwap g = grid_swap_construct(m, n);
      GridDensityRow row{m, n, g.certificate.size(), m * n / 5.0, grid_swap_bound(m, n), -1};
      if (n <= 8) row.gamma = gamma_grid_dp(n, m);
      rows.push_back(row);
    }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return std::tie(a.m, a.n) < std::tie(b.m, b.n); });
  return rows;
}

inline std::string density_report_tsv(const std::vector<GridDensityRow>& rows) {
  std::ostringstream out;
  out << "m\tn\tswap_size\tmn_over_5\tbound\tgamma\n";
  out.setf(std::ios::fixed);
  out.precision(1);
  for (const auto& r : rows) {
    out << r.m << '\t' << r.n << '\t' << r.size << '\t' << r.mn_over_5 << '\t' << r.bound << '\t';
    if (r.gamma >= 0)
      out << r.gamma;
    else
      out << '-';
    out << '\n';
  }
  return out.str();
}

} // namespace swapset
