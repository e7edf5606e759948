#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "reflr/crystal.hpp"
#include "reflr/partition.hpp"
#include "reflr/perm.hpp"

namespace reflr {

// Triangular array a_{ij}, 1 <= j <= i <= n, stored as rows[i-1][j-1].
// Interlacing: NE_{ij} = a_{ij} - a_{i-1,j} >= 0, SE_{ij} = a_{i-1,j} - a_{i,j+1} >= 0.
struct GTPattern {
  std::vector<std::vector<long long>> rows;

  int size() const { return static_cast<int>(rows.size()); }
  bool operator==(const GTPattern& o) const { return rows == o.rows; }
  bool operator<(const GTPattern& o) const { return rows < o.rows; }
};

bool valid_gt(const GTPattern& a);
Partition gt_shape(const GTPattern& a);  // bottom row

// Triangular vertex labelling h of the big hive triangle, rows 0..n with row
// r of length r+1, stored as labels[r][c], c = 0..r.
struct Hive {
  std::vector<std::vector<long long>> labels;

  int size() const { return static_cast<int>(labels.size()) - 1; }
  bool operator==(const Hive& o) const { return labels == o.labels; }
  bool operator<(const Hive& o) const { return labels < o.labels; }
};

// The three rhombus families. Contents (0-based labels):
//   NE(i,j):  h[i-1][j-1] + h[i][j]   - h[i-1][j] - h[i][j-1]      2<=i<=n, 1<=j<=i-1
//   SE(i,j):  h[i-1][j]   + h[i][j]   - h[i-1][j-1] - h[i][j+1]    2<=i<=n, 1<=j<=i-1
//   V(i,k):   h[i][k-1]   + h[i][k]   - h[i-1][k-1] - h[i+1][k]    1<=i<=n-1, 1<=k<=i
// NE(i,j) is the rhombus R_{ij}: its content equals NE_{ij} of hive_delta(h).
enum class RhombusType { ne, se, vertical };

struct Rhombus {
  RhombusType type;
  int i, j;
  bool operator==(const Rhombus& o) const = default;
};

long long content(const Hive& h, const Rhombus& r);
std::vector<Rhombus> all_rhombi(int n);
// The four vertices of a rhombus: obtuse pair first, then acute pair.
std::array<std::pair<int, int>, 4> rhombus_vertices(const Rhombus& r);

// bg bijection GT_Z(mu) -> Tab(mu): letter i appears NE_{ij} times in row j.
Tableau gt_to_tableau(const GTPattern& a);
GTPattern tableau_to_gt(const Tableau& t, int n);

// Row-wise successive differences: a GT pattern of shape mu (bottom border).
GTPattern hive_delta(const Hive& h);
// Differences along NE-SW lines: a GT pattern of shape lambda (left border).
GTPattern hive_delta_ne(const Hive& h);

// Rebuild a hive from its row-difference pattern and left border ps(lambda).
// The result is only a candidate labelling; validate separately.
Hive delta_inverse(const GTPattern& a, const Partition& lam);
// Rebuild from the NE-difference pattern and right border ps(nu).
Hive delta_ne_inverse(const GTPattern& a, const Partition& nu);

struct HiveValidation {
  bool ok = false;
  bool borders_ok = false;
  std::vector<Rhombus> negative;  // rhombi with content < 0
};

HiveValidation validate_hive(const Hive& h, const Partition& lam,
                             const Partition& mu, const Partition& nu);

// Set F of flat positions. Primal: pairs (i,j), n >= i > j >= 1, meaning
// NE_{ij} = 0 (rhombus R_{ij} flat). Dual: pairs (i,j), n >= i >= j >= 2,
// meaning a_{i-1,j-1} - a_{ij} = 0 on GT patterns.
struct KoganFace {
  std::set<std::pair<int, int>> flats;
  bool dual = false;

  bool operator==(const KoganFace& o) const = default;
  bool operator<(const KoganFace& o) const {
    return std::tie(dual, flats) < std::tie(o.dual, o.flats);
  }
};

enum class FaceOrder { lex, column };

struct FaceWord {
  std::vector<int> letters;
  Permutation sigma;
  bool reduced;
};

// Word of a face. Primal: letter s_{i-j} per pair, lex order (i asc, j asc)
// gives sigma(F), column order (j asc, i asc) gives sigma'(F). Dual: letter
// s_{j-1} per pair, order (i asc, j desc), giving sigma-bar(F).
FaceWord face_word(const KoganFace& f, int n, FaceOrder order = FaceOrder::lex);

// varpi(F) = w0 sigma(F) w0 (dual: w0 sigma-bar(F) w0). Requires F reduced.
Permutation varpi(const KoganFace& f, int n);

// All reduced faces F with varpi(F) = u, by subset search over positions
// with |F| = length(u).
std::vector<KoganFace> reduced_faces_for(const Permutation& u, bool dual = false);

// For 312-avoiding w: the unique reduced face with varpi(F) = w0 w. Verified
// to be left-and-bottom justified. Throws if w is not 312-avoiding.
KoganFace f_w_for_312(const Permutation& w);

bool is_left_bottom_justified(const KoganFace& f, int n);

// All integer hives with borders (lam, mu, nu), content(R_{ij}) = 0 for
// (i,j) in F and all rhombus contents >= 0. Returns an empty list when
// |lam| + |mu| != |nu|. Deterministic row-major order.
std::vector<Hive> enumerate_kogan_hives(const Partition& lam, const Partition& mu,
                                        const Partition& nu, const KoganFace& f);

// Deduplicated union over all reduced primal faces F with varpi(F) = u.
std::vector<Hive> kogan_hive_union(const Partition& lam, const Partition& mu,
                                   const Partition& nu, const Permutation& u);

// #K^H_Z(lam, mu, nu, w0 w): the hive count of the refined LR coefficient.
long long refined_lr_hive(const Partition& lam, const Partition& mu,
                          const Partition& nu, const Permutation& w);

// Membership of a GT pattern in a single Kogan face / in the union K(mu, u).
bool gt_on_face(const GTPattern& a, const KoganFace& f);
bool gt_in_kogan_union(const GTPattern& a, const Permutation& u, bool dual);

// Reduced fraction num/den, den > 0.
struct Rational {
  long long num = 0, den = 1;
  bool operator==(const Rational& o) const = default;
};

struct IncreasableSubset {
  std::vector<std::pair<int, int>> vertices;  // interior (row, col), 0-based
  Rational max_eps;
};

// Interior vertices: (r, c) with 2 <= r <= n-1, 1 <= c <= r-1.
std::vector<std::pair<int, int>> interior_vertices(int n);

// All nonempty interior-vertex subsets S admitting eps > 0 with
// h + eps*I_S still a hive, each with its maximal feasible eps.
std::vector<IncreasableSubset> increasable_subsets(const Hive& h);

Hive add_indicator(const Hive& h, const std::vector<std::pair<int, int>>& s,
                   long long t);

}  // namespace reflr
