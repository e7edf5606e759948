#include "reflr/hive.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace reflr {

bool valid_gt(const GTPattern& a) {
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(a.rows[i].size()) != i + 1) return false;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      if (a.rows[i][j] - a.rows[i - 1][j] < 0) return false;      // NE
      if (a.rows[i - 1][j] - a.rows[i][j + 1] < 0) return false;  // SE
    }
  return true;
}

Partition gt_shape(const GTPattern& a) {
  Partition p;
  for (long long v : a.rows.back()) p.push_back(static_cast<int>(v));
  return p;
}

long long content(const Hive& h, const Rhombus& r) {
  const auto& L = h.labels;
  switch (r.type) {
    case RhombusType::ne:
      return L[r.i - 1][r.j - 1] + L[r.i][r.j] - L[r.i - 1][r.j] - L[r.i][r.j - 1];
    case RhombusType::se:
      return L[r.i - 1][r.j] + L[r.i][r.j] - L[r.i - 1][r.j - 1] - L[r.i][r.j + 1];
    case RhombusType::vertical:
      return L[r.i][r.j - 1] + L[r.i][r.j] - L[r.i - 1][r.j - 1] - L[r.i + 1][r.j];
  }
  return 0;
}

std::vector<Rhombus> all_rhombi(int n) {
  std::vector<Rhombus> out;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      out.push_back({RhombusType::ne, i, j});
      out.push_back({RhombusType::se, i, j});
    }
  for (int i = 1; i < n; ++i)
    for (int k = 1; k <= i; ++k) out.push_back({RhombusType::vertical, i, k});
  return out;
}

std::array<std::pair<int, int>, 4> rhombus_vertices(const Rhombus& r) {
  switch (r.type) {
    case RhombusType::ne:
      return {{{r.i - 1, r.j - 1}, {r.i, r.j}, {r.i - 1, r.j}, {r.i, r.j - 1}}};
    case RhombusType::se:
      return {{{r.i - 1, r.j}, {r.i, r.j}, {r.i - 1, r.j - 1}, {r.i, r.j + 1}}};
    case RhombusType::vertical:
      return {{{r.i, r.j - 1}, {r.i, r.j}, {r.i - 1, r.j - 1}, {r.i + 1, r.j}}};
  }
  return {};
}

Tableau gt_to_tableau(const GTPattern& a) {
  const int n = a.size();
  Tableau t;
  for (int j = 1; j <= n; ++j) {
    std::vector<int> row;
    for (int i = j; i <= n; ++i) {
      long long prev = (i - 1 >= j) ? a.rows[i - 2][j - 1] : 0;
      long long cnt = a.rows[i - 1][j - 1] - prev;
      if (cnt < 0) throw std::invalid_argument("gt_to_tableau: negative NE difference");
      for (long long c = 0; c < cnt; ++c) row.push_back(i);
    }
    if (!row.empty()) t.rows.push_back(std::move(row));
  }
  return t;
}

GTPattern tableau_to_gt(const Tableau& t, int n) {
  GTPattern a;
  a.rows.assign(n, {});
  for (int i = 1; i <= n; ++i) a.rows[i - 1].assign(i, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      long long cnt = 0;
      if (j - 1 < static_cast<int>(t.rows.size()))
        cnt = std::count(t.rows[j - 1].begin(), t.rows[j - 1].end(), i);
      long long prev = (i - 1 >= j) ? a.rows[i - 2][j - 1] : 0;
      a.rows[i - 1][j - 1] = cnt + prev;
    }
  return a;
}

GTPattern hive_delta(const Hive& h) {
  const int n = h.size();
  GTPattern a;
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> row(i);
    for (int j = 0; j < i; ++j) row[j] = h.labels[i][j + 1] - h.labels[i][j];
    a.rows.push_back(std::move(row));
  }
  return a;
}

GTPattern hive_delta_ne(const Hive& h) {
  const int n = h.size();
  GTPattern a;
  for (int m = 1; m <= n; ++m) {
    const int k = n - m + 1;  // 1-based NE line index = 0-based column k-1
    std::vector<long long> row(m);
    for (int t = 1; t <= m; ++t)
      row[t - 1] = h.labels[k - 1 + t][k - 1] - h.labels[k - 2 + t][k - 1];
    a.rows.push_back(std::move(row));
  }
  return a;
}

Hive delta_inverse(const GTPattern& a, const Partition& lam) {
  const int n = a.size();
  Partition l = pad_partition(lam, n);
  auto ps = partial_sums(l);
  Hive h;
  h.labels.assign(n + 1, {});
  for (int r = 0; r <= n; ++r) {
    h.labels[r].assign(r + 1, 0);
    h.labels[r][0] = ps[r];
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      h.labels[i][j] = a.rows[i - 1][j - 1] + h.labels[i][j - 1];
  return h;
}

Hive delta_ne_inverse(const GTPattern& a, const Partition& nu) {
  const int n = a.size();
  Partition v = pad_partition(nu, n);
  auto ps = partial_sums(v);
  Hive h;
  h.labels.assign(n + 1, {});
  for (int r = 0; r <= n; ++r) h.labels[r].assign(r + 1, 0);
  h.labels[n][n] = ps[n];
  for (int k = 1; k <= n; ++k) {
    const int m = n - k + 1;
    h.labels[k - 1][k - 1] = ps[k - 1];
    for (int t = 1; t <= m; ++t)
      h.labels[k - 1 + t][k - 1] = h.labels[k - 2 + t][k - 1] + a.rows[m - 1][t - 1];
  }
  return h;
}

HiveValidation validate_hive(const Hive& h, const Partition& lam,
                             const Partition& mu, const Partition& nu) {
  HiveValidation out;
  const int n = h.size();
  for (int r = 0; r <= n; ++r)
    if (static_cast<int>(h.labels[r].size()) != r + 1) return out;
  Partition l = pad_partition(lam, n), m = pad_partition(mu, n), v = pad_partition(nu, n);
  auto psl = partial_sums(l), psm = partial_sums(m), psv = partial_sums(v);
  out.borders_ok = true;
  for (int r = 0; r <= n; ++r) {
    if (h.labels[r][0] != psl[r]) out.borders_ok = false;
    if (h.labels[r][r] != psv[r]) out.borders_ok = false;
  }
  for (int c = 0; c <= n; ++c)
    if (h.labels[n][c] != psl[n] + psm[c]) out.borders_ok = false;
  for (const Rhombus& r : all_rhombi(n))
    if (content(h, r) < 0) out.negative.push_back(r);
  out.ok = out.borders_ok && out.negative.empty();
  return out;
}

FaceWord face_word(const KoganFace& f, int n, FaceOrder order) {
  std::vector<std::pair<int, int>> items(f.flats.begin(), f.flats.end());
  if (!f.dual) {
    for (auto [i, j] : items)
      if (!(n >= i && i > j && j >= 1))
        throw std::invalid_argument("primal face position out of range");
    if (order == FaceOrder::lex)
      std::sort(items.begin(), items.end());
    else
      std::sort(items.begin(), items.end(), [](auto a, auto b) {
        return std::make_pair(a.second, a.first) < std::make_pair(b.second, b.first);
      });
  } else {
    for (auto [i, j] : items)
      if (!(n >= i && i >= j && j >= 2))
        throw std::invalid_argument("dual face position out of range");
    std::sort(items.begin(), items.end(), [](auto a, auto b) {
      return std::make_pair(a.first, -a.second) < std::make_pair(b.first, -b.second);
    });
  }
  FaceWord out{{}, Permutation::identity(n), false};
  for (auto [i, j] : items) {
    int letter = f.dual ? j - 1 : i - j;
    out.letters.push_back(letter);
    out.sigma = compose(out.sigma, Permutation::simple(letter, n));
  }
  out.reduced = length(out.sigma) == static_cast<int>(items.size());
  return out;
}

Permutation varpi(const KoganFace& f, int n) {
  FaceWord fw = face_word(f, n);
  if (!fw.reduced) throw std::invalid_argument("varpi requires a reduced face");
  Permutation w0 = Permutation::longest_element(n);
  return compose(compose(w0, fw.sigma), w0);
}

std::vector<KoganFace> reduced_faces_for(const Permutation& u, bool dual) {
  const int n = u.size();
  Permutation w0 = Permutation::longest_element(n);
  Permutation target = compose(compose(w0, u), w0);
  const int len = length(u);
  std::vector<std::pair<int, int>> positions;
  for (int i = 2; i <= n; ++i)
    for (int j = dual ? 2 : 1; j <= (dual ? i : i - 1); ++j) positions.push_back({i, j});
  std::vector<KoganFace> out;
  std::vector<std::pair<int, int>> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(cur.size()) == len) {
      KoganFace f{{cur.begin(), cur.end()}, dual};
      FaceWord fw = face_word(f, n);
      if (fw.reduced && fw.sigma == target) out.push_back(std::move(f));
      return;
    }
    for (size_t p = start; p < positions.size(); ++p) {
      if (positions.size() - p < static_cast<size_t>(len) - cur.size()) break;
      cur.push_back(positions[p]);
      rec(p + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

bool is_left_bottom_justified(const KoganFace& f, int n) {
  if (f.dual) return false;
  if (f.flats.empty()) return true;
  std::map<int, std::set<int>> by_row;
  for (auto [i, j] : f.flats) by_row[i].insert(j);
  int first = by_row.begin()->first;
  if (by_row.rbegin()->first != n) return false;
  int prev = 0;
  for (int i = first; i <= n; ++i) {
    auto it = by_row.find(i);
    if (it == by_row.end()) return false;
    int m = *it->second.rbegin();
    if (static_cast<int>(it->second.size()) != m) return false;  // j = 1..m
    if (m < prev || m >= i) return false;
    prev = m;
  }
  return true;
}

KoganFace f_w_for_312(const Permutation& w) {
  const int n = w.size();
  if (!avoids_pattern(w, 312))
    throw std::invalid_argument("f_w_for_312 requires a 312-avoiding permutation");
  Permutation u = compose(Permutation::longest_element(n), w);
  std::vector<KoganFace> faces = reduced_faces_for(u);
  if (faces.size() != 1 || !is_left_bottom_justified(faces[0], n))
    throw std::logic_error("F_w is not a unique left-and-bottom justified face");
  return faces[0];
}

std::vector<std::pair<int, int>> interior_vertices(int n) {
  std::vector<std::pair<int, int>> out;
  for (int r = 2; r <= n - 1; ++r)
    for (int c = 1; c <= r - 1; ++c) out.push_back({r, c});
  return out;
}

std::vector<Hive> enumerate_kogan_hives(const Partition& lam, const Partition& mu,
                                        const Partition& nu, const KoganFace& f) {
  if (f.dual) throw std::invalid_argument("hive enumeration takes a primal face");
  const int n = std::max({static_cast<int>(lam.size()), static_cast<int>(mu.size()),
                          static_cast<int>(nu.size())});
  Partition l = pad_partition(lam, n), m = pad_partition(mu, n), v = pad_partition(nu, n);
  if (part_sum(l) + part_sum(m) != part_sum(v)) return {};
  for (auto [i, j] : f.flats)
    if (!(n >= i && i > j && j >= 1))
      throw std::invalid_argument("face position out of range");
  auto psl = partial_sums(l), psm = partial_sums(m), psv = partial_sums(v);

  std::vector<std::vector<long long>> h(n + 1);
  std::vector<std::vector<char>> known(n + 1);
  for (int r = 0; r <= n; ++r) {
    h[r].assign(r + 1, 0);
    known[r].assign(r + 1, 0);
  }
  for (int r = 0; r <= n; ++r) {
    h[r][0] = psl[r];
    h[r][r] = psv[r];
    known[r][0] = known[r][r] = 1;
  }
  for (int c = 0; c <= n; ++c) {
    h[n][c] = psl[n] + psm[c];
    known[n][c] = 1;
  }

  const std::vector<Rhombus> rhombi = all_rhombi(n);
  auto is_flat = [&](const Rhombus& r) {
    return r.type == RhombusType::ne && f.flats.count({r.i, r.j}) > 0;
  };

  // Constraints among border labels only are checked up front.
  for (const Rhombus& r : rhombi) {
    auto vs = rhombus_vertices(r);
    bool all_known = true;
    for (auto [a, b] : vs)
      if (!known[a][b]) { all_known = false; break; }
    if (!all_known) continue;
    long long c = h[vs[0].first][vs[0].second] + h[vs[1].first][vs[1].second] -
                  h[vs[2].first][vs[2].second] - h[vs[3].first][vs[3].second];
    if (c < 0 || (is_flat(r) && c != 0)) return {};
  }

  // Fill interior labels row by row, bottom row upward, left to right.
  std::vector<std::pair<int, int>> order;
  for (int r = n - 1; r >= 2; --r)
    for (int c = 1; c <= r - 1; ++c) order.push_back({r, c});

  std::vector<Hive> out;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == order.size()) {
      Hive hv{h};
      out.push_back(std::move(hv));
      return;
    }
    auto [r, c] = order[idx];
    long long lo = LLONG_MIN / 4, hi = LLONG_MAX / 4;
    for (const Rhombus& rh : rhombi) {
      auto vs = rhombus_vertices(rh);
      int self = -1;
      bool others_known = true;
      for (int t = 0; t < 4; ++t) {
        if (vs[t] == std::make_pair(r, c)) {
          self = t;
        } else if (!known[vs[t].first][vs[t].second]) {
          others_known = false;
          break;
        }
      }
      if (self < 0 || !others_known) continue;
      // content = v0 + v1 - v2 - v3 >= 0 (== 0 when flat)
      long long rest = 0;
      for (int t = 0; t < 4; ++t) {
        if (t == self) continue;
        long long val = h[vs[t].first][vs[t].second];
        rest += (t < 2) ? val : -val;
      }
      if (self < 2) {  // obtuse: x + rest >= 0
        lo = std::max(lo, -rest);
        if (is_flat(rh)) hi = std::min(hi, -rest);
      } else {  // acute: rest - x >= 0
        hi = std::min(hi, rest);
        if (is_flat(rh)) lo = std::max(lo, rest);
      }
    }
    known[r][c] = 1;
    for (long long val = lo; val <= hi; ++val) {
      h[r][c] = val;
      rec(idx + 1);
    }
    known[r][c] = 0;
  };
  rec(0);

  // Enumeration is self-checking at desk scale.
  for (const Hive& hv : out) {
    auto check = validate_hive(hv, l, m, v);
    bool flats_ok = true;
    for (auto [i, j] : f.flats)
      if (content(hv, {RhombusType::ne, i, j}) != 0) flats_ok = false;
    if (!check.ok || !flats_ok)
      throw std::logic_error("hive enumeration produced an invalid hive");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Hive> kogan_hive_union(const Partition& lam, const Partition& mu,
                                   const Partition& nu, const Permutation& u) {
  std::set<Hive> seen;
  for (const KoganFace& f : reduced_faces_for(u))
    for (Hive& h : enumerate_kogan_hives(lam, mu, nu, f)) seen.insert(std::move(h));
  return {seen.begin(), seen.end()};
}

long long refined_lr_hive(const Partition& lam, const Partition& mu,
                          const Partition& nu, const Permutation& w) {
  const int n = w.size();
  Partition l = pad_partition(lam, n), m = pad_partition(mu, n), v = pad_partition(nu, n);
  if (part_sum(l) + part_sum(m) != part_sum(v)) return 0;
  Permutation u = compose(Permutation::longest_element(n), w);
  return static_cast<long long>(kogan_hive_union(l, m, v, u).size());
}

bool gt_on_face(const GTPattern& a, const KoganFace& f) {
  for (auto [i, j] : f.flats) {
    if (!f.dual) {
      long long prev = (i - 1 >= j) ? a.rows[i - 2][j - 1] : 0;
      if (a.rows[i - 1][j - 1] != prev) return false;
    } else {
      if (a.rows[i - 2][j - 2] != a.rows[i - 1][j - 1]) return false;
    }
  }
  return true;
}

bool gt_in_kogan_union(const GTPattern& a, const Permutation& u, bool dual) {
  if (!valid_gt(a)) return false;
  for (const KoganFace& f : reduced_faces_for(u, dual))
    if (gt_on_face(a, f)) return true;
  return false;
}

namespace {

Rational make_rational(long long num, long long den) {
  long long g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

}  // namespace

std::vector<IncreasableSubset> increasable_subsets(const Hive& h) {
  const int n = h.size();
  auto interior = interior_vertices(n);
  auto rhombi = all_rhombi(n);
  std::vector<IncreasableSubset> out;
  const size_t count = interior.size();
  for (size_t mask = 1; mask < (size_t{1} << count); ++mask) {
    std::vector<std::pair<int, int>> s;
    for (size_t b = 0; b < count; ++b)
      if (mask & (size_t{1} << b)) s.push_back(interior[b]);
    bool feasible = true;
    bool bounded = false;
    long long best_num = 0, best_den = 1;  // min of content/(-delta)
    for (const Rhombus& r : rhombi) {
      auto vs = rhombus_vertices(r);
      int delta = 0;
      for (int t = 0; t < 4; ++t) {
        bool in_s = std::find(s.begin(), s.end(), vs[t]) != s.end();
        if (in_s) delta += (t < 2) ? 1 : -1;
      }
      if (delta >= 0) continue;
      long long c = content(h, r);
      if (c <= 0) { feasible = false; break; }
      // candidate eps = c / (-delta)
      if (!bounded || c * best_den < best_num * (-delta)) {
        best_num = c;
        best_den = -delta;
        bounded = true;
      }
    }
    if (!feasible) continue;
    if (!bounded)
      throw std::logic_error("increasable subset with no decreasing rhombus");
    out.push_back({s, make_rational(best_num, best_den)});
  }
  return out;
}

Hive add_indicator(const Hive& h, const std::vector<std::pair<int, int>>& s,
                   long long t) {
  Hive out = h;
  for (auto [r, c] : s) out.labels[r][c] += t;
  return out;
}

}  // namespace reflr
