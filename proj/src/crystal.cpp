#include "reflr/crystal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace reflr {

Partition Tableau::shape(int n_pad) const {
  Partition s;
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  if (n_pad > static_cast<int>(s.size())) s.resize(n_pad, 0);
  return s;
}

bool valid_ssyt(const Tableau& t, int n) {
  if (!is_partition(t.shape())) return false;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n) return false;
      if (c + 1 < row.size() && row[c] > row[c + 1]) return false;
      if (r + 1 < t.rows.size() && c < t.rows[r + 1].size() &&
          t.rows[r + 1][c] <= row[c])
        return false;
    }
  }
  return true;
}

Word reverse_row_word(const Tableau& t) {
  Word u;
  for (const auto& row : t.rows)
    for (auto it = row.rbegin(); it != row.rend(); ++it) u.push_back(*it);
  return u;
}

Tableau tableau_from_word(const Word& u, const Partition& shape) {
  Tableau t;
  size_t pos = 0;
  for (int m : shape) {
    if (m == 0) break;
    if (pos + m > u.size()) throw std::invalid_argument("word shorter than shape");
    std::vector<int> row(u.begin() + pos, u.begin() + pos + m);
    std::reverse(row.begin(), row.end());
    t.rows.push_back(std::move(row));
    pos += m;
  }
  if (pos != u.size()) throw std::invalid_argument("word longer than shape");
  return t;
}

std::vector<int> word_weight(const Word& u, int n) {
  std::vector<int> wt(n, 0);
  for (int l : u) {
    if (l < 1 || l > n) throw std::invalid_argument("letter out of alphabet");
    ++wt[l - 1];
  }
  return wt;
}

bool is_dominant(const Word& u, int n) {
  std::vector<int> cnt(n + 2, 0);
  for (int l : u) {
    ++cnt[l];
    if (l > 1 && cnt[l] > cnt[l - 1]) return false;
  }
  return true;
}

std::optional<Word> crystal_step(CrystalDir dir, int i, const Word& u) {
  if (i < 1) throw std::invalid_argument("crystal index out of range");
  std::vector<size_t> open;       // surviving letters i
  std::vector<size_t> unmatched;  // surviving letters i+1
  for (size_t p = 0; p < u.size(); ++p) {
    if (u[p] == i) {
      open.push_back(p);
    } else if (u[p] == i + 1) {
      if (!open.empty())
        open.pop_back();
      else
        unmatched.push_back(p);
    }
  }
  Word v = u;
  if (dir == CrystalDir::lower_op) {
    if (open.empty()) return std::nullopt;
    v[open.front()] = i + 1;
  } else {
    if (unmatched.empty()) return std::nullopt;
    v[unmatched.back()] = i;
  }
  return v;
}

Tableau extreme_tableau(const Partition& mu, Extreme which, int n) {
  Partition m = mu;
  while (!m.empty() && m.back() == 0) m.pop_back();
  if (static_cast<int>(m.size()) > n)
    throw std::invalid_argument("shape has more rows than letters");
  Tableau t;
  if (which == Extreme::highest) {
    for (size_t j = 0; j < m.size(); ++j)
      t.rows.push_back(std::vector<int>(m[j], static_cast<int>(j) + 1));
  } else {
    t.rows.assign(m.size(), {});
    for (int c = 0; c < (m.empty() ? 0 : m[0]); ++c) {
      int h = 0;
      for (int mj : m)
        if (mj > c) ++h;
      for (int r = 0; r < h; ++r) t.rows[r].push_back(n - h + 1 + r);
    }
  }
  return t;
}

std::set<Word> demazure_closure(const Word& seed, const std::vector<int>& word,
                                bool opposite) {
  std::set<Word> cur{seed};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    std::vector<Word> frontier(cur.begin(), cur.end());
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (const Word& u : frontier) {
        auto v = crystal_step(opposite ? CrystalDir::raise_op : CrystalDir::lower_op,
                              i, u);
        if (v && cur.insert(*v).second) next.push_back(std::move(*v));
      }
      frontier = std::move(next);
    }
  }
  return cur;
}

DemazureCrystal demazure_crystal(const Partition& mu, const Permutation& w,
                                 bool opposite) {
  const int n = w.size();
  Partition m = pad_partition(mu, n);
  Word seed = reverse_row_word(
      extreme_tableau(m, opposite ? Extreme::lowest : Extreme::highest, n));
  DemazureCrystal out{m, w, opposite, demazure_closure(seed, reduced_word(w), opposite)};
  return out;
}

IntPolynomial crystal_character(const DemazureCrystal& crystal, int n) {
  IntPolynomial acc(n);
  for (const Word& u : crystal.elements) {
    auto wt = word_weight(u, n);
    acc.add_term(Exponent(wt.begin(), wt.end()), 1);
  }
  return acc;
}

long long refined_lr_crystal(const Partition& lam, const Partition& mu,
                             const Partition& nu, const Permutation& w) {
  const int n = w.size();
  Partition l = pad_partition(lam, n), m = pad_partition(mu, n), v = pad_partition(nu, n);
  if (part_sum(l) + part_sum(m) != part_sum(v)) return 0;
  Word prefix = reverse_row_word(extreme_tableau(l, Extreme::highest, n));
  std::vector<int> target(v.begin(), v.end());
  long long count = 0;
  for (const Word& bT : demazure_crystal(m, w).elements) {
    Word u = prefix;
    u.insert(u.end(), bT.begin(), bT.end());
    if (word_weight(u, n) == target && is_dominant(u, n)) ++count;
  }
  return count;
}

namespace {

// Row insertion (Schensted); P-tableau of a word.
Tableau rsk_p(const Word& u) {
  Tableau t;
  for (int x : u) {
    int cur = x;
    bool placed = false;
    for (auto& row : t.rows) {
      auto it = std::upper_bound(row.begin(), row.end(), cur);
      if (it == row.end()) {
        row.push_back(cur);
        placed = true;
        break;
      }
      std::swap(*it, cur);
    }
    if (!placed) t.rows.push_back({cur});
  }
  return t;
}

// Plactic row word: rows read bottom to top, each left to right;
// P(plactic_row_word(T)) = T.
Word plactic_row_word(const Tableau& t) {
  Word u;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
    u.insert(u.end(), it->begin(), it->end());
  return u;
}

}  // namespace

Tableau evacuation(const Tableau& t, int n) {
  Word u = plactic_row_word(t);
  Word star(u.rbegin(), u.rend());
  for (int& x : star) x = n + 1 - x;
  Tableau e = rsk_p(star);
  if (e.shape() != t.shape())
    throw std::logic_error("evacuation did not preserve shape");
  return e;
}

std::vector<Tableau> all_ssyt(const Partition& mu, int n) {
  Partition m = mu;
  while (!m.empty() && m.back() == 0) m.pop_back();
  std::vector<Tableau> out;
  if (static_cast<int>(m.size()) > n) return out;
  Tableau t;
  t.rows.assign(m.size(), {});
  std::function<void(size_t, int)> fill = [&](size_t r, int c) {
    if (r == m.size()) {
      out.push_back(t);
      return;
    }
    if (c == m[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = c > 0 ? t.rows[r][c - 1] : 1;
    if (r > 0 && c < static_cast<int>(t.rows[r - 1].size()))
      lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t.rows[r].push_back(v);
      fill(r, c + 1);
      t.rows[r].pop_back();
    }
  };
  fill(0, 0);
  return out;
}

}  // namespace reflr
