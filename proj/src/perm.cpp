#include "reflr/perm.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace reflr {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation of {1..n}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::longest_element(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - i;
  return Permutation(std::move(img));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple index out of range");
  auto w = identity(n);
  std::vector<int> img = w.images();
  std::swap(img[i - 1], img[i]);
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("size mismatch in compose");
  std::vector<int> img(u.size());
  for (int i = 1; i <= u.size(); ++i) img[i - 1] = u(v(i));
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> img(w.size());
  for (int i = 1; i <= w.size(); ++i) img[w(i) - 1] = i;
  return Permutation(std::move(img));
}

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Permutation& w) {
  // Peel the smallest left descent at each step; this yields the lex-min word.
  std::vector<int> word;
  Permutation cur = w;
  const int n = w.size();
  while (true) {
    Permutation winv = inverse(cur);
    int i = 0;
    for (int k = 1; k < n; ++k) {
      if (winv(k) > winv(k + 1)) { i = k; break; }
    }
    if (i == 0) break;
    word.push_back(i);
    cur = compose(Permutation::simple(i, n), cur);
  }
  return word;
}

Permutation from_word(const std::vector<int>& word, int n) {
  Permutation w = Permutation::identity(n);
  for (int i : word) w = compose(w, Permutation::simple(i, n));
  return w;
}

namespace {

void gen_reduced_words(const Permutation& cur, std::vector<int>& word,
                       std::vector<std::vector<int>>& out) {
  const int n = cur.size();
  Permutation winv = inverse(cur);
  bool terminal = true;
  for (int i = 1; i < n; ++i) {
    if (winv(i) > winv(i + 1)) {  // left descent
      terminal = false;
      word.push_back(i);
      gen_reduced_words(compose(Permutation::simple(i, n), cur), word, out);
      word.pop_back();
    }
  }
  if (terminal) out.push_back(word);
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  gen_reduced_words(w, word, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool avoids_pattern(const Permutation& w, int pattern) {
  if (pattern != 312 && pattern != 231)
    throw std::invalid_argument("unsupported pattern code " + std::to_string(pattern));
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (pattern == 312 && w(j) < w(k) && w(k) < w(i)) return false;
        if (pattern == 231 && w(k) < w(i) && w(i) < w(j)) return false;
      }
  return true;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("size mismatch in bruhat_leq");
  const int n = u.size();
  // Lifting property along a fixed reduced word of v, left to right:
  // strip s_i from x = u whenever it is a left descent of x.
  Permutation x = u;
  for (int i : reduced_word(v)) {
    Permutation xinv = inverse(x);
    if (xinv(i) > xinv(i + 1)) x = compose(Permutation::simple(i, n), x);
  }
  return x == Permutation::identity(n);
}

std::set<Permutation> bruhat_covers(const Permutation& w) {
  // w.t_{ik} covers w iff w(i) < w(k) and no i < j < k has w(i) < w(j) < w(k).
  std::set<Permutation> out;
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k) {
      if (w(i) >= w(k)) continue;
      bool blocked = false;
      for (int j = i + 1; j < k; ++j)
        if (w(i) < w(j) && w(j) < w(k)) { blocked = true; break; }
      if (blocked) continue;
      std::vector<int> img = w.images();
      std::swap(img[i - 1], img[k - 1]);
      out.insert(Permutation(std::move(img)));
    }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

BlockStructure::BlockStructure(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  n_ = 0;
  for (int b : blocks_) {
    if (b <= 0) throw std::invalid_argument("block sizes must be positive");
    n_ += b;
  }
}

int BlockStructure::offset(int r) const {
  int off = 0;
  for (int t = 0; t < r; ++t) off += blocks_[t];
  return off;
}

std::optional<std::vector<Permutation>> block_factor(const Permutation& w,
                                                     const BlockStructure& blocks) {
  if (blocks.total() != w.size())
    throw std::invalid_argument("block sizes must sum to n");
  std::vector<Permutation> factors;
  int off = 0;
  for (int b : blocks.blocks()) {
    std::vector<int> img(b);
    for (int i = 1; i <= b; ++i) {
      int v = w(off + i);
      if (v <= off || v > off + b) return std::nullopt;
      img[i - 1] = v - off;
    }
    factors.push_back(Permutation(std::move(img)));
    off += b;
  }
  return factors;
}

std::vector<int> stabilizer_simples(const Partition& p) {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] == p[i + 1]) out.push_back(static_cast<int>(i + 1));
  return out;
}

Permutation double_coset_rep(const Partition& lam, const Permutation& w,
                             const Partition& mu) {
  const int n = w.size();
  if (static_cast<int>(lam.size()) != n || static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("partition length must equal n");
  std::vector<int> left = stabilizer_simples(lam);
  std::vector<int> right = stabilizer_simples(mu);
  std::set<Permutation> orbit{w};
  std::queue<Permutation> frontier;
  frontier.push(w);
  while (!frontier.empty()) {
    Permutation x = frontier.front();
    frontier.pop();
    for (int i : left) {
      Permutation y = compose(Permutation::simple(i, n), x);
      if (orbit.insert(y).second) frontier.push(y);
    }
    for (int i : right) {
      Permutation y = compose(x, Permutation::simple(i, n));
      if (orbit.insert(y).second) frontier.push(y);
    }
  }
  const Permutation* best = nullptr;
  int best_len = 0;
  for (const Permutation& x : orbit) {
    int l = length(x);
    if (!best || l < best_len) { best = &x; best_len = l; }
  }
  return *best;
}

std::string to_string(const Permutation& w) {
  std::string s;
  for (int i = 1; i <= w.size(); ++i) {
    if (w.size() > 9 && i > 1) s += ",";
    s += std::to_string(w(i));
  }
  return s;
}

Permutation parse_permutation(const std::string& s) {
  std::vector<int> img;
  if (s.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos < s.size()) {
      size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      img.push_back(std::stoi(s.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation string: " + s);
      img.push_back(c - '0');
    }
  }
  return Permutation(std::move(img));
}

}  // namespace reflr
