#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reflr/partition.hpp"

namespace reflr {

// Element of S_n in one-line notation: w(i) = images[i-1], values 1..n.
//
// Composition convention, fixed project-wide: (u*v)(i) = u(v(i)), so v acts
// first. All values are immutable after construction.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation longest_element(int n);  // w0 = (n, n-1, ..., 1)
  static Permutation simple(int i, int n);    // s_i = (i, i+1)

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }  // 1-based
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);

// Number of inversions #{i<j : w(i) > w(j)}.
int length(const Permutation& w);

// Lexicographically smallest reduced word (letters are simple-reflection
// indices); multiplying the s_i left to right reproduces w.
std::vector<int> reduced_word(const Permutation& w);

// Product s_{word[0]} s_{word[1]} ... as an element of S_n.
Permutation from_word(const std::vector<int>& word, int n);

// All reduced words of w, lexicographically sorted.
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

// pattern is 312 or 231. True iff no i<j<k realizes the value order
// (312: w(j)<w(k)<w(i); 231: w(k)<w(i)<w(j)).
bool avoids_pattern(const Permutation& w, int pattern);

// Bruhat order via the subword property on a fixed reduced word of v
// (greedy lifting-property descent).
bool bruhat_leq(const Permutation& u, const Permutation& v);

// All v covering w: w < v with length(v) = length(w) + 1.
std::set<Permutation> bruhat_covers(const Permutation& w);

std::vector<Permutation> all_permutations(int n);

// Ordered composition (n_1, ..., n_p) of n into blocks.
class BlockStructure {
 public:
  explicit BlockStructure(std::vector<int> blocks);
  const std::vector<int>& blocks() const { return blocks_; }
  int total() const { return n_; }
  int offset(int r) const;  // start offset of block r (0-based r)

 private:
  std::vector<int> blocks_;
  int n_;
};

// Factors (w_1, ..., w_p) with w_r permuting only block r, if w lies in the
// Young subgroup; nullopt otherwise. Each factor is returned as an element
// of S_{n_r}.
std::optional<std::vector<Permutation>> block_factor(const Permutation& w,
                                                     const BlockStructure& blocks);

// Simple indices i with p_i = p_{i+1}; these generate the stabilizer W_p.
std::vector<int> stabilizer_simples(const Partition& p);

// Minimal-length element of the double coset W_lam w W_mu, by orbit sweep.
Permutation double_coset_rep(const Partition& lam, const Permutation& w,
                             const Partition& mu);

// Digit string for n <= 9, comma-separated otherwise.
std::string to_string(const Permutation& w);

// Accepts both "2413" and "2,4,1,3".
Permutation parse_permutation(const std::string& s);

}  // namespace reflr
