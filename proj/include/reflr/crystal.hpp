#pragma once

#include <optional>
#include <set>
#include <vector>

#include "reflr/partition.hpp"
#include "reflr/perm.hpp"
#include "reflr/polyring.hpp"

namespace reflr {

// Finite sequence over the alphabet {1..n}.
using Word = std::vector<int>;

// Semistandard Young tableau in English notation: rows weakly increase,
// columns strictly increase.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape(int n_pad = 0) const;
  bool operator==(const Tableau& o) const { return rows == o.rows; }
  bool operator<(const Tableau& o) const { return rows < o.rows; }
};

bool valid_ssyt(const Tableau& t, int n);

// Reverse row word b_T: rows read right to left, top to bottom.
Word reverse_row_word(const Tableau& t);

// Inverse of reverse_row_word within Tab(shape): cut the word into segments
// of lengths shape_1, shape_2, ... and reverse each segment.
Tableau tableau_from_word(const Word& u, const Partition& shape);

std::vector<int> word_weight(const Word& u, int n);

// Every prefix has at least as many letters i as i+1, for all i (ballot).
bool is_dominant(const Word& u, int n);

enum class CrystalDir { raise_op, lower_op };

// Kashiwara operator on words by the bracketing rule: scan left to right over
// letters i, i+1, cancelling pairs with i immediately left of a surviving
// i+1; lower (f_i) bumps the leftmost surviving i to i+1, raise (e_i) drops
// the rightmost surviving i+1 to i. Returns nullopt when no letter survives.
std::optional<Word> crystal_step(CrystalDir dir, int i, const Word& u);

enum class Extreme { highest, lowest };

// highest: row j filled with j. lowest: column of height h gets n-h+1..n.
Tableau extreme_tableau(const Partition& mu, Extreme which, int n);

// Demazure crystal B(mu, w) (resp. opposite B(mu, w)^op), generated from the
// highest (resp. lowest) tableau by staged closure under f_i (resp. e_i)
// along a reduced word of w, rightmost letter acting first.
struct DemazureCrystal {
  Partition shape;
  Permutation w;
  bool opposite;
  std::set<Word> elements;
};

DemazureCrystal demazure_crystal(const Partition& mu, const Permutation& w,
                                 bool opposite = false);

// Staged closure from an arbitrary seed word (the counting rule admits any
// dominant seed word of the same weight; used by the block-product check).
std::set<Word> demazure_closure(const Word& seed, const std::vector<int>& word,
                                bool opposite);

// Sum of x^weight(u) over the crystal elements.
IntPolynomial crystal_character(const DemazureCrystal& crystal, int n);

// #{T in B(mu,w) : word(T_lam) * b_T dominant of weight nu}.
long long refined_lr_crystal(const Partition& lam, const Partition& mu,
                             const Partition& nu, const Permutation& w);

// Schutzenberger evacuation: shape-preserving weight-reversing involution,
// computed by reverse-complementing the plactic row word and rectifying.
Tableau evacuation(const Tableau& t, int n);

// All SSYT of shape mu with entries in 1..n, by direct recursive fill
// (independent of the crystal operators).
std::vector<Tableau> all_ssyt(const Partition& mu, int n);

}  // namespace reflr
