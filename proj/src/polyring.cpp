#include "reflr/polyring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace reflr {

IntPolynomial IntPolynomial::monomial(Exponent e, mpz_class c) {
  IntPolynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

mpz_class IntPolynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void IntPolynomial::add_term(const Exponent& e, const mpz_class& c) {
  if (c == 0) return;
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent length mismatch");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  r += o;
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  r -= o;
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  IntPolynomial r(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

IntPolynomial IntPolynomial::operator*(const mpz_class& c) const {
  IntPolynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.add_term(e, k * c);
  return r;
}

IntPolynomial IntPolynomial::swap_vars(int i) const {
  if (i < 1 || i >= nvars_) throw std::invalid_argument("swap index out of range");
  IntPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent e2 = e;
    std::swap(e2[i - 1], e2[i]);
    r.add_term(e2, c);
  }
  return r;
}

IntPolynomial IntPolynomial::permute_vars(const Permutation& w) const {
  if (w.size() != nvars_) throw std::invalid_argument("permutation size mismatch");
  IntPolynomial r(nvars_);
  Exponent e2(nvars_);
  for (const auto& [e, c] : terms_) {
    for (int i = 1; i <= nvars_; ++i) e2[w(i) - 1] = e[i - 1];
    r.add_term(e2, c);
  }
  return r;
}

bool IntPolynomial::symmetric_in(int i) const { return *this == swap_vars(i); }

bool IntPolynomial::fully_symmetric() const {
  for (int i = 1; i < nvars_; ++i)
    if (!symmetric_in(i)) return false;
  return true;
}

IntPolynomial exact_divide_linear(const IntPolynomial& f, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > f.nvars() || j > f.nvars())
    throw std::invalid_argument("bad divisor indices");
  // Group by the exponents outside {i, j}; within a group divide the
  // two-variable polynomial sum c[a][b] x_i^a x_j^b by (x_i - x_j):
  //   q[a-1][b] += c[a][b];  c[a-1][b+1] += c[a][b]   (a descending)
  // and the residue at a = 0 must vanish.
  const int ii = i - 1, jj = j - 1;
  std::map<Exponent, std::map<std::pair<int, int>, mpz_class>> groups;
  for (const auto& [e, c] : f.terms()) {
    Exponent key = e;
    int a = key[ii], b = key[jj];
    key[ii] = 0;
    key[jj] = 0;
    groups[key][{a, b}] += c;
  }
  IntPolynomial q(f.nvars());
  for (auto& [key, terms] : groups) {
    // process exponents of x_i in descending order
    while (!terms.empty()) {
      auto it = std::prev(terms.end());
      auto [a, b] = it->first;
      mpz_class c = it->second;
      terms.erase(it);
      if (c == 0) continue;
      if (a == 0) throw std::logic_error("inexact division by linear form");
      Exponent e = key;
      e[ii] = a - 1;
      e[jj] = b;
      q.add_term(e, c);
      terms[{a - 1, b + 1}] += c;
    }
  }
  return q;
}

IntPolynomial demazure_apply(int i, const IntPolynomial& f) {
  const int n = f.nvars();
  if (i < 1 || i >= n) throw std::invalid_argument("demazure index out of range");
  Exponent xi(n, 0), xi1(n, 0);
  xi[i - 1] = 1;
  xi1[i] = 1;
  IntPolynomial num =
      IntPolynomial::monomial(xi) * f - IntPolynomial::monomial(xi1) * f.swap_vars(i);
  return exact_divide_linear(num, i, i + 1);
}

IntPolynomial demazure_char(const Permutation& w, const Partition& mu) {
  const int n = w.size();
  Partition m = pad_partition(mu, n);
  IntPolynomial f = IntPolynomial::monomial(Exponent(m.begin(), m.end()));
  std::vector<int> word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_apply(*it, f);
  return f;
}

IntPolynomial pi_w0(const IntPolynomial& f) {
  const int n = f.nvars();
  IntPolynomial g = f;
  std::vector<int> word = reduced_word(Permutation::longest_element(n));
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure_apply(*it, g);
  return g;
}

Partition staircase(int n) {
  Partition rho(n);
  for (int i = 0; i < n; ++i) rho[i] = n - 1 - i;
  return rho;
}

IntPolynomial schur_poly(const Partition& nu, int n) {
  static std::mutex cache_mutex;
  static std::map<std::pair<int, Partition>, IntPolynomial> cache;
  Partition p = pad_partition(nu, n);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({n, p});
    if (it != cache.end()) return it->second;
  }
  // Weight generating function over GT patterns of shape p, built rows
  // n-1 down to 1 on top of the fixed bottom row; wt[k] = row-sum difference.
  IntPolynomial result(n);
  std::vector<int> wt(n, 0);
  std::function<void(const std::vector<int>&, int)> walk =
      [&](const std::vector<int>& below, int row) {
        long long below_sum = 0;
        for (int v : below) below_sum += v;
        if (row == 0) {
          wt[0] = static_cast<int>(below_sum);
          result.add_term(Exponent(wt.begin(), wt.end()), 1);
          return;
        }
        std::vector<int> cur(row);
        std::function<void(int, long long)> rec = [&](int t, long long sum) {
          if (t == row) {
            wt[row] = static_cast<int>(below_sum - sum);
            walk(cur, row - 1);
            return;
          }
          for (int v = below[t]; v >= below[t + 1]; --v) {
            cur[t] = v;
            rec(t + 1, sum + v);
          }
        };
        rec(0, 0);
      };
  walk(std::vector<int>(p.begin(), p.end()), n - 1);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(n, p), result);
  return result;
}

SchurExpansion schur_expand(IntPolynomial f) {
  const int n = f.nvars();
  if (!f.fully_symmetric())
    throw std::invalid_argument("schur_expand: polynomial is not symmetric");
  SchurExpansion out;
  while (!f.is_zero()) {
    // lex-max exponent; for a symmetric polynomial it is weakly decreasing
    const auto& [alpha, c] = *f.terms().rbegin();
    Partition a(alpha.begin(), alpha.end());
    if (!is_partition(a))
      throw std::logic_error("leading exponent not dominant in schur_expand");
    out.coefficients[a] = c;
    f -= schur_poly(a, n) * c;
  }
  return out;
}

IntPolynomial schur_reconstruct(const SchurExpansion& e, int n) {
  IntPolynomial acc(n);
  for (const auto& [nu, c] : e.coefficients) acc += schur_poly(nu, n) * c;
  return acc;
}

long long refined_lr_demazure(const Partition& lam, const Partition& mu,
                              const Partition& nu, const Permutation& w) {
  const int n = w.size();
  if (n > 6)
    throw std::invalid_argument("demazure engine guarded to n <= 6");
  Partition l = pad_partition(lam, n), m = pad_partition(mu, n), v = pad_partition(nu, n);
  if (part_sum(l) + part_sum(m) != part_sum(v)) return 0;
  IntPolynomial f =
      IntPolynomial::monomial(Exponent(l.begin(), l.end())) * demazure_char(w, m);
  SchurExpansion exp = schur_expand(pi_w0(f));
  auto it = exp.coefficients.find(v);
  if (it == exp.coefficients.end()) return 0;
  if (it->second < 0 || !it->second.fits_slong_p())
    throw std::logic_error("refined LR coefficient out of range");
  return it->second.get_si();
}

}  // namespace reflr
