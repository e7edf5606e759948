#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "reflr/partition.hpp"
#include "reflr/perm.hpp"

namespace reflr {

using Exponent = std::vector<int>;

// Multivariate polynomial over Z with dense exponent vectors of fixed length
// n and arbitrary-precision coefficients. No zero coefficients are stored;
// all arithmetic is exact.
class IntPolynomial {
 public:
  explicit IntPolynomial(int nvars) : nvars_(nvars) {}

  static IntPolynomial monomial(Exponent e, mpz_class c = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, mpz_class>& terms() const { return terms_; }
  mpz_class coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const mpz_class& c);

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const mpz_class& c) const;
  bool operator==(const IntPolynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Action of s_i: swap variables x_i, x_{i+1} (1-based i).
  IntPolynomial swap_vars(int i) const;
  // Action of an arbitrary permutation of the variables: x_i -> x_{w(i)}.
  IntPolynomial permute_vars(const Permutation& w) const;

  bool symmetric_in(int i) const;
  bool fully_symmetric() const;

 private:
  int nvars_;
  std::map<Exponent, mpz_class> terms_;
};

// Exact division of f by (x_i - x_j), i != j, via synthetic division on
// exponent pairs. Throws std::logic_error if the division is not exact.
IntPolynomial exact_divide_linear(const IntPolynomial& f, int i, int j);

// Demazure operator pi_i: f -> (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}).
IntPolynomial demazure_apply(int i, const IntPolynomial& f);

// Key polynomial kappa_{w,mu} = pi_w(x^mu), computed along a reduced word of w.
IntPolynomial demazure_char(const Permutation& w, const Partition& mu);

// pi_{w0} f: iterated pi_i along a reduced word of the longest element.
IntPolynomial pi_w0(const IntPolynomial& f);

// Staircase partition rho = (n-1, ..., 1, 0).
Partition staircase(int n);

// Schur polynomial s_nu in n variables, as the weight generating function of
// Gelfand-Tsetlin patterns of shape nu. This route is deliberately
// independent of the divided-difference operators.
IntPolynomial schur_poly(const Partition& nu, int n);

// Expansion of a symmetric polynomial in the Schur basis.
struct SchurExpansion {
  std::map<Partition, mpz_class> coefficients;
};

// Repeated leading-term subtraction in dominance order. Throws
// std::invalid_argument if f is not symmetric.
SchurExpansion schur_expand(IntPolynomial f);

IntPolynomial schur_reconstruct(const SchurExpansion& e, int n);

// Coefficient of s_nu in pi_{w0}(x^lam kappa_{w,mu}). Guarded to n <= 6.
long long refined_lr_demazure(const Partition& lam, const Partition& mu,
                              const Partition& nu, const Permutation& w);

}  // namespace reflr
