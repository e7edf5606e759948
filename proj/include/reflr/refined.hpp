#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reflr/hive.hpp"
#include "reflr/partition.hpp"
#include "reflr/perm.hpp"

namespace reflr {

enum class Engine { demazure, crystal, hive };

const char* engine_name(Engine e);
std::set<Engine> all_engines();

// c_{lam,mu}^{nu}(w) by one engine.
long long refined_lr_value(const Partition& lam, const Partition& mu,
                           const Partition& nu, const Permutation& w, Engine e);

struct EngineReport {
  long long value = 0;
  std::map<std::string, long long> per_engine;
  bool agreement = true;
  std::map<std::string, double> timings_ms;
  std::string reproducer;  // nonempty iff engines disagree
};

// Runs each requested engine and cross-checks. Disagreement is a correctness
// bug: the report carries a reproducer bundle and agreement = false.
EngineReport refined_lr(const Partition& lam, const Partition& mu,
                        const Partition& nu, const Permutation& w,
                        const std::set<Engine>& engines);

// #{T in Tab(mu) : word(T_lam) * b_T dominant of weight nu} by full SSYT
// enumeration with direct prefix counting; independent of all three engines.
long long classical_lr_oracle(const Partition& lam, const Partition& mu,
                              const Partition& nu);

struct SaturationViolation {
  Permutation w;
  Partition lam, mu, nu;
  int k = 0;
  long long c_k = 0, c_1 = 0;

  SaturationViolation() : w(Permutation::identity(1)) {}
};

// Smallest k <= kmax with c(k lam, k mu, k nu)(w) > 0 = c(lam,mu,nu)(w), if
// any. Candidates are re-verified with the hive engine before being reported.
std::optional<SaturationViolation> saturation_check(const Permutation& w,
                                                    const Partition& lam,
                                                    const Partition& mu,
                                                    const Partition& nu, int kmax);

enum class PermClass { avoid312, avoid231, block, excluded, all };

PermClass parse_perm_class(const std::string& s);
const char* perm_class_name(PermClass c);

// True iff w factors over some Young subgroup into blockwise 312- or
// 231-avoiding permutations.
bool has_block_avoiding_factorization(const Permutation& w);

std::vector<Permutation> permutations_in_class(int n, PermClass cls);

struct ScanBudget {
  int n = 0;
  int max_part = 0;
  int kmax = 2;
  PermClass cls = PermClass::all;
  int jobs = 1;
};

struct SaturationReport {
  ScanBudget budget;
  long long triples_examined = 0;
  std::vector<SaturationViolation> violations;
};

// Exhaustive scan over all w in the class, all lam, mu with parts <= max_part
// and all dominant nu with |nu| = |lam| + |mu|. Deterministic result
// regardless of the number of jobs.
SaturationReport saturation_scan(const ScanBudget& budget);

// Psi(h) = delta^{-1}(eta_lam(delta^NE h)): maps an integer hive on the
// (lam, mu, nu, w0 w) Kogan union to one on the (mu, lam, nu, w0 w^{-1})
// union. Output membership is verified; failure signals an
// evacuation-convention fault.
Hive symmetry_map(const Hive& h, const Partition& lam, const Partition& mu,
                  const Partition& nu, const Permutation& w);

// Inverse direction: (delta^NE)^{-1}(eta_lam(delta h')) for h' on the
// (mu, lam, nu, w0 w^{-1}) union.
Hive symmetry_map_inverse(const Hive& h, const Partition& lam, const Partition& mu,
                          const Partition& nu, const Permutation& w);

struct BlockCheckResult {
  bool holds = false;
  long long lhs = 0, rhs = 0;
  long long delta_factor = 0;
  std::vector<long long> block_factors;
};

// Verifies c_{lam,mu}^{nu}(w) = delta_{lam0+mu0, nu0} c^1 c^2 for w in the
// Young subgroup of a two-block structure; the decomposition uses
// fundamental-weight coordinates c_i = p_i - p_{i+1} masked to the block cut
// and block interiors. Throws if w does not factor.
BlockCheckResult block_product_check(const Partition& lam, const Partition& mu,
                                     const Partition& nu, const BlockStructure& blocks,
                                     const Permutation& w,
                                     Engine engine = Engine::crystal);

struct BruhatTable {
  std::map<Permutation, long long> values;
  std::vector<std::pair<Permutation, Permutation>> covers;
  bool monotone = false;
  bool coset_constant = false;
};

// c(w) for every w in S_n (n <= 5), with cover edges, verified monotone
// along covers and constant on W_lam \ S_n / W_mu double cosets.
BruhatTable bruhat_value_table(const Partition& lam, const Partition& mu,
                               const Partition& nu, Engine engine = Engine::crystal);

}  // namespace reflr
