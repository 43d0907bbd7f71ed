#pragma once

#include <string>
#include <vector>

#include "blockatlas/rootsys.hpp"

namespace blockatlas {

/// The quotient of the weight lattice by the root lattice, presented as a
/// product of cyclic groups Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... | d_k
/// (trivial factors dropped). Classes are residue vectors.
///
/// The projection is normalized so that the first distinguished node's
/// fundamental weight maps to a standard generator: (1) in the cyclic case,
/// (1,0) and (0,1) for the two distinguished nodes when there are two factors.
struct GammaGroup {
  std::vector<Int> invariant_factors;  // nontrivial, divisibility ascending
  std::vector<IntVec> proj;            // one row per factor, applied to weight coords

  Int order() const;
  std::string name() const;  // "trivial", "Z4", "Z2xZ2", ...

  std::vector<Int> project(const Weight& w) const;

  std::vector<Int> zero_class() const { return std::vector<Int>(invariant_factors.size(), 0); }
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> neg(const std::vector<Int>& a) const;
  std::vector<Int> reduce(const std::vector<Int>& a) const;  // residues into [0, d_i)
  bool is_zero(const std::vector<Int>& a) const;
};

GammaGroup gamma_group(const RootSystem& rs);

/// Minimal dominant weight supported on the distinguished nodes representing
/// the given class; minimality is by total coefficient sum, then
/// lexicographic coefficients.
Weight lambda_gamma(const RootSystem& rs, const GammaGroup& G, const std::vector<Int>& cls);

}  // namespace blockatlas
