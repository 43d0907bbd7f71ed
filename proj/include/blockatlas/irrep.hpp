#pragma once

#include <vector>

#include "blockatlas/qmat.hpp"
#include "blockatlas/rootsys.hpp"

namespace blockatlas {

/// Irreducible highest-weight module as explicit exact matrices.
///
/// The basis consists of lowering words applied to the highest vector, one
/// word per slot, grouped by weight. The contravariant form makes the word
/// calculus concrete: a vector is zero in the module exactly when it pairs
/// to zero with everything of its weight.
struct Irrep {
  LieType type;
  Weight highest;
  int dim = 0;
  std::vector<Weight> weights;          // weight of each basis slot
  std::vector<std::vector<int>> words;  // lowering word of each slot, outermost letter first
  std::vector<QMat> raise;              // x_i^+
  std::vector<QMat> lower;              // x_i^-
  std::vector<QMat> cartan;             // h_i, diagonal with integer entries
  QMat gram;                            // contravariant form, block diagonal over weights
};

constexpr int kDefaultDimCap = 64;

/// Builds V(highest) by lowering from the top vector. The Chevalley
/// relations are verified on the finished matrices before returning.
/// Throws std::domain_error when weyl_dim exceeds the cap.
Irrep build_irrep(const RootSystem& rs, const Weight& highest, int dim_cap = kDefaultDimCap);

/// Chevalley generator slot order used across the loop-module code:
/// [0,n) are x_i^+, [n,2n) are x_i^-, [2n,3n) are h_i.
inline int gen_raise(int n, int i) { return i; }
inline int gen_lower(int n, int i) { return n + i; }
inline int gen_cartan(int n, int i) { return 2 * n + i; }

/// The 3n generator actions of an irrep in slot order.
std::vector<QMat> chevalley_actions(const Irrep& v);

}  // namespace blockatlas
