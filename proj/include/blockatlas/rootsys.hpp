#pragma once

#include <map>
#include <string>
#include <vector>

#include "blockatlas/numeric.hpp"
#include "blockatlas/qmat.hpp"

namespace blockatlas {

/// Simple Lie type, e.g. A7, E8, G2.
struct LieType {
  char family = 'A';
  int rank = 0;

  static LieType parse(const std::string& s);  // throws std::invalid_argument
  std::string str() const { return family + std::to_string(rank); }
  bool operator==(const LieType& o) const { return family == o.family && rank == o.rank; }
  bool operator!=(const LieType& o) const { return !(*this == o); }
};

/// Integral weight in the fundamental-weight basis (one coordinate per node).
using Weight = IntVec;
/// Root-lattice element in the simple-root basis.
using RootVec = IntVec;

/// Cartan data for one simple type. Node numbering follows the diagram table
/// this project standardizes on (chains 1..n; the branch node of D_n is n,
/// attached to n-2, and the branch nodes of E6/E7/E8 are 6/7/8, attached to
/// 3/4/5; in F4 nodes 1,2 are short; in G2 node 1 is short).
///
/// cartan[i][j] = alpha_j(h_i), so column j is alpha_j in the
/// fundamental-weight basis.
struct RootSystem {
  LieType type;
  int rank;
  std::vector<IntVec> cartan;      // rank x rank
  IntVec sym;                      // symmetrizer d_i, minimal positive, d_i*C_ij = d_j*C_ji
  QMat cartan_inv;                 // rational inverse of the Cartan matrix
  std::vector<RootVec> pos_roots;  // all positive roots, by increasing height
  RootVec theta;                   // highest root, simple-root coordinates
  Weight theta_w;                  // highest root, fundamental-weight coordinates
  std::vector<int> shaded;         // distinguished node set I (0-based)
  std::vector<int> dual_perm;      // node permutation realizing -w0

  static RootSystem build(LieType t);  // throws std::domain_error on bad rank

  Weight root_to_weight(const RootVec& b) const;   // C * b
  std::vector<Rat> weight_to_root_coords(const Weight& w) const;  // C^{-1} * w
  bool in_root_lattice(const Weight& w) const;

  bool is_dominant(const Weight& w) const;
  Weight fundamental(int i) const;  // omega_{i+1}
  Weight zero() const { return Weight(rank, 0); }

  /// beta(h_i) for beta in simple-root coordinates.
  Int pairing(const RootVec& b, int i) const;

  /// Simple reflection s_i in weight coordinates.
  Weight reflect(const Weight& w, int i) const;

  /// Dominant representative of the Weyl orbit of w.
  Weight to_dominant(const Weight& w) const;

  /// Dominant representative with the sign of the Weyl element used;
  /// sign = 0 if the orbit meets a chamber wall (stabilized weight).
  std::pair<Weight, int> to_dominant_signed(const Weight& w) const;

  Weight minus_w0(const Weight& w) const;

  /// Weights of the adjoint module with multiplicities: every root once,
  /// zero with multiplicity rank.
  std::vector<std::pair<Weight, Int>> adjoint_weights() const;
};

std::string weight_str(const Weight& w);

}  // namespace blockatlas
