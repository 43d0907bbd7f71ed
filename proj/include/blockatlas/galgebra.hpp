#pragma once

#include <memory>
#include <vector>

#include "blockatlas/irrep.hpp"
#include "blockatlas/rootsys.hpp"

namespace blockatlas {

/// The algebra itself, realized as its adjoint module. Basis elements are
/// the adjoint irrep's word basis; `ad[k]` is the bracket action of basis
/// element k in that same basis, and `gen_coords` locates the Chevalley
/// generators. Everything downstream (loop modules, projections) speaks in
/// these coordinates.
struct GAlgebra {
  RootSystem rs;
  Irrep adjoint;
  std::vector<QMat> ad;
  std::vector<std::vector<Rat>> gen_coords;  // 3n entries in chevalley slot order

  int dim() const { return adjoint.dim; }
};

using GAlgebraPtr = std::shared_ptr<const GAlgebra>;

/// Builds the algebra. The adjoint module must fit the dimension cap;
/// raise the cap for algebras past dimension 64 (the E family).
GAlgebraPtr build_galgebra(const RootSystem& rs, int dim_cap = kDefaultDimCap);

/// Action matrices of every algebra basis element on an irrep, in basis
/// order. Computed by replaying the adjoint word recipes as brackets, so
/// the identification of basis elements is the same in every module.
std::vector<QMat> algebra_actions(const GAlgebra& g, const Irrep& v);

/// Bracket of two coordinate vectors.
std::vector<Rat> bracket_coords(const GAlgebra& g, const std::vector<Rat>& x,
                                const std::vector<Rat>& y);

/// A nonzero intertwiner g (x) V(lambda) -> V(mu), as a matrix over the
/// product basis (algebra slot major). Deterministic: the top vector is
/// drawn from the highest-weight solution space in fixed basis order and
/// the image basis is transported along the target's word recipes.
/// Throws std::domain_error("Hom vanishes") when no intertwiner exists.
QMat equivariant_projection(const GAlgebra& g, const Irrep& vlambda, const Irrep& vmu);
QMat equivariant_projection(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                            int dim_cap = kDefaultDimCap);

}  // namespace blockatlas
