#pragma once

#include <map>
#include <vector>

#include "blockatlas/rootsys.hpp"

namespace blockatlas {

/// Character-level facts about irreducible highest-weight modules, computed
/// by classical closed formulas and recursions. This is the reference the
/// explicit matrix constructions are checked against.

/// Dimension of V(lambda) by the Weyl product formula.
BigInt weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Dominant weights of V(lambda) with multiplicities (Freudenthal).
std::map<Weight, BigInt> dominant_weight_system(const RootSystem& rs, const Weight& lambda);

/// All weights of V(lambda) with multiplicities.
std::map<Weight, BigInt> weight_system(const RootSystem& rs, const Weight& lambda);

/// Multiplicity of the weight mu in V(lambda).
BigInt weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Decomposition of V(lambda) (x) V(mu) into irreducibles, as a map from
/// highest weights to multiplicities.
std::map<Weight, BigInt> tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                          const Weight& mu);

/// Multiplicity of V(nu) inside V(lambda) (x) V(mu).
BigInt tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                           const Weight& nu);

/// Whether Hom(g (x) V(mu), V(nu)) is nonzero, i.e. V(nu) occurs in the
/// tensor product of the adjoint module with V(mu). Uses the adjoint weight
/// list directly, so no weight-multiplicity recursion is needed.
bool hom_nonzero(const RootSystem& rs, const Weight& mu, const Weight& nu);

/// Full Weyl orbit of a weight.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

}  // namespace blockatlas
