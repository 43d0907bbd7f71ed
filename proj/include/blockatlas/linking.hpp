#pragma once

#include <vector>

#include "blockatlas/gamma.hpp"
#include "blockatlas/rootsys.hpp"

namespace blockatlas {

/// Walk from mu down to the minimal representative of its class, one
/// adjoint-linked step at a time. Every consecutive pair (x, y) in the
/// result satisfies Hom(g (x) V(x), V(y)) != 0, each element is dominant,
/// and the last element is lambda_gamma of mu's class.
std::vector<Weight> chain_to_representative(const RootSystem& rs, const GammaGroup& G,
                                            const Weight& mu);

/// Chain from mu to nu through the class representative. Throws
/// std::domain_error if the two weights are not in the same Q-coset.
std::vector<Weight> chain_between(const RootSystem& rs, const GammaGroup& G, const Weight& mu,
                                  const Weight& nu);

/// Check that every element is dominant and every consecutive pair is
/// adjoint-linked.
bool verify_chain(const RootSystem& rs, const std::vector<Weight>& chain);

/// Peephole shortening: cut exact loops, then repeatedly drop any interior
/// weight whose neighbours are directly linked. The result is a valid chain
/// with the same endpoints, never longer than the input.
std::vector<Weight> simplify_chain(const RootSystem& rs, const std::vector<Weight>& chain);

}  // namespace blockatlas
