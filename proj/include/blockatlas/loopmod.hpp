#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockatlas/drinfeld.hpp"
#include "blockatlas/galgebra.hpp"

namespace blockatlas {

/// One spectral point's worth of action data. A jet-0 term contributes
/// a^r * mats[k] to the action of basis element k at power r, a jet-1 term
/// contributes r * a^(r-1) * mats[k]. Every module built here is a finite
/// sum of such terms, so the whole family r -> matrix is finite data.
struct LoopTerm {
  Rat point;
  int jet = 0;
  std::vector<QMat> mats;  // one matrix per algebra basis element
};

struct LoopModule {
  GAlgebraPtr alg;
  int dim = 0;
  std::vector<LoopTerm> terms;  // sorted by (point, jet), no zero terms

  /// Action of basis element k tensored with t^r.
  QMat act(int k, Int r) const;
  /// Action of a Chevalley generator slot (see gen_raise and friends).
  QMat act_gen(int slot, Int r) const;
  /// Action of an arbitrary coordinate vector tensored with t^r.
  QMat act_element(const std::vector<Rat>& x, Int r) const;
};

/// Sparse Laurent polynomial: (exponent, coefficient) pairs.
using LaurentPoly = std::vector<std::pair<Int, Rat>>;

/// Pull an irrep back along evaluation at a nonzero point.
LoopModule evaluation_module(const GAlgebraPtr& g, const Irrep& v, const Rat& a);

/// Self-extension data on V(lambda) (+) V(mu): the value part acts
/// diagonally through evaluation at a, the derivative part feeds the
/// projection p into the V(mu) summand.
struct ExtensionModule {
  LoopModule module;
  Weight lambda, mu;
  Rat a;
  QMat p;  // d_mu x (dim_g * d_lambda), algebra slot major
  int dim_lambda = 0, dim_mu = 0;
};

/// Builds the module with action x(t^r)(v,w) = (a^r xv, a^r xw + r a^(r-1)
/// p(x(x)v)). Rejects non-equivariant p; p = 0 is allowed and produces the
/// split sum by the same formula.
ExtensionModule extension_module(const GAlgebraPtr& g, const Irrep& vlambda, const Irrep& vmu,
                                 const Rat& a, const QMat& p);
ExtensionModule extension_module(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                 const Rat& a, const QMat& p, int dim_cap = kDefaultDimCap);

LoopModule direct_sum(const LoopModule& x, const LoopModule& y);
LoopModule tensor_product(const LoopModule& x, const LoopModule& y);

/// Literal check of action([x(x)t^r, y(x)t^s]) = [action, action] over all
/// generator pairs and the given power window. Exact equality.
bool loop_axiom_sampled(const LoopModule& m, Int lo = -2, Int hi = 2);

/// Term-component form of the same axiom: brackets of value and derivative
/// components match term by term. Equivalent to the sampled check at every
/// power pair at once, since the coefficient functions r -> a^r, r a^(r-1)
/// are linearly independent over distinct nonzero points.
bool loop_axiom_components(const LoopModule& m);

/// Matrices of x(x)f for every basis element x.
std::vector<QMat> polynomial_action(const LoopModule& m, const LaurentPoly& f);

/// True iff x(x)f acts as sum over points of f(a)(value part) plus
/// f'(a)(derivative part). With f vanishing to second order at every point
/// this says x(x)f acts as zero.
bool jet_annihilator_check(const LoopModule& m, const LaurentPoly& f);

/// True iff the V(mu) summand has no invariant complement. Solves the
/// linear system for a complementary graph over powers r in {-1,0,1}.
bool is_nonsplit(const ExtensionModule& m);

struct IrreducibilityReport {
  bool irreducible = false;
  bool certified = false;        // exact verdict rather than sampled evidence
  std::optional<QMat> witness;   // columns span a proper nonzero submodule
  std::string verdict() const;
};

/// One-sided irreducibility test: reducible verdicts always carry a
/// witness submodule; irreducible verdicts are certified when the
/// highest-weight analysis or the dim <= 12 exhaustive fallback decides,
/// and are "probably irreducible" otherwise. Deterministic given the seed.
IrreducibilityReport irreducibility(const LoopModule& m, std::uint64_t seed);
bool is_irreducible(const LoopModule& m, std::uint64_t seed);

/// The common spectral character of the module's constituents, computed
/// from generalized Cartan eigenvalue data on successive highest-weight
/// layers, with the weight at each known point recovered by a Vandermonde
/// solve. Throws std::domain_error naming a witnessing pair when two
/// constituents disagree (the module then splits across blocks).
SpectralCharacter spectral_character_of(const LoopModule& m);

/// JSON bundle {dim, generators: [{name, power, matrix}]} with exact
/// rational entries [num, den], powers in [lo, hi].
std::string module_json(const LoopModule& m, Int lo = -1, Int hi = 1);

}  // namespace blockatlas
