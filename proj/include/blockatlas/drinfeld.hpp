#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "blockatlas/gamma.hpp"
#include "blockatlas/rootsys.hpp"

namespace blockatlas {

/// A spectral point: a nonzero rational, or a symbolic label standing for a
/// point in general position.
using SpectralPoint = std::variant<Rat, std::string>;

/// Rationals first (ascending), then labels (lexicographic).
struct SpectralPointLess {
  bool operator()(const SpectralPoint& a, const SpectralPoint& b) const;
};

std::string spectral_point_str(const SpectralPoint& p);

/// A tuple of polynomials with constant term 1, stored in factored form:
/// each support point carries the dominant weight of exponents, so node i's
/// polynomial is prod_a (1 - a u)^{w_a[i]}. Zero weights are dropped.
struct PolyTuple {
  LieType type;
  std::map<SpectralPoint, Weight, SpectralPointLess> factors;

  bool operator==(const PolyTuple& o) const { return type == o.type && factors == o.factors; }
};

/// Validating constructor; merges repeated points by adding weights.
PolyTuple poly_tuple(const RootSystem& rs,
                     const std::vector<std::pair<SpectralPoint, Weight>>& parts);

/// Pointwise product: weights add over the union of supports.
PolyTuple multiply(const RootSystem& rs, const PolyTuple& a, const PolyTuple& b);

/// The tuple of the dual module: each weight is replaced by its image
/// under -w0, points unchanged. An involution.
PolyTuple dual(const RootSystem& rs, const PolyTuple& p);

/// Sum of the weights over the support (the top weight of the module).
Weight lambda_pi(const RootSystem& rs, const PolyTuple& p);

using GammaClass = std::vector<Int>;

/// Finitely supported function from spectral points to nonzero classes.
using SpectralCharacter = std::map<SpectralPoint, GammaClass, SpectralPointLess>;

SpectralCharacter spectral_character(const RootSystem& rs, const GammaGroup& G,
                                     const PolyTuple& p);

bool same_block(const RootSystem& rs, const GammaGroup& G, const PolyTuple& a,
                const PolyTuple& b);

/// Canonical name of the block: for each support point of the character,
/// the pair (point, minimal representative weight of its class), in
/// canonical point order.
std::vector<std::pair<SpectralPoint, Weight>> block_label(const RootSystem& rs,
                                                          const GammaGroup& G, const PolyTuple& p);

/// Factor a coefficient presentation. coeffs[i] lists node i's polynomial
/// coefficients in ascending degree; the constant term must be 1 and every
/// polynomial must split into linear factors over the rationals.
PolyTuple from_coefficients(const RootSystem& rs, const std::vector<std::vector<Rat>>& coeffs);

/// Expand back to coefficient lists. Requires a purely rational support.
std::vector<std::vector<Rat>> to_coefficients(const RootSystem& rs, const PolyTuple& p);

}  // namespace blockatlas
