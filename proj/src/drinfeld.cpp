#include "blockatlas/drinfeld.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace blockatlas {

bool SpectralPointLess::operator()(const SpectralPoint& a, const SpectralPoint& b) const {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<Rat>(a)) return std::get<Rat>(a) < std::get<Rat>(b);
  return std::get<std::string>(a) < std::get<std::string>(b);
}

std::string spectral_point_str(const SpectralPoint& p) {
  if (std::holds_alternative<Rat>(p)) return std::get<Rat>(p).get_str();
  return std::get<std::string>(p);
}

namespace {

void validate_point(const SpectralPoint& p) {
  if (std::holds_alternative<Rat>(p)) {
    if (std::get<Rat>(p) == 0) throw std::domain_error("spectral point must be nonzero");
  } else if (std::get<std::string>(p).empty()) {
    throw std::domain_error("symbolic spectral point must have a nonempty label");
  }
}

void validate_weight(const RootSystem& rs, const Weight& w) {
  if (int(w.size()) != rs.rank) throw std::domain_error("factor weight has wrong rank");
  if (!rs.is_dominant(w)) throw std::domain_error("factor weight must be dominant");
}

}  // namespace

PolyTuple poly_tuple(const RootSystem& rs,
                     const std::vector<std::pair<SpectralPoint, Weight>>& parts) {
  PolyTuple p;
  p.type = rs.type;
  for (const auto& [pt, w] : parts) {
    validate_point(pt);
    validate_weight(rs, w);
    auto [it, fresh] = p.factors.emplace(pt, w);
    if (!fresh) it->second = vec_add(it->second, w);
  }
  for (auto it = p.factors.begin(); it != p.factors.end();)
    it = vec_is_zero(it->second) ? p.factors.erase(it) : std::next(it);
  return p;
}

PolyTuple multiply(const RootSystem& rs, const PolyTuple& a, const PolyTuple& b) {
  if (a.type != rs.type || b.type != rs.type)
    throw std::domain_error("tuple type mismatch in multiply");
  std::vector<std::pair<SpectralPoint, Weight>> parts(a.factors.begin(), a.factors.end());
  parts.insert(parts.end(), b.factors.begin(), b.factors.end());
  return poly_tuple(rs, parts);
}

PolyTuple dual(const RootSystem& rs, const PolyTuple& p) {
  if (p.type != rs.type) throw std::domain_error("tuple type mismatch in dual");
  std::vector<std::pair<SpectralPoint, Weight>> parts;
  for (const auto& [pt, w] : p.factors) parts.emplace_back(pt, rs.minus_w0(w));
  return poly_tuple(rs, parts);
}

Weight lambda_pi(const RootSystem& rs, const PolyTuple& p) {
  Weight sum = rs.zero();
  for (const auto& [pt, w] : p.factors) sum = vec_add(sum, w);
  return sum;
}

SpectralCharacter spectral_character(const RootSystem& rs, const GammaGroup& G,
                                     const PolyTuple& p) {
  if (p.type != rs.type) throw std::domain_error("tuple type mismatch in character");
  SpectralCharacter chi;
  for (const auto& [pt, w] : p.factors) {
    GammaClass c = G.project(w);
    if (!G.is_zero(c)) chi[pt] = c;
  }
  return chi;
}

bool same_block(const RootSystem& rs, const GammaGroup& G, const PolyTuple& a,
                const PolyTuple& b) {
  if (a.type != b.type) throw std::domain_error("cannot compare tuples of different type");
  return spectral_character(rs, G, a) == spectral_character(rs, G, b);
}

std::vector<std::pair<SpectralPoint, Weight>> block_label(const RootSystem& rs,
                                                          const GammaGroup& G,
                                                          const PolyTuple& p) {
  std::vector<std::pair<SpectralPoint, Weight>> label;
  for (const auto& [pt, cls] : spectral_character(rs, G, p))
    label.emplace_back(pt, lambda_gamma(rs, G, cls));
  return label;
}

namespace {

using Poly = std::vector<Rat>;  // ascending degree

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

/// Exact division by (x - r); the remainder must vanish.
Poly poly_deflate(const Poly& p, const Rat& r) {
  Poly q(p.size() - 1, Rat(0));
  Rat carry = p.back();
  for (size_t i = p.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + carry * r;
  }
  if (carry != 0) throw std::logic_error("deflation by a non-root");
  return q;
}

std::vector<BigInt> divisors(const BigInt& value) {
  BigInt v = abs(value);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// All rational roots of a polynomial with rational coefficients, with
/// multiplicity, by the rational root test after clearing denominators.
/// Returns the fully deflated remainder alongside.
std::pair<std::vector<Rat>, Poly> rational_roots(Poly p) {
  std::vector<Rat> roots;
  while (p.size() > 1) {
    BigInt den = 1;
    for (const Rat& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    BigInt lead = Rat(p.back() * Rat(den)).get_num();
    BigInt cons = Rat(p.front() * Rat(den)).get_num();
    if (cons == 0) throw std::domain_error("polynomial vanishes at zero");

    bool found = false;
    for (const BigInt& pn : divisors(cons)) {
      for (const BigInt& qd : divisors(lead)) {
        for (int sign : {1, -1}) {
          Rat r(sign > 0 ? pn : -pn, qd);
          r.canonicalize();
          if (poly_eval(p, r) == 0) {
            roots.push_back(r);
            p = poly_deflate(p, r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return {roots, p};
}

}  // namespace

PolyTuple from_coefficients(const RootSystem& rs, const std::vector<std::vector<Rat>>& coeffs) {
  if (int(coeffs.size()) != rs.rank)
    throw std::domain_error("expected one coefficient list per node");
  std::vector<std::pair<SpectralPoint, Weight>> parts;
  for (int i = 0; i < rs.rank; ++i) {
    Poly p = coeffs[i];
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    if (p.empty() || p.front() != 1)
      throw std::domain_error("polynomial must have constant term 1");
    if (p.size() == 1) continue;

    // pi(u) = prod (1 - a u) has roots u = 1/a, so the reversed polynomial
    // is monic with the a's themselves as roots.
    Poly rev(p.rbegin(), p.rend());
    auto [points, rest] = rational_roots(rev);
    if (rest.size() > 1)
      throw std::domain_error("polynomial at node " + std::to_string(i + 1) +
                              " does not split into linear factors over the rationals");
    for (const Rat& a : points) {
      if (a == 0) throw std::logic_error("unexpected zero spectral point");
      Weight w = rs.zero();
      w[i] = 1;
      parts.emplace_back(SpectralPoint(a), w);
    }
  }
  PolyTuple out = poly_tuple(rs, parts);

  // round-trip safety: the factored form must reproduce the input exactly
  auto back = to_coefficients(rs, out);
  for (int i = 0; i < rs.rank; ++i) {
    Poly p = coeffs[i];
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    if (back[i] != p) throw std::logic_error("factorization failed to reproduce input");
  }
  return out;
}

std::vector<std::vector<Rat>> to_coefficients(const RootSystem& rs, const PolyTuple& p) {
  if (p.type != rs.type) throw std::domain_error("tuple type mismatch in expansion");
  std::vector<std::vector<Rat>> out(rs.rank, Poly{Rat(1)});
  for (const auto& [pt, w] : p.factors) {
    if (!std::holds_alternative<Rat>(pt))
      throw std::domain_error("cannot expand a symbolic spectral point");
    const Rat& a = std::get<Rat>(pt);
    Poly lin{Rat(1), -a};
    for (int i = 0; i < rs.rank; ++i)
      for (Int k = 0; k < w[i]; ++k) out[i] = poly_mul(out[i], lin);
  }
  return out;
}

}  // namespace blockatlas
