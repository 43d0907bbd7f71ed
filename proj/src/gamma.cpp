#include "blockatlas/gamma.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

namespace blockatlas {

namespace {

struct ZMat {
  int n;
  std::vector<BigInt> a;
  explicit ZMat(int n_) : n(n_), a(size_t(n_) * n_, BigInt(0)) {}
  BigInt& at(int i, int j) { return a[size_t(i) * n + j]; }
};

/// Smith normal form of D in place; U collects the row operations, so the
/// cokernel map is x -> Ux with component i taken mod D[i][i].
void smith(ZMat& D, ZMat& U) {
  const int n = D.n;
  for (int i = 0; i < n; ++i) U.at(i, i) = 1;

  auto swap_rows = [&](int r, int s) {
    for (int j = 0; j < n; ++j) {
      std::swap(D.at(r, j), D.at(s, j));
      std::swap(U.at(r, j), U.at(s, j));
    }
  };
  auto swap_cols = [&](int r, int s) {
    for (int i = 0; i < n; ++i) std::swap(D.at(i, r), D.at(i, s));
  };
  auto add_row = [&](int dst, int src, const BigInt& c) {
    for (int j = 0; j < n; ++j) {
      D.at(dst, j) += c * D.at(src, j);
      U.at(dst, j) += c * U.at(src, j);
    }
  };
  auto add_col = [&](int dst, int src, const BigInt& c) {
    for (int i = 0; i < n; ++i) D.at(i, dst) += c * D.at(i, src);
  };

  for (int t = 0; t < n; ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (D.at(i, j) != 0 &&
              (pi < 0 || abs(D.at(i, j)) < abs(D.at(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return;  // remaining block is zero
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (D.at(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (D.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (D.at(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (D.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // enforce the divisibility chain
      bool divides = true;
      for (int i = t + 1; i < n && divides; ++i)
        for (int j = t + 1; j < n && divides; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            add_row(t, i, BigInt(1));
            divides = false;
          }
      if (divides) break;
    }
    if (D.at(t, t) < 0) {
      for (int j = 0; j < n; ++j) {
        D.at(t, j) = -D.at(t, j);
        U.at(t, j) = -U.at(t, j);
      }
    }
  }
}

Int mod_pos(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int mod_inverse(Int a, Int m) {
  Int t = 0, nt = 1, r = m, nr = mod_pos(a, m);
  while (nr != 0) {
    Int q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw std::logic_error("not invertible in the class group");
  return mod_pos(t, m);
}

}  // namespace

Int GammaGroup::order() const {
  Int o = 1;
  for (Int d : invariant_factors) o *= d;
  return o;
}

std::string GammaGroup::name() const {
  if (invariant_factors.empty()) return "trivial";
  std::string s;
  for (size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(invariant_factors[i]);
  }
  return s;
}

std::vector<Int> GammaGroup::project(const Weight& w) const {
  std::vector<Int> cls(invariant_factors.size());
  for (size_t k = 0; k < proj.size(); ++k) {
    Int s = 0;
    for (size_t j = 0; j < w.size(); ++j) s += proj[k][j] * w[j];
    cls[k] = mod_pos(s, invariant_factors[k]);
  }
  return cls;
}

std::vector<Int> GammaGroup::add(const std::vector<Int>& a, const std::vector<Int>& b) const {
  std::vector<Int> r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = mod_pos(a[k] + b[k], invariant_factors[k]);
  return r;
}

std::vector<Int> GammaGroup::neg(const std::vector<Int>& a) const {
  std::vector<Int> r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = mod_pos(-a[k], invariant_factors[k]);
  return r;
}

std::vector<Int> GammaGroup::reduce(const std::vector<Int>& a) const {
  if (a.size() != invariant_factors.size())
    throw std::domain_error("class has wrong number of residues");
  std::vector<Int> r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = mod_pos(a[k], invariant_factors[k]);
  return r;
}

bool GammaGroup::is_zero(const std::vector<Int>& a) const {
  for (size_t k = 0; k < a.size(); ++k)
    if (mod_pos(a[k], invariant_factors[k]) != 0) return false;
  return true;
}

GammaGroup gamma_group(const RootSystem& rs) {
  const int n = rs.rank;
  ZMat D(n), U(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) D.at(i, j) = rs.cartan[i][j];
  smith(D, U);

  GammaGroup G;
  for (int i = 0; i < n; ++i) {
    Int d = Int(D.at(i, i).get_si());
    if (d <= 1) continue;
    G.invariant_factors.push_back(d);
    IntVec row(n);
    for (int j = 0; j < n; ++j) row[j] = mod_pos(Int(mpz_class(U.at(i, j) % d).get_si()), d);
    G.proj.push_back(row);
  }

  // normalize generators to the distinguished nodes
  if (G.invariant_factors.size() == 1) {
    Int d = G.invariant_factors[0];
    Int g = G.project(rs.fundamental(rs.shaded[0]))[0];
    Int c = mod_inverse(g, d);
    for (Int& x : G.proj[0]) x = mod_pos(c * x, d);
  } else if (G.invariant_factors.size() == 2) {
    // two factors only occur as Z2 x Z2 with two distinguished nodes
    std::vector<Int> a = G.project(rs.fundamental(rs.shaded[0]));
    std::vector<Int> b = G.project(rs.fundamental(rs.shaded[1]));
    Int det = mod_pos(a[0] * b[1] - a[1] * b[0], 2);
    if (det != 1) throw std::logic_error("distinguished classes do not generate");
    // inverse of [a b] over F2 sends a -> (1,0), b -> (0,1)
    std::vector<IntVec> np(2, IntVec(n));
    for (int j = 0; j < n; ++j) {
      np[0][j] = mod_pos(b[1] * G.proj[0][j] - b[0] * G.proj[1][j], 2);
      np[1][j] = mod_pos(a[0] * G.proj[1][j] - a[1] * G.proj[0][j], 2);
    }
    G.proj = np;
  }
  return G;
}

Weight lambda_gamma(const RootSystem& rs, const GammaGroup& G, const std::vector<Int>& cls) {
  std::vector<Int> want = G.reduce(cls);
  if (G.invariant_factors.empty()) return rs.zero();
  const Int N = G.order();
  const int k = int(rs.shaded.size());

  std::optional<std::pair<std::vector<Int>, Weight>> best;  // (coeffs, weight)
  std::vector<Int> r(k, 0);
  while (true) {
    Weight w = rs.zero();
    for (int i = 0; i < k; ++i) w[rs.shaded[i]] = r[i];
    if (G.project(w) == want) {
      Int sum = 0, best_sum = 0;
      for (Int x : r) sum += x;
      if (best)
        for (Int x : best->first) best_sum += x;
      if (!best || sum < best_sum || (sum == best_sum && r < best->first))
        best = {r, w};
    }
    int i = k - 1;
    while (i >= 0 && r[i] == N - 1) r[i--] = 0;
    if (i < 0) break;
    ++r[i];
  }
  if (!best) throw std::logic_error("class not represented on distinguished nodes");
  return best->second;
}

}  // namespace blockatlas
