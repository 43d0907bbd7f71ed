#include "blockatlas/oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace blockatlas {

namespace {

/// (w, beta) for w in weight coordinates and beta in root coordinates;
/// integral because (omega_i, alpha_j) = delta_ij d_j.
Int ip_root(const RootSystem& rs, const Weight& w, const RootVec& b) {
  Int s = 0;
  for (int j = 0; j < rs.rank; ++j) s += w[j] * b[j] * rs.sym[j];
  return s;
}

Weight rho(const RootSystem& rs) { return Weight(rs.rank, 1); }

void check_dominant(const RootSystem& rs, const Weight& w, const char* what) {
  if (int(w.size()) != rs.rank) throw std::domain_error(std::string(what) + ": wrong rank");
  if (!rs.is_dominant(w)) throw std::domain_error(std::string(what) + ": not dominant");
}

}  // namespace

BigInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
  check_dominant(rs, lambda, "weyl_dim");
  Weight lr = vec_add(lambda, rho(rs));
  BigInt num = 1, den = 1;
  for (const RootVec& a : rs.pos_roots) {
    num *= ip_root(rs, lr, a);
    den *= ip_root(rs, rho(rs), a);
  }
  return num / den;
}

std::map<Weight, BigInt> dominant_weight_system(const RootSystem& rs, const Weight& lambda) {
  check_dominant(rs, lambda, "weight_system");
  const int n = rs.rank;

  // Dominant x is a weight of V(lambda) iff lambda - x is a nonnegative
  // integral combination of simple roots. Both x and lambda have nonnegative
  // root coordinates, so the combination is bounded by lambda's.
  std::vector<Int> bound(n);
  {
    auto rc = rs.weight_to_root_coords(lambda);
    for (int i = 0; i < n; ++i) {
      BigInt fl;
      mpz_fdiv_q(fl.get_mpz_t(), rc[i].get_num().get_mpz_t(), rc[i].get_den().get_mpz_t());
      bound[i] = Int(fl.get_si());
    }
  }

  struct Entry {
    Weight x;
    RootVec c;  // lambda - x in root coordinates
    Int depth;
  };
  std::vector<Entry> dominants;
  RootVec c(n, 0);
  while (true) {
    Weight x = lambda;
    Int depth = 0;
    for (int i = 0; i < n; ++i) {
      depth += c[i];
      for (int k = 0; k < n; ++k) x[k] -= c[i] * rs.cartan[k][i];
    }
    if (rs.is_dominant(x)) dominants.push_back({x, c, depth});
    int i = n - 1;
    while (i >= 0 && c[i] == bound[i]) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  std::sort(dominants.begin(), dominants.end(),
            [](const Entry& a, const Entry& b) { return a.depth < b.depth; });

  std::map<Weight, BigInt> mult;
  Weight lr = vec_add(lambda, rho(rs));
  for (const Entry& e : dominants) {
    if (e.depth == 0) {
      mult[e.x] = 1;
      continue;
    }
    // Freudenthal: ((l+r,l+r)-(x+r,x+r)) m(x) = 2 sum_{a>0,k>=1} (x+ka,a) m(x+ka),
    // and (l+r,l+r)-(x+r,x+r) = (l+x+2r, l-x) is integral since l-x is in
    // the root lattice.
    BigInt rhs = 0;
    for (const RootVec& a : rs.pos_roots) {
      Weight aw = rs.root_to_weight(a);
      Weight y = e.x;
      for (Int k = 1;; ++k) {
        y = vec_add(y, aw);
        auto it = mult.find(rs.to_dominant(y));
        if (it == mult.end()) break;  // weight strings are unbroken
        rhs += BigInt(ip_root(rs, y, a)) * it->second;
      }
    }
    Weight s = vec_add(vec_add(lambda, e.x), vec_scale(2, rho(rs)));
    Int denom = 0;
    for (int i = 0; i < n; ++i) denom += s[i] * e.c[i] * rs.sym[i];
    mult[e.x] = 2 * rhs / denom;
  }
  return mult;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  std::set<Weight> seen;
  std::queue<Weight> q;
  Weight d = rs.to_dominant(w);
  seen.insert(d);
  q.push(d);
  while (!q.empty()) {
    Weight x = q.front();
    q.pop();
    for (int i = 0; i < rs.rank; ++i) {
      Weight y = rs.reflect(x, i);
      if (seen.insert(y).second) q.push(y);
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

std::map<Weight, BigInt> weight_system(const RootSystem& rs, const Weight& lambda) {
  std::map<Weight, BigInt> out;
  for (const auto& [x, m] : dominant_weight_system(rs, lambda))
    for (const Weight& y : weyl_orbit(rs, x)) out[y] = m;
  return out;
}

BigInt weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  auto dom = dominant_weight_system(rs, lambda);
  auto it = dom.find(rs.to_dominant(mu));
  return it == dom.end() ? BigInt(0) : it->second;
}

namespace {

/// Racah-Speiser: push every weight of V(lambda) through mu + rho and fold
/// into the dominant chamber with signs.
std::map<Weight, BigInt> tensor_from_weights(const RootSystem& rs,
                                             const std::vector<std::pair<Weight, BigInt>>& wts,
                                             const Weight& mu) {
  std::map<Weight, BigInt> out;
  Weight mr = vec_add(mu, rho(rs));
  for (const auto& [w, m] : wts) {
    auto [d, sign] = rs.to_dominant_signed(vec_add(w, mr));
    if (sign == 0) continue;
    Weight nu = vec_sub(d, rho(rs));
    out[nu] += sign > 0 ? m : -m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

}  // namespace

std::map<Weight, BigInt> tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                          const Weight& mu) {
  check_dominant(rs, lambda, "tensor_decompose");
  check_dominant(rs, mu, "tensor_decompose");
  std::vector<std::pair<Weight, BigInt>> wts;
  for (const auto& [w, m] : weight_system(rs, lambda)) wts.emplace_back(w, m);
  return tensor_from_weights(rs, wts, mu);
}

BigInt tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                           const Weight& nu) {
  check_dominant(rs, nu, "tensor_multiplicity");
  auto dec = tensor_decompose(rs, lambda, mu);
  auto it = dec.find(nu);
  return it == dec.end() ? BigInt(0) : it->second;
}

bool hom_nonzero(const RootSystem& rs, const Weight& mu, const Weight& nu) {
  check_dominant(rs, mu, "hom_nonzero");
  check_dominant(rs, nu, "hom_nonzero");
  if (!rs.in_root_lattice(vec_sub(nu, mu))) return false;
  Weight target = vec_add(nu, rho(rs));
  Weight mr = vec_add(mu, rho(rs));
  BigInt acc = 0;
  for (const auto& [w, m] : rs.adjoint_weights()) {
    auto [d, sign] = rs.to_dominant_signed(vec_add(w, mr));
    if (sign != 0 && d == target) acc += sign > 0 ? m : -m;
  }
  return acc > 0;
}

}  // namespace blockatlas
