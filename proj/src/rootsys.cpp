#include "blockatlas/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blockatlas {

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw std::invalid_argument("bad Lie type '" + s + "'");
  char fam = char(std::toupper(static_cast<unsigned char>(s[0])));
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad Lie type '" + s + "'");
  long rank = std::stol(s.substr(1));
  if (std::string("ABCDEFG").find(fam) == std::string::npos)
    throw std::invalid_argument("bad Lie type '" + s + "'");
  return LieType{fam, int(rank)};
}

namespace {

std::vector<IntVec> cartan_matrix(LieType t) {
  const int n = t.rank;
  auto bad = [&] { throw std::domain_error("unsupported rank for type " + t.str()); };
  std::vector<IntVec> C(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) C[i][i] = 2;
  auto link = [&](int i, int j) { C[i][j] = -1; C[j][i] = -1; };
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) link(i, i + 1);
  };
  switch (t.family) {
    case 'A':
      if (n < 1) bad();
      chain(n);
      break;
    case 'B':
      // node n is the short one
      if (n < 2) bad();
      chain(n);
      C[n - 1][n - 2] = -2;
      break;
    case 'C':
      // node n is the long one
      if (n < 2) bad();
      chain(n);
      C[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) bad();
      chain(n - 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) bad();
      chain(n - 1);
      link(n - 4, n - 1);
      break;
    case 'F':
      if (n != 4) bad();
      chain(4);
      C[1][2] = -2;  // nodes 1,2 short; 3,4 long
      break;
    case 'G':
      if (n != 2) bad();
      C[0][1] = -3;  // node 1 short
      C[1][0] = -1;
      break;
    default:
      bad();
  }
  return C;
}

IntVec symmetrizer(const std::vector<IntVec>& C) {
  // d_i C_ij = d_j C_ji with minimal positive integers; the diagram is
  // connected, so propagate ratios from node 0 and clear denominators.
  const int n = int(C.size());
  std::vector<Rat> d(n, Rat(0));
  d[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || C[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rat(C[i][j]) / Rat(C[j][i]);
      todo.push_back(j);
    }
  }
  BigInt lcm_den = 1;
  for (int i = 0; i < n; ++i) {
    if (d[i] == 0) throw std::logic_error("disconnected diagram");
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d[i].get_den().get_mpz_t());
  }
  IntVec out(n);
  BigInt g = 0;
  std::vector<BigInt> num(n);
  for (int i = 0; i < n; ++i) {
    num[i] = d[i].get_num() * (lcm_den / d[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num[i].get_mpz_t());
  }
  for (int i = 0; i < n; ++i) out[i] = Int(mpz_class(num[i] / g).get_si());
  return out;
}

std::vector<RootVec> close_positive_roots(const std::vector<IntVec>& C) {
  // Closure under root strings: beta + alpha_i is a root iff
  // q = p - beta(h_i) > 0, where p is the depth of the string below beta.
  const int n = int(C.size());
  auto pair_hi = [&](const RootVec& b, int i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += C[i][j] * b[j];
    return s;
  };
  std::set<RootVec> seen;
  std::vector<std::vector<RootVec>> by_height(1);
  for (int i = 0; i < n; ++i) {
    RootVec a(n, 0);
    a[i] = 1;
    seen.insert(a);
    by_height[0].push_back(a);
  }
  for (size_t h = 0; h < by_height.size(); ++h) {
    for (const RootVec& b : by_height[h]) {
      for (int i = 0; i < n; ++i) {
        Int p = 0;
        RootVec down = b;
        while (true) {
          down[i] -= 1;
          bool neg = false;
          for (Int x : down)
            if (x < 0) neg = true;
          if (neg || !seen.count(down)) break;
          ++p;
        }
        if (p - pair_hi(b, i) > 0) {
          RootVec up = b;
          up[i] += 1;
          if (seen.insert(up).second) {
            if (by_height.size() < h + 2) by_height.resize(h + 2);
            by_height[h + 1].push_back(up);
          }
        }
      }
    }
  }
  std::vector<RootVec> out;
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end());
    for (auto& r : level) out.push_back(r);
  }
  return out;
}

}  // namespace

RootSystem RootSystem::build(LieType t) {
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  rs.cartan = cartan_matrix(t);
  rs.sym = symmetrizer(rs.cartan);

  QMat C(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) C.at(i, j) = Rat(rs.cartan[i][j]);
  auto inv = inverse(C);
  if (!inv) throw std::logic_error("singular Cartan matrix");
  rs.cartan_inv = *inv;

  rs.pos_roots = close_positive_roots(rs.cartan);
  rs.theta = rs.pos_roots.back();
  {
    Int ht = std::accumulate(rs.theta.begin(), rs.theta.end(), Int(0));
    int at_max = 0;
    for (const RootVec& r : rs.pos_roots)
      if (std::accumulate(r.begin(), r.end(), Int(0)) == ht) ++at_max;
    if (at_max != 1) throw std::logic_error("highest root not unique");
  }
  rs.theta_w = rs.root_to_weight(rs.theta);

  const int n = rs.rank;
  switch (t.family) {
    case 'A':
      rs.shaded = {0};
      break;
    case 'B':
      rs.shaded = {n - 1};
      break;
    case 'C':
      rs.shaded = {0};
      break;
    case 'D':
      if (n % 2) rs.shaded = {n - 1};
      else rs.shaded = {n - 2, n - 1};
      break;
    default:
      rs.shaded = {0};
  }

  rs.dual_perm.resize(n);
  for (int i = 0; i < n; ++i) rs.dual_perm[i] = i;
  if (t.family == 'A')
    for (int i = 0; i < n; ++i) rs.dual_perm[i] = n - 1 - i;
  if (t.family == 'D' && n % 2) std::swap(rs.dual_perm[n - 2], rs.dual_perm[n - 1]);
  if (t.family == 'E' && n == 6) {
    std::swap(rs.dual_perm[0], rs.dual_perm[4]);
    std::swap(rs.dual_perm[1], rs.dual_perm[3]);
  }
  // -w0 must be a diagram symmetry
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.cartan[rs.dual_perm[i]][rs.dual_perm[j]] != rs.cartan[i][j])
        throw std::logic_error("dual permutation is not a diagram symmetry");
  return rs;
}

Weight RootSystem::root_to_weight(const RootVec& b) const {
  Weight w(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) w[i] += cartan[i][j] * b[j];
  return w;
}

std::vector<Rat> RootSystem::weight_to_root_coords(const Weight& w) const {
  std::vector<Rat> v(rank);
  for (int i = 0; i < rank; ++i) v[i] = Rat(w[i]);
  return cartan_inv.apply(v);
}

bool RootSystem::in_root_lattice(const Weight& w) const {
  for (const Rat& c : weight_to_root_coords(w))
    if (c.get_den() != 1) return false;
  return true;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (Int x : w)
    if (x < 0) return false;
  return true;
}

Weight RootSystem::fundamental(int i) const {
  Weight w(rank, 0);
  w[i] = 1;
  return w;
}

Int RootSystem::pairing(const RootVec& b, int i) const {
  Int s = 0;
  for (int j = 0; j < rank; ++j) s += cartan[i][j] * b[j];
  return s;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight r = w;
  Int c = w[i];
  if (c == 0) return r;
  for (int k = 0; k < rank; ++k) r[k] -= c * cartan[k][i];
  return r;
}

Weight RootSystem::to_dominant(const Weight& w) const {
  Weight x = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank; ++i)
      if (x[i] < 0) {
        x = reflect(x, i);
        moved = true;
      }
  }
  return x;
}

std::pair<Weight, int> RootSystem::to_dominant_signed(const Weight& w) const {
  Weight x = w;
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank; ++i)
      if (x[i] < 0) {
        x = reflect(x, i);
        sign = -sign;
        moved = true;
      }
  }
  for (Int c : x)
    if (c == 0) return {x, 0};
  return {x, sign};
}

Weight RootSystem::minus_w0(const Weight& w) const {
  Weight r(rank);
  for (int i = 0; i < rank; ++i) r[i] = w[dual_perm[i]];
  return r;
}

std::vector<std::pair<Weight, Int>> RootSystem::adjoint_weights() const {
  std::vector<std::pair<Weight, Int>> out;
  out.reserve(2 * pos_roots.size() + 1);
  for (const RootVec& r : pos_roots) {
    Weight w = root_to_weight(r);
    out.emplace_back(w, 1);
    out.emplace_back(vec_neg(w), 1);
  }
  out.emplace_back(zero(), Int(rank));
  return out;
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

}  // namespace blockatlas
