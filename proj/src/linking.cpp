#include "blockatlas/linking.hpp"

#include <optional>
#include <stdexcept>

#include "blockatlas/oracle.hpp"

namespace blockatlas {

namespace {

Weight unit(int n, int i) {
  Weight e(n, 0);
  e[i] = 1;
  return e;
}

enum class SpinVariant { low, high };  // which spin node receives the dump in D_even

/// One core-reduction move for the current weight, or nullopt when the
/// weight is already in core form. All node indices are zero-based; the
/// move is returned as a coordinate increment.
std::optional<Weight> core_move(const RootSystem& rs, const Weight& w, SpinVariant var) {
  const int n = rs.rank;
  auto e = [&](int i) { return unit(n, i); };

  switch (rs.type.family) {
    case 'A':
    case 'C': {
      for (int k = n - 1; k >= 1; --k)
        if (w[k] > 0) {
          Weight d = vec_sub(vec_add(e(0), e(k - 1)), e(k));
          return d;
        }
      return std::nullopt;
    }
    case 'B': {
      for (int k = 0; k < n - 1; ++k)
        if (w[k] > 0) {
          if (k <= n - 4) return vec_sub(e(k + 2), e(k));
          if (k == n - 3) return vec_sub(vec_scale(2, e(n - 1)), e(n - 3));
          return vec_sub(vec_scale(2, e(n - 1)), e(n - 2));
        }
      return std::nullopt;
    }
    case 'D': {
      if (n % 2 == 0) {
        for (int k = 0; k < n - 2; ++k)
          if (w[k] > 0) {
            if (k <= n - 5) return vec_sub(e(k + 2), e(k));
            if (k == n - 4) return vec_sub(vec_add(e(n - 2), e(n - 1)), e(n - 4));
            int spin = var == SpinVariant::low ? n - 2 : n - 1;
            return vec_sub(vec_scale(2, e(spin)), e(n - 3));
          }
        return std::nullopt;
      }
      // odd rank: drain the odd positions (including the other spin node),
      // then the even positions into the last node
      for (int k = 1; k <= n - 2; k += 2)
        if (w[k] > 0) {
          if (k <= n - 6) return vec_sub(e(k + 2), e(k));
          if (k == n - 4) return vec_sub(vec_add(e(n - 2), e(n - 1)), e(n - 4));
          // k == n - 2, the spin node away from the accumulator
          return vec_sub(vec_add(e(0), e(n - 1)), e(n - 2));
        }
      for (int k = 0; k < n - 1; k += 2)
        if (w[k] > 0) {
          if (k < n - 3) return vec_sub(e(k + 2), e(k));
          return vec_sub(vec_scale(2, e(n - 1)), e(n - 3));
        }
      return std::nullopt;
    }
    case 'E':
    case 'F':
    case 'G': {
      // drain schedules: (node, increment) applied while the node is loaded;
      // later entries are never undone by earlier ones
      std::vector<std::pair<int, Weight>> plan;
      if (rs.type.family == 'E' && n == 6)
        plan = {{5, vec_sub(vec_add(e(0), e(4)), e(5))},
                {2, vec_sub(vec_add(e(0), e(1)), e(2))},
                {3, vec_sub(vec_scale(2, e(4)), e(3))},
                {4, vec_sub(e(1), e(4))},
                {1, vec_sub(vec_scale(2, e(0)), e(1))}};
      else if (rs.type.family == 'E' && n == 7)
        plan = {{6, vec_sub(vec_add(e(0), e(5)), e(6))},
                {3, vec_sub(vec_add(e(0), e(2)), e(3))},
                {4, vec_sub(vec_scale(2, e(5)), e(4))},
                {5, vec_sub(e(1), e(5))},
                {2, vec_sub(vec_add(e(0), e(1)), e(2))},
                {1, vec_sub(vec_scale(2, e(0)), e(1))}};
      else if (rs.type.family == 'E')
        plan = {{7, vec_sub(vec_add(e(0), e(6)), e(7))},
                {4, vec_sub(vec_add(e(0), e(3)), e(4))},
                {5, vec_sub(vec_scale(2, e(6)), e(5))},
                {6, vec_sub(e(1), e(6))},
                {3, vec_sub(vec_add(e(0), e(2)), e(3))},
                {2, vec_sub(vec_add(e(0), e(1)), e(2))},
                {1, vec_sub(vec_scale(2, e(0)), e(1))}};
      else if (rs.type.family == 'F')
        plan = {{1, vec_sub(vec_scale(2, e(0)), e(1))},
                {2, vec_sub(vec_scale(2, e(3)), e(2))},
                {3, vec_sub(vec_scale(2, e(0)), e(3))}};
      else
        plan = {{1, vec_sub(vec_scale(3, e(0)), e(1))}};
      for (auto& [node, d] : plan)
        if (w[node] > 0) return d;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

void reduce_to_core(const RootSystem& rs, std::vector<Weight>& chain, SpinVariant var) {
  while (auto d = core_move(rs, chain.back(), var))
    chain.push_back(vec_add(chain.back(), *d));
}

/// Append the reversal of the certified ascent start -> start+theta -> core,
/// which must land exactly on the current chain end.
void descend_segment(const RootSystem& rs, std::vector<Weight>& chain, const Weight& start,
                     SpinVariant var) {
  std::vector<Weight> seg{start, vec_add(start, rs.theta_w)};
  reduce_to_core(rs, seg, var);
  if (seg.back() != chain.back()) throw std::logic_error("descent segment mismatch");
  for (size_t i = seg.size() - 1; i-- > 0;) chain.push_back(seg[i]);
}

}  // namespace

std::vector<Weight> chain_to_representative(const RootSystem& rs, const GammaGroup& G,
                                            const Weight& mu) {
  if (int(mu.size()) != rs.rank) throw std::domain_error("weight has wrong rank");
  if (!rs.is_dominant(mu)) throw std::domain_error("weight must be dominant");
  const int n = rs.rank;

  std::vector<Weight> chain{mu};
  reduce_to_core(rs, chain, SpinVariant::low);

  switch (rs.type.family) {
    case 'A': {
      const Int mod = n + 1;
      while (chain.back()[0] >= mod)
        descend_segment(rs, chain, vec_sub(chain.back(), vec_scale(mod, unit(n, 0))),
                        SpinVariant::low);
      break;
    }
    case 'B':
      while (chain.back()[n - 1] >= 2)
        descend_segment(rs, chain, vec_sub(chain.back(), vec_scale(2, unit(n, n - 1))),
                        SpinVariant::low);
      break;
    case 'C':
    case 'E': {
      Int mod = 2;  // C_n and E7
      if (rs.type.family == 'E' && n == 6) mod = 3;
      if (rs.type.family == 'E' && n == 8) mod = 1;
      while (chain.back()[0] >= mod)
        descend_segment(rs, chain, vec_sub(chain.back(), vec_scale(mod, unit(n, 0))),
                        SpinVariant::low);
      break;
    }
    case 'D':
      if (n % 2 == 0) {
        while (chain.back()[n - 2] >= 2)
          descend_segment(rs, chain, vec_sub(chain.back(), vec_scale(2, unit(n, n - 2))),
                          SpinVariant::low);
        while (chain.back()[n - 1] >= 2)
          descend_segment(rs, chain, vec_sub(chain.back(), vec_scale(2, unit(n, n - 1))),
                          SpinVariant::high);
      } else {
        while (chain.back()[n - 1] >= 4)
          descend_segment(rs, chain, vec_sub(chain.back(), vec_scale(4, unit(n, n - 1))),
                          SpinVariant::low);
      }
      break;
    case 'F': {
      // four certified hops lower the first coordinate by one
      while (chain.back()[0] > 0) {
        Int r = chain.back()[0];
        Weight a = rs.zero(), b = rs.zero(), c = rs.zero(), d = rs.zero();
        a[0] = r - 1, a[1] = 1;
        b[0] = r + 1;
        c[0] = r - 1, c[3] = 1;
        d[0] = r - 1;
        chain.push_back(a);
        chain.push_back(b);
        chain.push_back(c);
        chain.push_back(d);
      }
      break;
    }
    case 'G':
      // the unit ladder may not take its last step: g (x) V(0) has no V(e0)
      // summand, so the descent stops at 2 e0 and exits through the adjoint
      while (chain.back()[0] > 2) chain.push_back(vec_sub(chain.back(), unit(n, 0)));
      if (chain.back()[0] == 1) chain.push_back(vec_scale(2, unit(n, 0)));
      if (chain.back()[0] == 2) {
        chain.push_back(unit(n, 1));
        chain.push_back(rs.zero());
      }
      break;
  }

  Weight target = lambda_gamma(rs, G, G.project(mu));
  if (chain.back() != target) throw std::logic_error("chain endpoint is not the representative");
  for (const Weight& w : chain)
    if (!rs.is_dominant(w)) throw std::logic_error("chain left the dominant cone");
  return chain;
}

std::vector<Weight> chain_between(const RootSystem& rs, const GammaGroup& G, const Weight& mu,
                                  const Weight& nu) {
  for (const Weight* w : {&mu, &nu}) {
    if (int(w->size()) != rs.rank) throw std::domain_error("weight has wrong rank");
    if (!rs.is_dominant(*w)) throw std::domain_error("weight must be dominant");
  }
  if (G.project(mu) != G.project(nu))
    throw std::domain_error("weights are not in the same Q-coset");
  if (mu == nu) return {mu};
  std::vector<Weight> down = chain_to_representative(rs, G, mu);
  std::vector<Weight> up = chain_to_representative(rs, G, nu);
  for (size_t i = up.size() - 1; i-- > 0;) down.push_back(up[i]);
  return down;
}

bool verify_chain(const RootSystem& rs, const std::vector<Weight>& chain) {
  if (chain.empty()) return false;
  for (const Weight& w : chain)
    if (int(w.size()) != rs.rank || !rs.is_dominant(w)) return false;
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!hom_nonzero(rs, chain[i], chain[i + 1])) return false;
  return true;
}

std::vector<Weight> simplify_chain(const RootSystem& rs, const std::vector<Weight>& chain) {
  // splice out exact loops first; afterwards all entries are distinct
  std::vector<Weight> out;
  size_t i = 0;
  while (i < chain.size()) {
    size_t last = i;
    for (size_t j = i + 1; j < chain.size(); ++j)
      if (chain[j] == chain[i]) last = j;
    out.push_back(chain[i]);
    i = last + 1;
  }

  // drop interior weights whose neighbours are already linked
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (size_t l = 1; l + 1 < out.size(); ++l)
      if (hom_nonzero(rs, out[l - 1], out[l + 1])) {
        out.erase(out.begin() + l);
        shrunk = true;
        break;
      }
  }
  return out;
}

}  // namespace blockatlas
