#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "owalk/graph.hpp"

namespace owalk {

// Monomial matrix P with P e_u = signs[u] e_{perm[u]} and P^T A P = A, i.e.
//   signs[u] * signs[v] * A(perm[u], perm[v]) == A(u, v)   for all u, v.
struct SwitchingAutomorphism {
  std::vector<Vertex> perm;
  std::vector<int> signs;
  int order = 1;

  bool is_identity() const;
  friend auto operator<=>(const SwitchingAutomorphism& x, const SwitchingAutomorphism& y) {
    if (auto c = x.perm <=> y.perm; c != 0) return c;
    return x.signs <=> y.signs;
  }
  friend bool operator==(const SwitchingAutomorphism& x, const SwitchingAutomorphism& y) {
    return x.perm == y.perm && x.signs == y.signs;
  }
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// Exact integer check of the defining identity.
bool is_switching_automorphism(const OrientedGraph& g, const std::vector<Vertex>& perm,
                               const std::vector<int>& signs);

// Builds the automorphism (computing its order) after checking the identity;
// throws std::invalid_argument if the identity fails.
SwitchingAutomorphism make_automorphism(const OrientedGraph& g, std::vector<Vertex> perm,
                                        std::vector<int> signs);

// All switching automorphisms other than the identity, sorted by
// (perm, signs) and truncated to `limit`. The identity is returned alone when
// nothing else exists (which cannot happen for n >= 1, since -I always
// qualifies). Throws Error{SearchBudgetExceeded} when the backtracking visits
// more than `node_budget` nodes.
std::vector<SwitchingAutomorphism> find_switching_automorphisms(
    const OrientedGraph& g, std::size_t limit, std::uint64_t node_budget = kDefaultSearchBudget);

// Vertex P a (signs ignored).
inline Vertex apply(const SwitchingAutomorphism& p, Vertex a) { return p.perm[a]; }

// Signed monomial matrix: entry signs[u] at (perm[u], u).
Eigen::MatrixXi matrix_of(const SwitchingAutomorphism& p);

// [a, Pa, ..., P^{k-1} a] with P^k a = a.
std::vector<Vertex> orbit(const SwitchingAutomorphism& p, Vertex a);

// s with P^k e_a = s e_{P^k a}.
int orbit_sign(const SwitchingAutomorphism& p, Vertex a, int k);

// Sign correction c with exp(i pi q_r(a, P^k a)) = c exp(i pi k q_r(a, Pa))
// for vertex quarrels; equals orbit_sign(p,a,k) * orbit_sign(p,a,1)^k.
int orbit_sign_correction(const SwitchingAutomorphism& p, Vertex a, int k);

// x after y: matrix_of(compose(x, y)) == matrix_of(x) * matrix_of(y).
SwitchingAutomorphism compose(const SwitchingAutomorphism& x, const SwitchingAutomorphism& y);

// P^k for k >= 0.
SwitchingAutomorphism power(const SwitchingAutomorphism& p, int k);

}  // namespace owalk
