#include "owalk/autos.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "owalk/error.hpp"

namespace owalk {

bool SwitchingAutomorphism::is_identity() const {
  for (std::size_t u = 0; u < perm.size(); ++u) {
    if (perm[u] != static_cast<Vertex>(u) || signs[u] != 1) return false;
  }
  return true;
}

bool is_switching_automorphism(const OrientedGraph& g, const std::vector<Vertex>& perm,
                               const std::vector<int>& signs) {
  const int n = g.size();
  if (static_cast<int>(perm.size()) != n || static_cast<int>(signs.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int u = 0; u < n; ++u) {
    if (perm[u] < 0 || perm[u] >= n || hit[perm[u]]) return false;
    if (signs[u] != 1 && signs[u] != -1) return false;
    hit[perm[u]] = true;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (signs[u] * signs[v] * g(perm[u], perm[v]) != g(u, v)) return false;
    }
  }
  return true;
}

namespace {

int compute_order(const std::vector<Vertex>& perm, const std::vector<int>& signs) {
  const int n = static_cast<int>(perm.size());
  // Each vertex returns after its cycle length L with accumulated sign s;
  // the vertex contributes L if s = +1 and 2L otherwise.
  int order = 1;
  std::vector<bool> done(n, false);
  for (int start = 0; start < n; ++start) {
    if (done[start]) continue;
    int length = 0;
    int sign = 1;
    Vertex v = start;
    do {
      done[v] = true;
      sign *= signs[v];
      v = perm[v];
      ++length;
    } while (v != start);
    order = std::lcm(order, sign == 1 ? length : 2 * length);
  }
  return order;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const OrientedGraph& g, std::uint64_t budget)
      : g_(g), n_(g.size()), budget_(budget), perm_(n_, -1), signs_(n_, 0), used_(n_, false) {
    // Breadth-first assignment order so that signs propagate from already
    // placed neighbours.
    std::vector<bool> seen(n_, false);
    for (int root = 0; root < n_; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::queue<Vertex> frontier;
      frontier.push(root);
      while (!frontier.empty()) {
        const Vertex u = frontier.front();
        frontier.pop();
        order_.push_back(u);
        for (Vertex v = 0; v < n_; ++v) {
          if (!seen[v] && g_(u, v) != 0) {
            seen[v] = true;
            frontier.push(v);
          }
        }
      }
    }
    for (int u = 0; u < n_; ++u) degree_.push_back(g_.degree(u));
  }

  std::vector<std::pair<std::vector<Vertex>, std::vector<int>>> run() {
    if (n_ > 0) extend(0);
    return std::move(found_);
  }

 private:
  void extend(std::size_t depth) {
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "switching automorphism search exceeded " + std::to_string(budget_) + " nodes");
    }
    if (depth == order_.size()) {
      found_.emplace_back(perm_, signs_);
      return;
    }
    const Vertex u = order_[depth];
    for (Vertex w = 0; w < n_; ++w) {
      if (used_[w] || degree_[w] != degree_[u]) continue;
      for (int sign : candidate_signs(u, w, depth)) {
        if (!consistent(u, w, sign, depth)) continue;
        perm_[u] = w;
        signs_[u] = sign;
        used_[w] = true;
        extend(depth + 1);
        used_[w] = false;
        perm_[u] = -1;
        signs_[u] = 0;
      }
    }
  }

  // A placed neighbour forces the sign; otherwise both are possible, except
  // for the very first vertex, whose sign is fixed to quotient out -I.
  std::vector<int> candidate_signs(Vertex u, Vertex w, std::size_t depth) const {
    if (depth == 0) return {1};
    for (std::size_t k = 0; k < depth; ++k) {
      const Vertex v = order_[k];
      if (g_(u, v) == 0) continue;
      const int image = g_(w, perm_[v]);
      if (image == 0) return {};
      return {g_(u, v) * signs_[v] * image};  // entries are +-1
    }
    return {-1, 1};
  }

  bool consistent(Vertex u, Vertex w, int sign, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const Vertex v = order_[k];
      if (sign * signs_[v] * g_(w, perm_[v]) != g_(u, v)) return false;
    }
    return true;
  }

  const OrientedGraph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<int> degree_;
  std::vector<Vertex> perm_;
  std::vector<int> signs_;
  std::vector<bool> used_;
  std::vector<std::pair<std::vector<Vertex>, std::vector<int>>> found_;
};

}  // namespace

SwitchingAutomorphism make_automorphism(const OrientedGraph& g, std::vector<Vertex> perm,
                                        std::vector<int> signs) {
  if (!is_switching_automorphism(g, perm, signs)) {
    throw std::invalid_argument("not a switching automorphism of the graph");
  }
  const int order = compute_order(perm, signs);
  return SwitchingAutomorphism{std::move(perm), std::move(signs), order};
}

std::vector<SwitchingAutomorphism> find_switching_automorphisms(const OrientedGraph& g,
                                                                std::size_t limit,
                                                                std::uint64_t node_budget) {
  AutomorphismSearch search(g, node_budget);
  std::vector<SwitchingAutomorphism> all;
  for (auto& [perm, signs] : search.run()) {
    std::vector<int> negated(signs.size());
    std::transform(signs.begin(), signs.end(), negated.begin(), [](int s) { return -s; });
    all.push_back(make_automorphism(g, perm, std::move(negated)));
    all.push_back(make_automorphism(g, std::move(perm), std::move(signs)));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() > 1) {
    std::erase_if(all, [](const SwitchingAutomorphism& p) { return p.is_identity(); });
  }
  if (all.size() > limit) all.resize(limit);
  return all;
}

Eigen::MatrixXi matrix_of(const SwitchingAutomorphism& p) {
  const auto n = static_cast<Eigen::Index>(p.perm.size());
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u) m(p.perm[u], u) = p.signs[u];
  return m;
}

std::vector<Vertex> orbit(const SwitchingAutomorphism& p, Vertex a) {
  std::vector<Vertex> result{a};
  for (Vertex v = p.perm[a]; v != a; v = p.perm[v]) result.push_back(v);
  return result;
}

int orbit_sign(const SwitchingAutomorphism& p, Vertex a, int k) {
  int sign = 1;
  Vertex v = a;
  for (int step = 0; step < k; ++step) {
    sign *= p.signs[v];
    v = p.perm[v];
  }
  return sign;
}

int orbit_sign_correction(const SwitchingAutomorphism& p, Vertex a, int k) {
  const int first = orbit_sign(p, a, 1);
  const int first_power = (k % 2 == 0) ? 1 : first;
  return orbit_sign(p, a, k) * first_power;
}

SwitchingAutomorphism compose(const SwitchingAutomorphism& x, const SwitchingAutomorphism& y) {
  const std::size_t n = x.perm.size();
  std::vector<Vertex> perm(n);
  std::vector<int> signs(n);
  for (std::size_t u = 0; u < n; ++u) {
    perm[u] = x.perm[y.perm[u]];
    signs[u] = y.signs[u] * x.signs[y.perm[u]];
  }
  const int order = compute_order(perm, signs);
  return SwitchingAutomorphism{std::move(perm), std::move(signs), order};
}

SwitchingAutomorphism power(const SwitchingAutomorphism& p, int k) {
  const std::size_t n = p.perm.size();
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  SwitchingAutomorphism result{std::move(identity), std::vector<int>(n, 1), 1};
  for (int step = 0; step < k; ++step) result = compose(p, result);
  return result;
}

}  // namespace owalk
