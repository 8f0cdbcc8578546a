#include "owalk/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "owalk/error.hpp"

namespace owalk {

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt value = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * x + *it;
  return value;
}

std::string IntPolynomial::to_string(char variable) const {
  if (coefficients.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coefficients[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (magnitude != 1 || k == 0) out << magnitude;
    if (k >= 1) out << variable;
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

IntPolynomial char_poly(const OrientedGraph& g) {
  // Faddeev-LeVerrier: M_0 = 0, c_n = 1,
  //   M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  // The division is exact over the integers.
  const int n = g.size();
  using Matrix = std::vector<std::vector<BigInt>>;
  Matrix a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = g(i, j);

  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  Matrix m(n, std::vector<BigInt>(n));
  Matrix am(n, std::vector<BigInt>(n));
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I (with M_0 = 0 this is I for k = 1)
    Matrix next(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l) {
          if (a[i][l] != 0) s += a[i][l] * m[l][j];
        }
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) {
        if (a[i][l] != 0) trace += a[i][l] * m[l][i];
      }
    }
    c[n - k] = -trace / k;
  }
  return IntPolynomial{std::move(c)};
}

IntPolynomial squared_norm_polynomial(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 0) return {};
  // p(x) = sum_j a_{par+2j} x^{par+2j}; with x^2 = -c, x^{2j} = (-c)^j.
  const int parity = n % 2;
  std::vector<BigInt> q;
  for (int k = parity; k <= n; k += 2) {
    const int j = (k - parity) / 2;
    BigInt coefficient = p.coefficients[static_cast<std::size_t>(k)];
    if (j % 2 == 1) coefficient = -coefficient;
    q.push_back(coefficient);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return IntPolynomial{std::move(q)};
}

std::uint64_t square_free_part(std::uint64_t m) {
  std::uint64_t result = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int multiplicity = 0;
    while (m % p == 0) {
      m /= p;
      ++multiplicity;
    }
    if (multiplicity % 2 == 1) result *= p;
  }
  return result * m;
}

std::optional<std::uint64_t> QuadraticProfile::coefficient_for(double squared_modulus,
                                                               double tol) const {
  for (std::size_t k = 0; k < norms.size(); ++k) {
    if (std::abs(squared_modulus - static_cast<double>(norms[k])) <= tol) return coefficients[k];
  }
  return std::nullopt;
}

namespace {

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

std::optional<QuadraticProfile> quadratic_integer_profile(std::span<const double> squared_moduli,
                                                          const IntPolynomial& char_poly,
                                                          double tol) {
  std::vector<std::uint64_t> norms;
  for (double value : squared_moduli) {
    const double nearest = std::round(value);
    if (!(std::abs(value - nearest) <= tol) || nearest < 1.0) return std::nullopt;
    norms.push_back(static_cast<std::uint64_t>(nearest));
  }
  if (norms.empty()) return std::nullopt;
  std::sort(norms.begin(), norms.end());
  norms.erase(std::unique(norms.begin(), norms.end()), norms.end());

  const IntPolynomial q = squared_norm_polynomial(char_poly);
  for (std::uint64_t c : norms) {
    if (q.evaluate(BigInt(c)) != 0) {
      throw Error(ErrorKind::InconsistentExactCheck,
                  std::to_string(c) + " was recognized numerically but is not a root of " +
                      q.to_string('c'));
    }
  }

  QuadraticProfile profile;
  profile.delta = square_free_part(norms.front());
  for (std::uint64_t c : norms) {
    if (square_free_part(c) != profile.delta) return std::nullopt;
    const std::uint64_t b = isqrt(c / profile.delta);
    profile.norms.push_back(c);
    profile.coefficients.push_back(b);
  }
  return profile;
}

}  // namespace owalk
