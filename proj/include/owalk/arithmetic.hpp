#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "owalk/graph.hpp"

namespace owalk {

using BigInt = boost::multiprecision::cpp_int;

// Integer polynomial, coefficients lowest degree first. The zero polynomial
// has no coefficients.
struct IntPolynomial {
  std::vector<BigInt> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  BigInt evaluate(const BigInt& x) const;
  std::string to_string(char variable = 'x') const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

// det(xI - A) by Faddeev-LeVerrier in exact integer arithmetic.
IntPolynomial char_poly(const OrientedGraph& g);

// For the characteristic polynomial p(x) of a skew-symmetric matrix, the
// polynomial q(c) with p(x) = x^{n mod 2} q(-x^2); its roots are the values
// |theta|^2 of the eigenvalues theta = i*y.
IntPolynomial squared_norm_polynomial(const IntPolynomial& char_poly);

// Product of the primes dividing m to odd multiplicity. m >= 1.
std::uint64_t square_free_part(std::uint64_t m);

inline constexpr double kDefaultIntegerTolerance = 1e-6;

// Recognition of a set of squared eigenvalue moduli as {b^2 * Delta}.
struct QuadraticProfile {
  std::uint64_t delta = 1;
  std::vector<std::uint64_t> norms;         // distinct c = b^2 Delta, increasing
  std::vector<std::uint64_t> coefficients;  // b, aligned with norms

  // b for a squared modulus close to norms[k]; nullopt if absent.
  std::optional<std::uint64_t> coefficient_for(double squared_modulus, double tol) const;
};

// Input: |theta_r|^2 for nonzero eigenvalues (duplicates allowed). Returns
// nullopt unless every value rounds to a positive integer within tol and all
// share one square-free part. Each recognized integer is checked to be an
// exact root of squared_norm_polynomial(char_poly); throws
// Error{InconsistentExactCheck} otherwise.
std::optional<QuadraticProfile> quadratic_integer_profile(std::span<const double> squared_moduli,
                                                          const IntPolynomial& char_poly,
                                                          double tol = kDefaultIntegerTolerance);

}  // namespace owalk
