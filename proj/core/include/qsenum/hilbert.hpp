#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qsenum/ideal.hpp"
#include "qsenum/term.hpp"

namespace qsenum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial in z with exact rational coefficients, ascending
/// powers, no trailing zeros (the zero polynomial has no coefficients).
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<Rational> coefficients);

  static HilbertPolynomial constant(Rational c);
  static HilbertPolynomial z();
  /// C(z + shift, k) = (z + shift)(z + shift - 1)...(z + shift - k + 1) / k!
  static HilbertPolynomial binomial(std::int64_t shift, std::uint32_t k);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational value_at(const Rational& z) const;

  HilbertPolynomial& operator+=(const HilbertPolynomial& o);
  HilbertPolynomial& operator-=(const HilbertPolynomial& o);
  friend HilbertPolynomial operator+(HilbertPolynomial a, const HilbertPolynomial& b) { return a += b; }
  friend HilbertPolynomial operator-(HilbertPolynomial a, const HilbertPolynomial& b) { return a -= b; }
  friend HilbertPolynomial operator*(const HilbertPolynomial& a, const HilbertPolynomial& b);
  HilbertPolynomial operator-() const;

  /// P(z + shift)
  HilbertPolynomial shifted(std::int64_t shift) const;

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Descending powers, e.g. "6*z-3", "1/2*z^2+3/2*z+1", "0".
std::string to_string(const HilbertPolynomial& p);

/// a_1 >= a_2 >= ... >= a_r with P(z) = sum_i C(z + a_i - (i - 1), a_i).
struct GotzmannDecomposition {
  std::vector<std::uint32_t> a;
  std::size_t r() const noexcept { return a.size(); }
};

/// Exact P(t); throws NonIntegerValue if P(t) is not an integer.
BigInt evaluate(const HilbertPolynomial& p, std::int64_t t);

/// P(z) - P(z - 1)
HilbertPolynomial delta(const HilbertPolynomial& p);

/// Greedy peeling of binomials; throws NotAdmissible if P is not a Hilbert polynomial.
GotzmannDecomposition gotzmann_decompose(const HilbertPolynomial& p);
HilbertPolynomial reconstruct(const GotzmannDecomposition& d);
std::size_t gotzmann_number(const HilbertPolynomial& p);

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// dim_k J_s by counting the Pommaret cones; needs quasi-stable J and s >= reg(J).
BigInt ideal_degree_dim(const MonomialIdeal& ideal, Degree s);

/// dim_k (S/J)_t; cone counting at and above the regularity, term enumeration below it.
BigInt hilbert_function(const MonomialIdeal& ideal, Degree t);

/// Hilbert polynomial of S/J for quasi-stable J.
HilbertPolynomial hilbert_polynomial(const MonomialIdeal& ideal);

/// Hilbert polynomial of the whole ring k[x_ell, ..., x_n].
HilbertPolynomial ambient_hilbert_polynomial(RingSpec ring);

}  // namespace qsenum
