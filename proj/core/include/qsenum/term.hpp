#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qsenum {

using Exponent = std::uint32_t;
using Degree = std::uint32_t;
using VarIndex = int;

/// The polynomial ring k[x_ell, ..., x_n] with variables ordered x_ell < ... < x_n.
class RingSpec {
 public:
  RingSpec(VarIndex ell, VarIndex n);

  VarIndex ell() const noexcept { return ell_; }
  VarIndex n() const noexcept { return n_; }
  std::size_t num_vars() const noexcept { return static_cast<std::size_t>(n_ - ell_ + 1); }
  bool has_var(VarIndex i) const noexcept { return ell_ <= i && i <= n_; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  VarIndex ell_;
  VarIndex n_;
};

/// A power product x_ell^a_ell * ... * x_n^a_n. Immutable value type.
class Term {
 public:
  Term(RingSpec ring, std::vector<Exponent> exponents);

  static Term unit(RingSpec ring);
  static Term variable(RingSpec ring, VarIndex i, Exponent e = 1);

  const RingSpec& ring() const noexcept { return ring_; }

  // Exponent of x_i, addressed by variable index (not storage position).
  Exponent exponent(VarIndex i) const;
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  Degree degree() const;
  bool is_unit() const noexcept;

  VarIndex min_var() const;
  VarIndex max_var() const;

  // x^a / x_i^{a_i}
  Term strip(VarIndex i) const;
  Term times_var(VarIndex i, Exponent e = 1) const;
  // Reinterprets the term in k[x_new_ell, ..., x_n] (new_ell <= ell).
  Term extended(VarIndex new_ell) const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  RingSpec ring_;
  std::vector<Exponent> exps_;
};

bool divides(const Term& a, const Term& b);
Term exact_div(const Term& b, const Term& a);
Term mul(const Term& a, const Term& b);
inline Term operator*(const Term& a, const Term& b) { return mul(a, b); }

/// The s-th increasing move e_{i,j}^{+(s)}: moves s units of exponent from x_i to x_j, i < j.
Term increasing_move(const Term& t, VarIndex i, VarIndex j, Exponent s);

/// Degree ascending, then lexicographic from x_n down to x_ell with the larger
/// exponent first (so x_2^2 precedes x_1*x_2).
std::strong_ordering canonical_cmp(const Term& a, const Term& b);

struct CanonicalLess {
  bool operator()(const Term& a, const Term& b) const { return canonical_cmp(a, b) < 0; }
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

/// Sorts by canonical_cmp and drops duplicates.
void canonicalize(std::vector<Term>& terms);

/// Number of terms of degree d in k variables, saturating at SIZE_MAX.
std::size_t count_terms(std::size_t k, Degree d);

/// All terms of degree d, canonically sorted.
std::vector<Term> terms_of_degree(RingSpec ring, Degree d);

}  // namespace qsenum
