#pragma once

#include <compare>
#include <span>
#include <vector>

#include "qsenum/term.hpp"

namespace qsenum {

/// A monomial ideal, held as its minimal monomial basis in canonical order.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  static MonomialIdeal minimalize(RingSpec ring, std::vector<Term> terms);
  static MonomialIdeal zero(RingSpec ring) { return MonomialIdeal(ring, {}); }
  static MonomialIdeal unit(RingSpec ring) { return MonomialIdeal(ring, {Term::unit(ring)}); }

  const RingSpec& ring() const noexcept { return ring_; }
  const std::vector<Term>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }
  Degree max_generator_degree() const;

  bool contains(const Term& t) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(RingSpec ring, std::vector<Term> gens) : ring_(ring), gens_(std::move(gens)) {}

  RingSpec ring_;
  std::vector<Term> gens_;
};

/// Total order used for deterministic output: generator lists compared
/// lexicographically by canonical_cmp (shorter prefix first).
std::strong_ordering canonical_cmp(const MonomialIdeal& a, const MonomialIdeal& b);

struct IdealLess {
  bool operator()(const MonomialIdeal& a, const MonomialIdeal& b) const {
    return canonical_cmp(a, b) < 0;
  }
};

/// (J : x_i^infinity)
MonomialIdeal colon_var_infinity(const MonomialIdeal& ideal, VarIndex i);

/// (J : (x_n, ..., x_j)^infinity) for any monomial ideal.
MonomialIdeal colon_varset_infinity(const MonomialIdeal& ideal, VarIndex j);

/// (J : (x_ell, ..., x_n)^infinity) through colon_varset_infinity; no quasi-stability needed.
MonomialIdeal saturation_naive(const MonomialIdeal& ideal);

/// J_s intersected with the terms, canonically sorted. Enumerates the whole degree component.
std::vector<Term> truncation_degree_component(const MonomialIdeal& ideal, Degree s);

/// J * k[x_new_ell, ..., x_n].
MonomialIdeal extend_ring(const MonomialIdeal& ideal, VarIndex new_ell);

}  // namespace qsenum
