#pragma once

#include <cstdint>
#include <vector>

#include "qsenum/ideal.hpp"
#include "qsenum/term.hpp"

namespace qsenum {

/// Characteristic of the coefficient field: 0 or a prime.
class Characteristic {
 public:
  explicit Characteristic(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }
  bool is_zero() const noexcept { return p_ == 0; }

  friend bool operator==(const Characteristic&, const Characteristic&) = default;

 private:
  std::uint32_t p_;
};

bool is_quasi_stable(const MonomialIdeal& ideal);
bool is_stable(const MonomialIdeal& ideal);
bool is_strongly_stable(const MonomialIdeal& ideal);

/// a ≺_p b: C(b, a) != 0 mod p (digitwise in base p), or a <= b when p = 0.
bool prec_p(std::uint64_t a, std::uint64_t b, Characteristic p);

/// Borel-fixed in characteristic p: every p-admissible increasing move applied
/// to a minimal generator stays inside the ideal.
bool is_p_borel(const MonomialIdeal& ideal, Characteristic p);

/// a <=_p b: b is reachable from a through a chain of p-admissible increasing moves.
bool p_smaller(const Term& a, const Term& b, Characteristic p);

/// Terms of J_s with minimal variable x_ell that are not x_j * t / min(t) for any
/// t in J_s and x_j > min(t). Requires s >= reg(J).
std::vector<Term> st_minimal_terms(const MonomialIdeal& ideal, Degree s);

/// Every term of J_s with no other term of J_s strictly below it in <_p.
std::vector<Term> p_minimal_terms(const MonomialIdeal& ideal, Degree s, Characteristic p);

/// Intersection of st_minimal_terms and p_minimal_terms; these are the terms
/// whose removal keeps a p-Borel degree component p-Borel.
std::vector<Term> p_minimal_st_minimal_terms(const MonomialIdeal& ideal, Degree s,
                                             Characteristic p);

}  // namespace qsenum
