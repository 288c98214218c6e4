#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "qsenum/ideal.hpp"
#include "qsenum/text.hpp"

namespace qsenum::testing {

inline Term T(RingSpec ring, const std::string& text) { return parse_term(text, ring); }
inline MonomialIdeal I(RingSpec ring, const std::string& text) { return parse_ideal(text, ring); }

inline std::vector<Term> terms(RingSpec ring, std::initializer_list<const char*> texts) {
  std::vector<Term> out;
  for (const char* t : texts) out.push_back(T(ring, t));
  return out;
}

inline std::vector<Term> sorted(std::vector<Term> v) {
  canonicalize(v);
  return v;
}

/// Random monomial ideal with up to `gens` generators of degree <= max_deg.
inline MonomialIdeal random_ideal(std::mt19937& rng, RingSpec ring, int gens, Exponent max_exp) {
  std::uniform_int_distribution<int> count(1, gens);
  std::uniform_int_distribution<Exponent> exp(0, max_exp);
  std::vector<Term> out;
  const int k = count(rng);
  for (int g = 0; g < k; ++g) {
    std::vector<Exponent> e(ring.num_vars());
    for (auto& x : e) x = exp(rng);
    out.emplace_back(ring, std::move(e));
  }
  return MonomialIdeal::minimalize(ring, std::move(out));
}

/// Brute-force membership equality of two ideals up to a degree.
inline bool same_up_to(const MonomialIdeal& a, const MonomialIdeal& b, Degree bound) {
  for (Degree d = 0; d <= bound; ++d) {
    for (const Term& t : terms_of_degree(a.ring(), d)) {
      if (a.contains(t) != b.contains(t)) return false;
    }
  }
  return true;
}

}  // namespace qsenum::testing
