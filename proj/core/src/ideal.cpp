#include "qsenum/ideal.hpp"

#include <algorithm>
#include <string>

#include "qsenum/error.hpp"

namespace qsenum {

MonomialIdeal MonomialIdeal::minimalize(RingSpec ring, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.ring() != ring) throw Error(ErrorKind::RingMismatch, "generator outside the ring");
  }
  canonicalize(terms);
  // Canonical order is degree-ascending, so a divisor always precedes its multiples.
  std::vector<Term> kept;
  for (Term& t : terms) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Term& g) { return divides(g, t); });
    if (!redundant) kept.push_back(std::move(t));
  }
  return MonomialIdeal(ring, std::move(kept));
}

Degree MonomialIdeal::max_generator_degree() const {
  Degree d = 0;
  for (const Term& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Term& t) const {
  if (t.ring() != ring_) throw Error(ErrorKind::RingMismatch, "term outside the ideal's ring");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Term& g) { return divides(g, t); });
}

std::strong_ordering canonical_cmp(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (auto c = a.ring().ell() <=> b.ring().ell(); c != 0) return c;
  if (auto c = a.ring().n() <=> b.ring().n(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.generators().begin(), a.generators().end(), b.generators().begin(), b.generators().end(),
      [](const Term& x, const Term& y) { return canonical_cmp(x, y); });
}

namespace {

Term lcm(const Term& a, const Term& b) {
  std::vector<Exponent> exps(a.exponents().begin(), a.exponents().end());
  auto eb = b.exponents();
  for (std::size_t k = 0; k < exps.size(); ++k) exps[k] = std::max(exps[k], eb[k]);
  return Term(a.ring(), std::move(exps));
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Term> lcms;
  lcms.reserve(a.generators().size() * b.generators().size());
  for (const Term& g : a.generators()) {
    for (const Term& h : b.generators()) lcms.push_back(lcm(g, h));
  }
  return MonomialIdeal::minimalize(a.ring(), std::move(lcms));
}

}  // namespace

MonomialIdeal colon_var_infinity(const MonomialIdeal& ideal, VarIndex i) {
  if (!ideal.ring().has_var(i)) throw Error(ErrorKind::InvalidVariable, "x" + std::to_string(i));
  std::vector<Term> stripped;
  stripped.reserve(ideal.generators().size());
  for (const Term& g : ideal.generators()) stripped.push_back(g.strip(i));
  return MonomialIdeal::minimalize(ideal.ring(), std::move(stripped));
}

// f * (x_j..x_n)^k lies in J for some k iff f * x_i^c lies in J for every i and
// some c (pigeonhole on the exponents), so the colon is an intersection of
// single-variable colons.
MonomialIdeal colon_varset_infinity(const MonomialIdeal& ideal, VarIndex j) {
  const RingSpec& ring = ideal.ring();
  if (!ring.has_var(j)) throw Error(ErrorKind::InvalidVariable, "x" + std::to_string(j));
  MonomialIdeal current = colon_var_infinity(ideal, ring.n());
  for (VarIndex v = ring.n() - 1; v >= j; --v) {
    current = intersection(current, colon_var_infinity(ideal, v));
  }
  return current;
}

MonomialIdeal saturation_naive(const MonomialIdeal& ideal) {
  return colon_varset_infinity(ideal, ideal.ring().ell());
}

std::vector<Term> truncation_degree_component(const MonomialIdeal& ideal, Degree s) {
  std::vector<Term> out;
  if (ideal.is_zero()) return out;
  for (Term& t : terms_of_degree(ideal.ring(), s)) {
    if (ideal.contains(t)) out.push_back(std::move(t));
  }
  return out;
}

MonomialIdeal extend_ring(const MonomialIdeal& ideal, VarIndex new_ell) {
  if (new_ell >= ideal.ring().ell()) {
    throw Error(ErrorKind::InvalidRing, "extension needs new_ell < ell");
  }
  RingSpec target(new_ell, ideal.ring().n());
  std::vector<Term> gens;
  gens.reserve(ideal.generators().size());
  for (const Term& g : ideal.generators()) gens.push_back(g.extended(new_ell));
  return MonomialIdeal::minimalize(target, std::move(gens));
}

}  // namespace qsenum
