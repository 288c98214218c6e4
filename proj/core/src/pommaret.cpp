#include "qsenum/pommaret.hpp"

#include <algorithm>
#include <string>

#include "qsenum/error.hpp"
#include "qsenum/stability.hpp"

namespace qsenum {

Degree PommaretBasis::max_degree() const {
  Degree d = 0;
  for (const Term& t : terms) d = std::max(d, t.degree());
  return d;
}

bool in_cone(const Term& candidate, const Term& apex) {
  if (!divides(apex, candidate)) return false;
  if (apex.is_unit()) return true;
  const Term cofactor = exact_div(candidate, apex);
  return cofactor.is_unit() || cofactor.max_var() <= apex.min_var();
}

bool span_contains(std::span<const Term> generators, const Term& t) {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Term& g) { return in_cone(t, g); });
}

PommaretBasis completion(const MonomialIdeal& ideal) {
  const RingSpec& ring = ideal.ring();
  if (!is_quasi_stable(ideal)) {
    throw Error(ErrorKind::NotQuasiStable, "ideal has no finite Pommaret basis");
  }
  std::vector<Term> basis = ideal.generators();
  if (ideal.is_unit() || ideal.is_zero()) return PommaretBasis{ring, basis};

  for (;;) {
    std::vector<Term> obstructions;
    for (const Term& a : basis) {
      for (VarIndex j = a.min_var() + 1; j <= ring.n(); ++j) {
        Term cand = a.times_var(j);
        if (!span_contains(basis, cand)) obstructions.push_back(std::move(cand));
      }
    }
    if (obstructions.empty()) break;
    // The canonically smallest obstruction has minimal degree, so nothing else
    // in the list divides it.
    basis.push_back(*std::min_element(obstructions.begin(), obstructions.end(), CanonicalLess{}));
  }

  // Weak basis -> basis. A term inside another's cone has its whole cone inside
  // that cone, so dropping it keeps the span.
  canonicalize(basis);
  std::vector<bool> dropped(basis.size(), false);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a != b && !dropped[b] && in_cone(basis[a], basis[b])) {
        dropped[a] = true;
        break;
      }
    }
  }
  std::vector<Term> kept;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (!dropped[a]) kept.push_back(basis[a]);
  }
  return PommaretBasis{ring, std::move(kept)};
}

Degree regularity(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorKind::ZeroIdeal, "regularity of the zero ideal");
  return completion(ideal).max_degree();
}

std::vector<Term> class_partition(const PommaretBasis& basis, VarIndex j) {
  std::vector<Term> out;
  for (const Term& t : basis.terms) {
    if (!t.is_unit() && t.min_var() == j) out.push_back(t);
  }
  return out;
}

std::vector<Term> stripped_class(const PommaretBasis& basis, VarIndex j) {
  std::vector<Term> out = class_partition(basis, j);
  for (Term& t : out) t = t.strip(j);
  canonicalize(out);
  return out;
}

MonomialIdeal var_saturation(const MonomialIdeal& ideal, VarIndex j) {
  const RingSpec& ring = ideal.ring();
  if (!ring.has_var(j)) throw Error(ErrorKind::InvalidVariable, "x" + std::to_string(j));
  const PommaretBasis basis = completion(ideal);
  if (ideal.is_unit() || ideal.is_zero()) return ideal;
  std::vector<Term> gens = stripped_class(basis, j);
  for (VarIndex i = j + 1; i <= ring.n(); ++i) {
    for (Term& t : class_partition(basis, i)) gens.push_back(std::move(t));
  }
  return MonomialIdeal::minimalize(ring, std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& ideal) {
  return var_saturation(ideal, ideal.ring().ell());
}

MonomialIdeal x1_saturation(const MonomialIdeal& ideal) {
  const RingSpec& ring = ideal.ring();
  if (ring.ell() == ring.n()) {
    throw Error(ErrorKind::InvalidVariable, "x_{ell+1} does not exist in a one-variable ring");
  }
  return colon_var_infinity(colon_var_infinity(ideal, ring.ell()), ring.ell() + 1);
}

PommaretBasis stable_degree_basis(const MonomialIdeal& ideal, Degree s) {
  if (!ideal.is_zero() && s < regularity(ideal)) {
    throw Error(ErrorKind::DegreeBelowRegularity,
                "degree " + std::to_string(s) + " is below the regularity");
  }
  return PommaretBasis{ideal.ring(), truncation_degree_component(ideal, s)};
}

}  // namespace qsenum
