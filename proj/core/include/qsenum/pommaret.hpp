#pragma once

#include <span>
#include <vector>

#include "qsenum/ideal.hpp"
#include "qsenum/term.hpp"

namespace qsenum {

/// Finite set of terms whose Pommaret cones disjointly cover the ideal they generate.
struct PommaretBasis {
  RingSpec ring;
  std::vector<Term> terms;  // canonical order

  Degree max_degree() const;
  friend bool operator==(const PommaretBasis&, const PommaretBasis&) = default;
};

/// candidate in C_P(apex): apex divides it and the cofactor only uses variables
/// <= min(apex). The cone of 1 is taken to be every term.
bool in_cone(const Term& candidate, const Term& apex);

bool span_contains(std::span<const Term> generators, const Term& t);

/// Pommaret basis of a quasi-stable ideal: obstruction completion followed by
/// dropping every element that lies in another element's cone.
/// Throws NotQuasiStable otherwise, since no finite basis exists then.
PommaretBasis completion(const MonomialIdeal& ideal);

/// Castelnuovo-Mumford regularity: top degree of the Pommaret basis.
Degree regularity(const MonomialIdeal& ideal);

/// Basis terms with min_var == j.
std::vector<Term> class_partition(const PommaretBasis& basis, VarIndex j);
/// class_partition with each term divided by its full x_j power.
std::vector<Term> stripped_class(const PommaretBasis& basis, VarIndex j);

/// (J : (x_n, ..., x_j)^infinity) read off the Pommaret basis.
MonomialIdeal var_saturation(const MonomialIdeal& ideal, VarIndex j);
MonomialIdeal saturate(const MonomialIdeal& ideal);

/// ((J : x_ell^infinity) : x_{ell+1}^infinity)
MonomialIdeal x1_saturation(const MonomialIdeal& ideal);

/// J_s as a Pommaret basis of J_{>=s}; needs s >= reg(J).
PommaretBasis stable_degree_basis(const MonomialIdeal& ideal, Degree s);

}  // namespace qsenum
