#pragma once

// Brute-force reference implementations. Everything here is deliberately
// naive and only reuses the Term type; membership, saturation, counting and
// the stability checks are written again from the definitions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsenum/hilbert.hpp"
#include "qsenum/term.hpp"

namespace qsenum::oracle {

using Generators = std::vector<Term>;

struct StableSet {
  RingSpec ring;
  Degree degree;
  std::vector<Term> terms;  // canonical order
};

/// Largest degree component the exhaustive searches accept.
inline constexpr std::size_t kMaxComponent = 200;

bool naive_contains(const Generators& gens, const Term& t);
Generators naive_minimalize(Generators terms);

/// dim_k (S/J)_t by checking every term of degree t.
std::uint64_t naive_hilbert_function(RingSpec ring, const Generators& gens, Degree t);

/// J^sat from the definition: f is in J^sat iff f * x_i^c is in J for every i.
/// Candidates are the terms below the coordinatewise maximum of the generators.
Generators naive_saturation(RingSpec ring, const Generators& gens);

/// For every generator and i < j, some x_j^s * g / x_i^{g_i} lies in J.
bool naive_is_quasi_stable(RingSpec ring, const Generators& gens);

/// Increasing moves with C(g_i, s) != 0 mod p, binomials computed outright.
bool naive_is_p_borel(RingSpec ring, const Generators& gens, std::uint32_t p);

/// Every term of J_d lies in exactly one Pommaret cone of `basis`.
bool naive_cones_partition(RingSpec ring, const Generators& gens, const Generators& basis,
                           Degree d);

/// All subsets of the degree-r terms of the given size that are closed under
/// t -> x_j * t / min(t) for x_j > min(t).
std::vector<StableSet> enumerate_stable_sets(RingSpec ring, Degree r, std::size_t size);

/// Every saturated quasi-stable ideal with Hilbert polynomial P, found by
/// saturating each stable set of the right size in degree r. r must be at
/// least the Gotzmann number of P. Result sorted, generators canonical.
std::vector<Generators> brute_force_saturated_quasi_stable(RingSpec ring,
                                                           const HilbertPolynomial& p, Degree r);

/// Independent re-check of one enumerated ideal: saturated, quasi-stable,
/// Hilbert function equal to P at degrees r .. r + n - ell + 1 and, when a
/// characteristic is given, p-Borel. Returns the failed checks.
std::vector<std::string> verify_ideal(RingSpec ring, const Generators& gens,
                                      const HilbertPolynomial& p, Degree r,
                                      std::optional<std::uint32_t> characteristic);

}  // namespace qsenum::oracle
