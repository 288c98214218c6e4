#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qsenum/hilbert.hpp"
#include "qsenum/ideal.hpp"
#include "qsenum/pommaret.hpp"
#include "qsenum/stability.hpp"

namespace qsenum {

struct EnumerationOptions {
  unsigned threads = 1;
};

struct EnumeratedIdeal {
  MonomialIdeal ideal;
  PommaretBasis pommaret_basis;
  Degree regularity = 0;
};

/// Saturated ideals with a common Hilbert polynomial, canonically sorted and
/// duplicate-free. `characteristic` is set for Borel-fixed enumerations.
struct EnumerationResult {
  RingSpec ring;
  HilbertPolynomial hilbert_polynomial;
  std::size_t gotzmann_number = 0;
  Degree s = 0;
  std::optional<Characteristic> characteristic;
  std::vector<EnumeratedIdeal> ideals;

  std::vector<MonomialIdeal> ideal_list() const;
};

/// Every saturated ideal reachable by deleting q St-minimal terms with minimal
/// variable x_ell from I_s (one at a time, the component staying stable) and
/// saturating. Needs quasi-stable I and s >= reg(I).
std::vector<MonomialIdeal> remove(const MonomialIdeal& ideal, Degree s, std::size_t q,
                                  const EnumerationOptions& options = {});

/// As remove, but only terms that are also p-minimal may be deleted, so a
/// p-Borel input yields p-Borel outputs.
std::vector<MonomialIdeal> p_remove(Characteristic p, const MonomialIdeal& ideal, Degree s,
                                    std::size_t q, const EnumerationOptions& options = {});

/// All saturated quasi-stable ideals of k[x_ell..x_n] with Hilbert polynomial P.
/// s defaults to the Gotzmann number of P and may not be smaller.
EnumerationResult quasi_stable_enum(VarIndex ell, VarIndex n, const HilbertPolynomial& p,
                                    std::optional<Degree> s = std::nullopt,
                                    const EnumerationOptions& options = {});

/// All saturated p-Borel ideals of k[x_ell..x_n] with Hilbert polynomial P.
EnumerationResult borel_enum(VarIndex ell, VarIndex n, const HilbertPolynomial& p,
                             std::optional<Degree> s, Characteristic characteristic,
                             const EnumerationOptions& options = {});

/// The p-Borel members of a quasi-stable enumeration.
EnumerationResult cross_filter_borel(const EnumerationResult& result, Characteristic p);

}  // namespace qsenum
