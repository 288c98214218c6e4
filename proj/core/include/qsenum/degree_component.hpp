#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "qsenum/ideal.hpp"
#include "qsenum/stability.hpp"
#include "qsenum/term.hpp"

namespace qsenum {

/// Fixed-width bitset over the terms of one degree component.
class TermSet {
 public:
  TermSet() = default;
  explicit TermSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  bool contains(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool intersects(const TermSet& other) const noexcept;
  std::size_t count() const noexcept;
  void merge(const TermSet& other) noexcept;

  friend auto operator<=>(const TermSet&, const TermSet&) = default;
  friend bool operator==(const TermSet&, const TermSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// Index over all terms of degree s in a ring, with the neighbour tables the
/// removal recursion needs: the St-predecessors of every term with minimal
/// variable x_ell and, for a chosen characteristic, the full set of terms
/// strictly below each term in <_p.
class DegreeComponent {
 public:
  DegreeComponent(RingSpec ring, Degree s, std::optional<Characteristic> p = std::nullopt);

  const RingSpec& ring() const noexcept { return ring_; }
  Degree degree() const noexcept { return s_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& term(std::size_t i) const { return terms_[i]; }
  std::optional<std::size_t> index_of(const Term& t) const;

  TermSet empty_set() const { return TermSet(terms_.size()); }
  /// J_s as a set; J must live in this ring.
  TermSet members(const MonomialIdeal& ideal) const;
  std::vector<Term> to_terms(const TermSet& set) const;

  /// Members with minimal variable x_ell that no x_j * t / min(t), t in the set, reaches.
  std::vector<std::size_t> st_minimal(const TermSet& set) const;
  /// Members with no other member below them in <_p. Needs a characteristic.
  std::vector<std::size_t> p_minimal(const TermSet& set) const;
  std::vector<std::size_t> p_minimal_st_minimal(const TermSet& set) const;

  bool has_characteristic() const noexcept { return p_.has_value(); }

 private:
  RingSpec ring_;
  Degree s_;
  std::optional<Characteristic> p_;
  std::vector<Term> terms_;
  std::unordered_map<Term, std::size_t, TermHash> index_;
  std::vector<bool> min_is_ell_;
  std::vector<std::vector<std::uint32_t>> st_preds_;
  std::vector<TermSet> below_;
};

}  // namespace qsenum
