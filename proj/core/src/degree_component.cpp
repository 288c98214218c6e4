#include "qsenum/degree_component.hpp"

#include <bit>

#include "qsenum/error.hpp"

namespace qsenum {

bool TermSet::intersects(const TermSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

std::size_t TermSet::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void TermSet::merge(const TermSet& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
}

DegreeComponent::DegreeComponent(RingSpec ring, Degree s, std::optional<Characteristic> p)
    : ring_(ring), s_(s), p_(p), terms_(terms_of_degree(ring, s)) {
  const std::size_t count = terms_.size();
  if (count > (std::size_t{1} << 26)) {
    throw Error(ErrorKind::TooLarge, "degree component has too many terms");
  }
  index_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) index_.emplace(terms_[i], i);

  const VarIndex ell = ring.ell();
  min_is_ell_.assign(count, false);
  st_preds_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Term& t = terms_[i];
    if (t.exponent(ell) == 0) continue;
    min_is_ell_[i] = true;
    // x_j * b / x_ell = t with min(b) = x_ell forces b = t * x_ell / x_j.
    for (VarIndex j = ell + 1; j <= ring.n(); ++j) {
      if (t.exponent(j) == 0) continue;
      Term b = exact_div(t.times_var(ell), Term::variable(ring, j));
      st_preds_[i].push_back(static_cast<std::uint32_t>(index_.at(b)));
    }
  }

  if (!p_) return;
  // Inverse moves send exponent from x_j down to x_i, which makes a term
  // canonically larger, so a reverse sweep sees every predecessor first.
  below_.assign(count, TermSet(count));
  for (std::size_t idx = count; idx-- > 0;) {
    const Term& t = terms_[idx];
    TermSet acc(count);
    for (VarIndex i = ell; i <= ring.n(); ++i) {
      for (VarIndex j = i + 1; j <= ring.n(); ++j) {
        const Exponent aj = t.exponent(j);
        for (Exponent step = 1; step <= aj; ++step) {
          const Exponent gi = t.exponent(i) + step;
          if (!prec_p(step, gi, *p_)) continue;
          std::vector<Exponent> exps(t.exponents().begin(), t.exponents().end());
          exps[static_cast<std::size_t>(i - ell)] = gi;
          exps[static_cast<std::size_t>(j - ell)] = aj - step;
          const std::size_t pred = index_.at(Term(ring, std::move(exps)));
          acc.insert(pred);
          acc.merge(below_[pred]);
        }
      }
    }
    below_[idx] = std::move(acc);
  }
}

std::optional<std::size_t> DegreeComponent::index_of(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TermSet DegreeComponent::members(const MonomialIdeal& ideal) const {
  if (ideal.ring() != ring_) throw Error(ErrorKind::RingMismatch, "ideal outside the component's ring");
  TermSet set(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (ideal.contains(terms_[i])) set.insert(i);
  }
  return set;
}

std::vector<Term> DegreeComponent::to_terms(const TermSet& set) const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (set.contains(i)) out.push_back(terms_[i]);
  }
  return out;
}

std::vector<std::size_t> DegreeComponent::st_minimal(const TermSet& set) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!min_is_ell_[i] || !set.contains(i)) continue;
    bool reached = false;
    for (std::uint32_t b : st_preds_[i]) {
      if (set.contains(b)) {
        reached = true;
        break;
      }
    }
    if (!reached) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> DegreeComponent::p_minimal(const TermSet& set) const {
  if (!p_) throw Error(ErrorKind::InvalidCharacteristic, "component built without a characteristic");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (set.contains(i) && !below_[i].intersects(set)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> DegreeComponent::p_minimal_st_minimal(const TermSet& set) const {
  if (!p_) throw Error(ErrorKind::InvalidCharacteristic, "component built without a characteristic");
  std::vector<std::size_t> out;
  for (std::size_t i : st_minimal(set)) {
    if (!below_[i].intersects(set)) out.push_back(i);
  }
  return out;
}

}  // namespace qsenum
