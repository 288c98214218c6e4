#include "qsenum/stability.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "qsenum/degree_component.hpp"
#include "qsenum/error.hpp"
#include "qsenum/pommaret.hpp"

namespace qsenum {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Exponent max_exponent(const MonomialIdeal& ideal, VarIndex j) {
  Exponent e = 0;
  for (const Term& g : ideal.generators()) e = std::max(e, g.exponent(j));
  return e;
}

void require_minimal_terms_preconditions(const MonomialIdeal& ideal, Degree s) {
  if (ideal.is_zero()) return;
  if (s < regularity(ideal)) {
    throw Error(ErrorKind::DegreeBelowRegularity,
                "degree " + std::to_string(s) + " is below the regularity");
  }
}

std::vector<Term> pick(const DegreeComponent& comp, const std::vector<std::size_t>& idx) {
  std::vector<Term> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(comp.term(i));
  return out;
}

}  // namespace

Characteristic::Characteristic(std::uint32_t p) : p_(p) {
  if (p != 0 && !is_prime(p)) {
    throw Error(ErrorKind::InvalidCharacteristic, std::to_string(p) + " is neither 0 nor prime");
  }
}

// Testing x_j^s * g / min(g) only at s = the largest x_j-exponent among the
// generators is exact: membership is monotone in s and no generator needs more.
bool is_quasi_stable(const MonomialIdeal& ideal) {
  const RingSpec& ring = ideal.ring();
  for (const Term& g : ideal.generators()) {
    if (g.is_unit()) continue;
    const VarIndex m = g.min_var();
    const Term base = exact_div(g, Term::variable(ring, m));
    for (VarIndex j = m + 1; j <= ring.n(); ++j) {
      if (!ideal.contains(base.times_var(j, max_exponent(ideal, j)))) return false;
    }
  }
  return true;
}

bool is_stable(const MonomialIdeal& ideal) {
  const RingSpec& ring = ideal.ring();
  for (const Term& g : ideal.generators()) {
    if (g.is_unit()) continue;
    const VarIndex m = g.min_var();
    const Term base = exact_div(g, Term::variable(ring, m));
    for (VarIndex j = m + 1; j <= ring.n(); ++j) {
      if (!ideal.contains(base.times_var(j))) return false;
    }
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  const RingSpec& ring = ideal.ring();
  for (const Term& g : ideal.generators()) {
    for (VarIndex i = ring.ell(); i <= ring.n(); ++i) {
      if (g.exponent(i) == 0) continue;
      for (VarIndex j = i + 1; j <= ring.n(); ++j) {
        if (!ideal.contains(increasing_move(g, i, j, 1))) return false;
      }
    }
  }
  return true;
}

bool prec_p(std::uint64_t a, std::uint64_t b, Characteristic p) {
  if (a > b) return false;
  if (p.is_zero()) return true;
  // Lucas: C(b, a) != 0 mod p iff every base-p digit of a is <= that of b.
  const std::uint64_t base = p.value();
  while (a > 0) {
    if (a % base > b % base) return false;
    a /= base;
    b /= base;
  }
  return true;
}

bool is_p_borel(const MonomialIdeal& ideal, Characteristic p) {
  const RingSpec& ring = ideal.ring();
  for (const Term& g : ideal.generators()) {
    for (VarIndex i = ring.ell(); i <= ring.n(); ++i) {
      const Exponent ai = g.exponent(i);
      if (ai == 0) continue;
      for (Exponent s = 1; s <= ai; ++s) {
        if (!prec_p(s, ai, p)) continue;
        for (VarIndex j = i + 1; j <= ring.n(); ++j) {
          if (!ideal.contains(increasing_move(g, i, j, s))) return false;
        }
      }
    }
  }
  return true;
}

bool p_smaller(const Term& a, const Term& b, Characteristic p) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::RingMismatch, "terms live in different rings");
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "<_p compares terms of equal degree only");
  }
  const RingSpec& ring = a.ring();
  std::unordered_set<Term, TermHash> seen{a};
  std::deque<Term> queue{a};
  while (!queue.empty()) {
    Term t = std::move(queue.front());
    queue.pop_front();
    if (t == b) return true;
    for (VarIndex i = ring.ell(); i <= ring.n(); ++i) {
      const Exponent ai = t.exponent(i);
      for (Exponent s = 1; s <= ai; ++s) {
        if (!prec_p(s, ai, p)) continue;
        for (VarIndex j = i + 1; j <= ring.n(); ++j) {
          Term next = increasing_move(t, i, j, s);
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
      }
    }
  }
  return false;
}

std::vector<Term> st_minimal_terms(const MonomialIdeal& ideal, Degree s) {
  require_minimal_terms_preconditions(ideal, s);
  DegreeComponent comp(ideal.ring(), s);
  return pick(comp, comp.st_minimal(comp.members(ideal)));
}

std::vector<Term> p_minimal_terms(const MonomialIdeal& ideal, Degree s, Characteristic p) {
  require_minimal_terms_preconditions(ideal, s);
  DegreeComponent comp(ideal.ring(), s, p);
  return pick(comp, comp.p_minimal(comp.members(ideal)));
}

std::vector<Term> p_minimal_st_minimal_terms(const MonomialIdeal& ideal, Degree s,
                                             Characteristic p) {
  require_minimal_terms_preconditions(ideal, s);
  DegreeComponent comp(ideal.ring(), s, p);
  return pick(comp, comp.p_minimal_st_minimal(comp.members(ideal)));
}

}  // namespace qsenum
