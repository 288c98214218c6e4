#include "qsenum/term.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qsenum/error.hpp"

namespace qsenum {

namespace {

void require_same_ring(const Term& a, const Term& b) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::RingMismatch, "terms live in different rings");
}

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw Error(ErrorKind::Overflow, "exponent overflow");
  }
  return a + b;
}

}  // namespace

RingSpec::RingSpec(VarIndex ell, VarIndex n) : ell_(ell), n_(n) {
  if (ell < 0 || ell > n) {
    throw Error(ErrorKind::InvalidRing,
                "need 0 <= ell <= n, got ell=" + std::to_string(ell) + " n=" + std::to_string(n));
  }
}

Term::Term(RingSpec ring, std::vector<Exponent> exponents)
    : ring_(ring), exps_(std::move(exponents)) {
  if (exps_.size() != ring_.num_vars()) {
    throw Error(ErrorKind::InvalidRing, "exponent vector length " + std::to_string(exps_.size()) +
                                            " does not match " + std::to_string(ring_.num_vars()) +
                                            " variables");
  }
}

Term Term::unit(RingSpec ring) { return Term(ring, std::vector<Exponent>(ring.num_vars(), 0)); }

Term Term::variable(RingSpec ring, VarIndex i, Exponent e) {
  if (!ring.has_var(i)) throw Error(ErrorKind::InvalidVariable, "x" + std::to_string(i));
  std::vector<Exponent> exps(ring.num_vars(), 0);
  exps[static_cast<std::size_t>(i - ring.ell())] = e;
  return Term(ring, std::move(exps));
}

Exponent Term::exponent(VarIndex i) const {
  if (!ring_.has_var(i)) throw Error(ErrorKind::InvalidVariable, "x" + std::to_string(i));
  return exps_[static_cast<std::size_t>(i - ring_.ell())];
}

Degree Term::degree() const {
  Degree d = 0;
  for (Exponent e : exps_) d = checked_add(d, e);
  return d;
}

bool Term::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

VarIndex Term::min_var() const {
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > 0) return ring_.ell() + static_cast<VarIndex>(k);
  }
  throw Error(ErrorKind::MinOfUnit, "min of the unit term is undefined");
}

VarIndex Term::max_var() const {
  for (std::size_t k = exps_.size(); k-- > 0;) {
    if (exps_[k] > 0) return ring_.ell() + static_cast<VarIndex>(k);
  }
  throw Error(ErrorKind::MaxOfUnit, "max of the unit term is undefined");
}

Term Term::strip(VarIndex i) const {
  if (!ring_.has_var(i)) throw Error(ErrorKind::InvalidVariable, "x" + std::to_string(i));
  Term out = *this;
  out.exps_[static_cast<std::size_t>(i - ring_.ell())] = 0;
  return out;
}

Term Term::times_var(VarIndex i, Exponent e) const {
  if (!ring_.has_var(i)) throw Error(ErrorKind::InvalidVariable, "x" + std::to_string(i));
  Term out = *this;
  auto& slot = out.exps_[static_cast<std::size_t>(i - ring_.ell())];
  slot = checked_add(slot, e);
  return out;
}

Term Term::extended(VarIndex new_ell) const {
  RingSpec target(new_ell, ring_.n());
  if (new_ell > ring_.ell()) {
    throw Error(ErrorKind::InvalidRing, "extension must not drop variables");
  }
  std::vector<Exponent> exps(target.num_vars(), 0);
  std::copy(exps_.begin(), exps_.end(),
            exps.begin() + static_cast<std::ptrdiff_t>(ring_.ell() - new_ell));
  return Term(target, std::move(exps));
}

bool divides(const Term& a, const Term& b) {
  require_same_ring(a, b);
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    if (ea[k] > eb[k]) return false;
  }
  return true;
}

Term exact_div(const Term& b, const Term& a) {
  if (!divides(a, b)) throw Error(ErrorKind::NonDivisible, "divisor does not divide dividend");
  std::vector<Exponent> exps(b.exponents().begin(), b.exponents().end());
  auto ea = a.exponents();
  for (std::size_t k = 0; k < exps.size(); ++k) exps[k] -= ea[k];
  return Term(b.ring(), std::move(exps));
}

Term mul(const Term& a, const Term& b) {
  require_same_ring(a, b);
  std::vector<Exponent> exps(a.exponents().begin(), a.exponents().end());
  auto eb = b.exponents();
  for (std::size_t k = 0; k < exps.size(); ++k) exps[k] = checked_add(exps[k], eb[k]);
  return Term(a.ring(), std::move(exps));
}

Term increasing_move(const Term& t, VarIndex i, VarIndex j, Exponent s) {
  const RingSpec& ring = t.ring();
  if (!ring.has_var(i) || !ring.has_var(j) || i >= j || s == 0 || s > t.exponent(i)) {
    throw Error(ErrorKind::MoveOutOfRange, "e+(" + std::to_string(s) + ")_{" + std::to_string(i) +
                                               "," + std::to_string(j) + "} is not applicable");
  }
  std::vector<Exponent> exps(t.exponents().begin(), t.exponents().end());
  exps[static_cast<std::size_t>(i - ring.ell())] -= s;
  auto& target = exps[static_cast<std::size_t>(j - ring.ell())];
  target = checked_add(target, s);
  return Term(ring, std::move(exps));
}

std::strong_ordering canonical_cmp(const Term& a, const Term& b) {
  require_same_ring(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t k = ea.size(); k-- > 0;) {
    if (ea[k] != eb[k]) return eb[k] <=> ea[k];
  }
  return std::strong_ordering::equal;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.ring().ell()) * 1000003u;
  for (Exponent e : t.exponents()) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), CanonicalLess{});
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
}

std::size_t count_terms(std::size_t k, Degree d) {
  if (k == 0) return d == 0 ? 1 : 0;
  // C(d + k - 1, k - 1), built incrementally so every prefix is an integer.
  std::size_t result = 1;
  for (std::size_t i = 1; i < k; ++i) {
    std::size_t num = static_cast<std::size_t>(d) + i;
    if (result > std::numeric_limits<std::size_t>::max() / num) {
      return std::numeric_limits<std::size_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

std::vector<Term> terms_of_degree(RingSpec ring, Degree d) {
  std::vector<Term> out;
  const std::size_t k = ring.num_vars();
  std::vector<Exponent> exps(k, 0);
  // Distribute d over positions k-1 ... 0, highest variable first; this visits
  // terms directly in canonical order.
  auto rec = [&](auto&& self, std::size_t pos, Degree left) -> void {
    if (pos == 0) {
      exps[0] = left;
      out.emplace_back(ring, exps);
      return;
    }
    for (Degree e = left + 1; e-- > 0;) {
      exps[pos] = e;
      self(self, pos - 1, left - e);
    }
    exps[pos] = 0;
  };
  rec(rec, k - 1, d);
  return out;
}

}  // namespace qsenum
