#include "qsenum/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "qsenum/degree_component.hpp"
#include "qsenum/error.hpp"

namespace qsenum {

namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(threads == 0 ? 1 : threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

enum class Branching { StMinimal, PMinimal };

// Deleting candidate terms one at a time. The recursion only ever depends on
// the current term set, so each depth is kept as a deduplicated frontier.
std::vector<TermSet> removal_frontier(const DegreeComponent& comp, TermSet start, std::size_t q,
                                      Branching branching, unsigned threads) {
  std::vector<TermSet> frontier{std::move(start)};
  for (std::size_t depth = 0; depth < q && !frontier.empty(); ++depth) {
    std::vector<std::vector<TermSet>> children(frontier.size());
    parallel_for(frontier.size(), threads, [&](std::size_t k) {
      const TermSet& state = frontier[k];
      const auto candidates = branching == Branching::StMinimal ? comp.st_minimal(state)
                                                                : comp.p_minimal_st_minimal(state);
      for (std::size_t idx : candidates) {
        TermSet child = state;
        child.erase(idx);
        children[k].push_back(std::move(child));
      }
    });
    std::vector<TermSet> next;
    for (auto& group : children) {
      for (auto& c : group) next.push_back(std::move(c));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return frontier;
}

// A stable set of degree-s terms is the Pommaret basis of the ideal it
// generates, so saturating only strips the x_ell powers.
MonomialIdeal saturate_component(const DegreeComponent& comp, const TermSet& set) {
  const VarIndex ell = comp.ring().ell();
  std::vector<Term> gens;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (set.contains(i)) gens.push_back(comp.term(i).strip(ell));
  }
  return MonomialIdeal::minimalize(comp.ring(), std::move(gens));
}

std::vector<MonomialIdeal> saturate_all(const DegreeComponent& comp,
                                        const std::vector<TermSet>& states) {
  std::vector<MonomialIdeal> out;
  out.reserve(states.size());
  for (const TermSet& st : states) out.push_back(saturate_component(comp, st));
  std::sort(out.begin(), out.end(), IdealLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MonomialIdeal> remove_impl(const MonomialIdeal& ideal, Degree s, std::size_t q,
                                       std::optional<Characteristic> p,
                                       const EnumerationOptions& options) {
  if (ideal.is_zero()) throw Error(ErrorKind::ZeroIdeal, "removal from the zero ideal");
  if (s < regularity(ideal)) {
    throw Error(ErrorKind::DegreeBelowRegularity,
                "s = " + std::to_string(s) + " is below reg(I)");
  }
  if (q == 0) return {saturate(ideal)};
  DegreeComponent comp(ideal.ring(), s, p);
  auto states = removal_frontier(comp, comp.members(ideal), q,
                                 p ? Branching::PMinimal : Branching::StMinimal, options.threads);
  return saturate_all(comp, states);
}

// Shared recursion of the quasi-stable and Borel enumerations.
std::vector<MonomialIdeal> enumerate(VarIndex ell, VarIndex n, const HilbertPolynomial& p, Degree s,
                                     std::optional<Characteristic> characteristic,
                                     const EnumerationOptions& options) {
  const RingSpec ring(ell, n);
  if (p.is_zero()) return {MonomialIdeal::unit(ring)};
  if (ell == n) return {};

  const std::vector<MonomialIdeal> sections =
      enumerate(ell + 1, n, delta(p), s, characteristic, options);
  if (sections.empty()) return {};

  const DegreeComponent comp(ring, s, characteristic);
  const BigInt target = evaluate(p, s);
  const auto ambient = static_cast<long long>(comp.size());
  const Branching branching = characteristic ? Branching::PMinimal : Branching::StMinimal;

  std::vector<std::vector<MonomialIdeal>> found(sections.size());
  for (std::size_t k = 0; k < sections.size(); ++k) {
    const MonomialIdeal lifted = extend_ring(sections[k], ell);
    TermSet start = comp.members(lifted);
    // Terms to delete: P(s) minus the current codimension of I_s.
    const BigInt q = target - ambient + static_cast<long long>(start.count());
    if (q < 0) continue;
    auto states = removal_frontier(comp, std::move(start), q.convert_to<std::size_t>(), branching,
                                   options.threads);
    found[k] = saturate_all(comp, states);
  }

  std::vector<MonomialIdeal> out;
  for (auto& group : found) {
    for (auto& j : group) out.push_back(std::move(j));
  }
  std::sort(out.begin(), out.end(), IdealLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EnumerationResult run_enumeration(VarIndex ell, VarIndex n, const HilbertPolynomial& p,
                                  std::optional<Degree> s,
                                  std::optional<Characteristic> characteristic,
                                  const EnumerationOptions& options) {
  const RingSpec ring(ell, n);
  if (!p.is_zero() && p.degree() >= n - ell) {
    throw Error(ErrorKind::DegreeTooHigh,
                to_string(p) + " has degree " + std::to_string(p.degree()) +
                    "; saturated non-zero ideals of a ring with " +
                    std::to_string(ring.num_vars()) + " variables need degree < " +
                    std::to_string(n - ell));
  }
  const std::size_t r = gotzmann_number(p);
  const Degree budget = s.value_or(static_cast<Degree>(r));
  if (budget < r) {
    throw Error(ErrorKind::BudgetBelowGotzmann, "s = " + std::to_string(budget) +
                                                    " is below the Gotzmann number " +
                                                    std::to_string(r));
  }

  EnumerationResult result{ring, p, r, budget, characteristic, {}};
  const auto ideals = enumerate(ell, n, p, budget, characteristic, options);
  result.ideals.resize(ideals.size(), EnumeratedIdeal{MonomialIdeal::zero(ring), {ring, {}}, 0});
  parallel_for(ideals.size(), options.threads, [&](std::size_t k) {
    PommaretBasis basis = completion(ideals[k]);
    const Degree reg = basis.max_degree();
    result.ideals[k] = EnumeratedIdeal{ideals[k], std::move(basis), reg};
  });
  return result;
}

}  // namespace

std::vector<MonomialIdeal> EnumerationResult::ideal_list() const {
  std::vector<MonomialIdeal> out;
  out.reserve(ideals.size());
  for (const auto& e : ideals) out.push_back(e.ideal);
  return out;
}

std::vector<MonomialIdeal> remove(const MonomialIdeal& ideal, Degree s, std::size_t q,
                                  const EnumerationOptions& options) {
  return remove_impl(ideal, s, q, std::nullopt, options);
}

std::vector<MonomialIdeal> p_remove(Characteristic p, const MonomialIdeal& ideal, Degree s,
                                    std::size_t q, const EnumerationOptions& options) {
  return remove_impl(ideal, s, q, p, options);
}

EnumerationResult quasi_stable_enum(VarIndex ell, VarIndex n, const HilbertPolynomial& p,
                                    std::optional<Degree> s, const EnumerationOptions& options) {
  return run_enumeration(ell, n, p, s, std::nullopt, options);
}

EnumerationResult borel_enum(VarIndex ell, VarIndex n, const HilbertPolynomial& p,
                             std::optional<Degree> s, Characteristic characteristic,
                             const EnumerationOptions& options) {
  return run_enumeration(ell, n, p, s, characteristic, options);
}

EnumerationResult cross_filter_borel(const EnumerationResult& result, Characteristic p) {
  EnumerationResult out{result.ring, result.hilbert_polynomial, result.gotzmann_number, result.s,
                        p, {}};
  for (const auto& e : result.ideals) {
    if (is_p_borel(e.ideal, p)) out.ideals.push_back(e);
  }
  return out;
}

}  // namespace qsenum
