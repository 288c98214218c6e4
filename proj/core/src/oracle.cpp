#include "qsenum/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qsenum/error.hpp"

namespace qsenum::oracle {

namespace {

std::vector<Exponent> exps_of(const Term& t) { return {t.exponents().begin(), t.exponents().end()}; }

bool lex_less(const Generators& a, const Generators& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Term& x, const Term& y) {
                                        return canonical_cmp(x, y) < 0;
                                      });
}

// Horner over the rational coefficients; a Hilbert polynomial is integer
// valued on integers, anything else is reported.
std::int64_t eval_at(const HilbertPolynomial& p, std::int64_t t) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  if (denominator(acc) != 1) throw Error(ErrorKind::NonIntegerValue, "P(t) is not an integer");
  return numerator(acc).convert_to<std::int64_t>();
}

BigInt choose(std::uint64_t n, std::uint64_t k) {
  BigInt num = 1;
  BigInt den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

// All terms t with t <= bound coordinatewise.
void for_each_in_box(RingSpec ring, const std::vector<Exponent>& bound,
                     const std::function<void(const Term&)>& fn) {
  std::vector<Exponent> cur(bound.size(), 0);
  for (;;) {
    fn(Term(ring, cur));
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == bound[k]) cur[k++] = 0;
    if (k == cur.size()) return;
    ++cur[k];
  }
}

}  // namespace

bool naive_contains(const Generators& gens, const Term& t) {
  for (const Term& g : gens) {
    bool ok = true;
    for (std::size_t k = 0; k < g.exponents().size(); ++k) {
      if (g.exponents()[k] > t.exponents()[k]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Generators naive_minimalize(Generators terms) {
  canonicalize(terms);
  Generators out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < terms.size() && !redundant; ++j) {
      redundant = j != i && naive_contains({terms[j]}, terms[i]) && !(terms[j] == terms[i]);
    }
    if (!redundant) out.push_back(terms[i]);
  }
  return out;
}

std::uint64_t naive_hilbert_function(RingSpec ring, const Generators& gens, Degree t) {
  std::uint64_t count = 0;
  for (const Term& m : terms_of_degree(ring, t)) {
    if (!naive_contains(gens, m)) ++count;
  }
  return count;
}

Generators naive_saturation(RingSpec ring, const Generators& gens) {
  if (gens.empty()) return {};
  std::vector<Exponent> bound(ring.num_vars(), 0);
  for (const Term& g : gens) {
    for (std::size_t k = 0; k < bound.size(); ++k) bound[k] = std::max(bound[k], g.exponents()[k]);
  }
  Generators members;
  for_each_in_box(ring, bound, [&](const Term& f) {
    for (VarIndex i = ring.ell(); i <= ring.n(); ++i) {
      const auto k = static_cast<std::size_t>(i - ring.ell());
      if (!naive_contains(gens, f.times_var(i, bound[k]))) return;
    }
    members.push_back(f);
  });
  return naive_minimalize(std::move(members));
}

bool naive_is_quasi_stable(RingSpec ring, const Generators& gens) {
  for (const Term& g : gens) {
    for (VarIndex i = ring.ell(); i <= ring.n(); ++i) {
      const Term stripped = g.strip(i);
      for (VarIndex j = i + 1; j <= ring.n(); ++j) {
        Exponent cap = 0;
        for (const Term& h : gens) cap = std::max(cap, h.exponent(j));
        if (!naive_contains(gens, stripped.times_var(j, cap))) return false;
      }
    }
  }
  return true;
}

bool naive_is_p_borel(RingSpec ring, const Generators& gens, std::uint32_t p) {
  for (const Term& g : gens) {
    for (VarIndex i = ring.ell(); i <= ring.n(); ++i) {
      const Exponent a = g.exponent(i);
      for (Exponent s = 1; s <= a; ++s) {
        const BigInt c = choose(a, s);
        if (p != 0 && c % p == 0) continue;
        for (VarIndex j = i + 1; j <= ring.n(); ++j) {
          if (!naive_contains(gens, increasing_move(g, i, j, s))) return false;
        }
      }
    }
  }
  return true;
}

bool naive_cones_partition(RingSpec ring, const Generators& gens, const Generators& basis,
                           Degree d) {
  for (const Term& b : basis) {
    if (!naive_contains(gens, b)) return false;
  }
  for (const Term& t : terms_of_degree(ring, d)) {
    int hits = 0;
    for (const Term& b : basis) {
      if (!naive_contains({b}, t)) continue;
      bool in_cone = true;
      if (!b.is_unit()) {
        const VarIndex m = b.min_var();
        for (VarIndex v = m + 1; v <= ring.n(); ++v) {
          if (t.exponent(v) != b.exponent(v)) in_cone = false;
        }
      }
      if (in_cone) ++hits;
    }
    if (hits != (naive_contains(gens, t) ? 1 : 0)) return false;
  }
  return true;
}

std::vector<StableSet> enumerate_stable_sets(RingSpec ring, Degree r, std::size_t size) {
  const std::size_t total = count_terms(ring.num_vars(), r);
  if (total > kMaxComponent) {
    throw Error(ErrorKind::TooLarge, std::to_string(total) + " terms of degree " +
                                         std::to_string(r) + " exceed the oracle limit");
  }
  const std::vector<Term> terms = terms_of_degree(ring, r);
  std::map<std::vector<Exponent>, std::size_t> index;
  for (std::size_t k = 0; k < terms.size(); ++k) index[exps_of(terms[k])] = k;

  std::vector<std::vector<std::size_t>> needs(terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Term& t = terms[k];
    if (t.is_unit()) continue;
    const VarIndex m = t.min_var();
    std::vector<Exponent> e = exps_of(t);
    e[static_cast<std::size_t>(m - ring.ell())] -= 1;
    for (VarIndex j = m + 1; j <= ring.n(); ++j) {
      std::vector<Exponent> f = e;
      f[static_cast<std::size_t>(j - ring.ell())] += 1;
      needs[k].push_back(index.at(f));
    }
  }

  std::vector<StableSet> out;
  if (size > terms.size()) return out;
  std::vector<bool> chosen(terms.size(), false);
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t k, std::size_t picked) {
    if (picked == size) {
      StableSet s{ring, r, {}};
      for (std::size_t i = 0; i < k; ++i) {
        if (chosen[i]) s.terms.push_back(terms[i]);
      }
      out.push_back(std::move(s));
      return;
    }
    if (k == terms.size()) return;
    const bool allowed = std::all_of(needs[k].begin(), needs[k].end(),
                                     [&](std::size_t i) { return i < k && chosen[i]; });
    if (allowed) {
      chosen[k] = true;
      dfs(k + 1, picked + 1);
      chosen[k] = false;
    }
    if (size - picked <= terms.size() - k - 1) dfs(k + 1, picked);
  };
  dfs(0, 0);
  return out;
}

std::vector<Generators> brute_force_saturated_quasi_stable(RingSpec ring,
                                                           const HilbertPolynomial& p, Degree r) {
  const auto total = static_cast<std::int64_t>(count_terms(ring.num_vars(), r));
  const std::int64_t codim = eval_at(p, r);
  if (codim < 0 || codim > total) return {};
  std::vector<Generators> out;
  for (const StableSet& set : enumerate_stable_sets(ring, r, static_cast<std::size_t>(total - codim))) {
    Generators sat = naive_saturation(ring, set.terms);
    if (verify_ideal(ring, sat, p, r, std::nullopt).empty()) out.push_back(std::move(sat));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> verify_ideal(RingSpec ring, const Generators& gens,
                                      const HilbertPolynomial& p, Degree r,
                                      std::optional<std::uint32_t> characteristic) {
  std::vector<std::string> failures;
  if (naive_saturation(ring, gens) != naive_minimalize(gens)) failures.emplace_back("not saturated");
  if (!naive_is_quasi_stable(ring, gens)) failures.emplace_back("not quasi-stable");
  Degree top = 0;
  for (const Term& g : gens) top = std::max(top, g.degree());
  const Degree last = std::max(r, top) + static_cast<Degree>(ring.num_vars()) + 1;
  for (Degree t = r; t <= last; ++t) {
    if (static_cast<std::int64_t>(naive_hilbert_function(ring, gens, t)) != eval_at(p, t)) {
      failures.push_back("Hilbert function differs from P at t = " + std::to_string(t));
      break;
    }
  }
  if (characteristic && !naive_is_p_borel(ring, gens, *characteristic)) {
    failures.push_back("not " + std::to_string(*characteristic) + "-Borel");
  }
  return failures;
}

}  // namespace qsenum::oracle
