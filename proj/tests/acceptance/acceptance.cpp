// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qsenum/enumeration.hpp"
#include "qsenum/error.hpp"
#include "qsenum/oracle.hpp"
#include "qsenum/text.hpp"
#include "qsenum_cli/cli.hpp"

using namespace qsenum;

namespace {

const RingSpec R02(0, 2);
const RingSpec R03(0, 3);

struct Outcome {
  bool pass = true;
  std::string detail;
};

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

std::vector<MonomialIdeal> parse_all(RingSpec ring, const std::vector<std::string>& texts) {
  std::vector<MonomialIdeal> out;
  for (const auto& t : texts) out.push_back(parse_ideal(t, ring));
  std::sort(out.begin(), out.end(), IdealLess{});
  return out;
}

std::string diff(const std::vector<MonomialIdeal>& got, const std::vector<MonomialIdeal>& want) {
  std::string out;
  for (const auto& g : got) {
    if (!std::binary_search(want.begin(), want.end(), g, IdealLess{})) out += " +" + to_string(g);
  }
  for (const auto& w : want) {
    if (!std::binary_search(got.begin(), got.end(), w, IdealLess{})) out += " -" + to_string(w);
  }
  return out;
}

// Every enumerated ideal goes through the structural checks of criterion 9.
struct InvariantLog {
  std::size_t checked = 0;
  std::vector<std::string> violations;

  void check(const EnumerationResult& res) {
    const auto r = static_cast<Degree>(res.gotzmann_number);
    const auto& ring = res.ring;
    for (const auto& e : res.ideals) {
      ++checked;
      const auto& gens = e.ideal.generators();
      auto fail = [&](const std::string& what) {
        violations.push_back(to_string(e.ideal) + ": " + what);
      };
      if (!(saturate(e.ideal) == e.ideal)) fail("not saturated");
      if (!is_quasi_stable(e.ideal)) fail("not quasi-stable");
      if (!(hilbert_polynomial(e.ideal) == res.hilbert_polynomial)) fail("Hilbert polynomial");
      const Degree last = r + static_cast<Degree>(ring.n() - ring.ell()) + 1;
      for (Degree t = r; t <= last; ++t) {
        if (BigInt(oracle::naive_hilbert_function(ring, gens, t)) !=
            evaluate(res.hilbert_polynomial, t)) {
          fail("naive Hilbert function at " + std::to_string(t));
          break;
        }
      }
      for (Degree d = e.regularity; d <= e.regularity + 2; ++d) {
        if (!oracle::naive_cones_partition(ring, gens, e.pommaret_basis.terms, d)) {
          fail("cones overlap or miss terms in degree " + std::to_string(d));
          break;
        }
      }
      if (res.characteristic && !is_p_borel(e.ideal, *res.characteristic)) fail("not p-Borel");
    }
  }
};

InvariantLog invariants;

EnumerationResult qs_enum(VarIndex ell, VarIndex n, const HilbertPolynomial& p) {
  auto res = quasi_stable_enum(ell, n, p);
  invariants.check(res);
  return res;
}

EnumerationResult b_enum(VarIndex ell, VarIndex n, const HilbertPolynomial& p, std::uint32_t c) {
  auto res = borel_enum(ell, n, p, std::nullopt, Characteristic(c));
  invariants.check(res);
  return res;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::main_entry(args, out, err);
  return out.str() + err.str();
}

const std::vector<std::string> kStronglyStable14 = {
    "(x2, x1^14)",
    "(x2^2, x2*x1^6, x1^8)",
    "(x2^2, x1^5*x2, x1^9)",
    "(x2^2, x1^4*x2, x1^10)",
    "(x2^2, x1^3*x2, x1^11)",
    "(x2^2, x1^2*x2, x1^12)",
    "(x2^2, x1*x2, x1^13)",
    "(x2^3, x1^3*x2^2, x1^5*x2, x1^6)",
    "(x2^3, x1*x2^2, x2*x1^6, x1^7)",
    "(x2^3, x1^2*x2^2, x1^5*x2, x1^7)",
    "(x2^3, x1^3*x2^2, x1^4*x2, x1^7)",
    "(x2^3, x1*x2^2, x1^5*x2, x1^8)",
    "(x2^3, x1^2*x2^2, x1^4*x2, x1^8)",
    "(x2^3, x1*x2^2, x1^4*x2, x1^9)",
    "(x2^3, x1^2*x2^2, x1^3*x2, x1^9)",
    "(x2^3, x1*x2^2, x1^3*x2, x1^10)",
    "(x2^3, x1*x2^2, x1^2*x2, x1^11)",
    "(x2^4, x1^2*x2^3, x1^3*x2^2, x1^4*x2, x1^5)",
    "(x2^4, x1*x2^3, x1^2*x2^2, x1^5*x2, x1^6)",
    "(x2^4, x1*x2^3, x1^3*x2^2, x1^4*x2, x1^6)",
    "(x2^4, x1*x2^3, x1^2*x2^2, x1^4*x2, x1^7)",
    "(x2^4, x1*x2^3, x1^2*x2^2, x1^3*x2, x1^8)",
};

const std::map<std::uint32_t, std::vector<std::string>> kExtras14 = {
    {2,
     {"(x2^4, x2^3*x1^2, x1^4)", "(x2^3, x2^2*x1^2, x1^6)", "(x2^3, x2*x1^4, x1^6)",
      "(x2^3, x2*x1^2, x1^10)", "(x2^4, x2*x1^4, x2^3*x1, x1^5)",
      "(x2^4, x2^2*x1^2, x2*x1^4, x1^6)"}},
    {3,
     {"(x2^3, x2^2*x1^2, x1^6)", "(x2^3, x2*x1^3, x1^8)", "(x2^4, x2^3*x1^2, x2*x1^3, x1^6)",
      "(x2^4, x2^3*x1, x2*x1^3, x1^7)"}},
    {5, {"(x2^3, x2^2*x1^4, x1^5)", "(x2^4, x2^3*x1, x2^2*x1^3, x1^5)"}},
    {7, {"(x2^2, x1^7)"}},
};

Outcome criterion1() {
  Outcome o;
  int code = 0;
  const std::string out =
      run_cli({"enum", "--n", "3", "--hilbert", "6*z-3", "--mode", "quasi-stable", "--count-only"},
              code);
  expect(o, code == 0 && out == "322\n", "CLI printed '" + out + "'");
  const auto res = qs_enum(0, 3, parse_hilbert("6*z-3"));
  expect(o, res.ideals.size() == 322, "library found " + std::to_string(res.ideals.size()));
  expect(o, res.s == 12, "working degree " + std::to_string(res.s));
  o.detail = o.pass ? "322 saturated quasi-stable ideals for 6*z-3 in S(0,3)" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto p = parse_hilbert("6*z-3");
  std::string counts;
  for (auto [c, want] : {std::pair{0u, 31u}, {2u, 35u}, {3u, 34u}}) {
    const auto n = b_enum(0, 3, p, c).ideals.size();
    counts += " p=" + std::to_string(c) + ":" + std::to_string(n);
    expect(o, n == want, "p=" + std::to_string(c) + " gave " + std::to_string(n));
  }
  if (o.pass) o.detail = counts.substr(1);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto got = b_enum(0, 2, parse_hilbert("14"), 0).ideal_list();
  const auto want = parse_all(R02, kStronglyStable14);
  expect(o, got == want, "differs:" + diff(got, want));
  if (o.pass) o.detail = "J1..J22 reproduced exactly";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto strong = b_enum(0, 2, parse_hilbert("14"), 0).ideal_list();
  std::string counts;
  for (const auto& [c, texts] : kExtras14) {
    const auto all = b_enum(0, 2, parse_hilbert("14"), c).ideal_list();
    std::vector<MonomialIdeal> extra;
    for (const auto& j : all) {
      if (!std::binary_search(strong.begin(), strong.end(), j, IdealLess{})) extra.push_back(j);
    }
    const bool contains_strong = std::includes(all.begin(), all.end(), strong.begin(), strong.end(),
                                               IdealLess{});
    expect(o, contains_strong, "p=" + std::to_string(c) + " misses a strongly stable ideal");
    const auto want = parse_all(R02, texts);
    expect(o, extra == want, "p=" + std::to_string(c) + ":" + diff(extra, want));
    counts += " p=" + std::to_string(c) + ":" + std::to_string(extra.size());
  }
  if (o.pass) o.detail = "extra ideals" + counts;
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (auto [text, want] : {std::pair{"6*z-3", 12u}, {"14", 14u}, {"4*z", 6u}}) {
    const auto r = gotzmann_number(parse_hilbert(text));
    expect(o, r == want, std::string(text) + " -> " + std::to_string(r));
  }
  if (o.pass) o.detail = "12, 14, 6";
  return o;
}

std::string list_text(const std::vector<Term>& ts) {
  std::string s = "{";
  for (std::size_t k = 0; k < ts.size(); ++k) s += (k ? ", " : "") + to_string(ts[k]);
  return s + "}";
}

Outcome criterion6() {
  Outcome o;
  const auto j = parse_ideal("(x3^2, x2^2)", R03);
  auto set_of = [](std::initializer_list<const char*> texts) {
    std::vector<Term> v;
    for (const char* t : texts) v.push_back(parse_term(t, R03));
    canonicalize(v);
    return v;
  };
  const auto st = st_minimal_terms(j, 6);
  expect(o, st == set_of({"x0^4*x2^2", "x0^4*x3^2"}), "St-minimal " + list_text(st));
  const auto pm = p_minimal_terms(j, 6, Characteristic(2));
  expect(o, pm == set_of({"x0^4*x2^2", "x0^3*x1*x2^2"}),
         "2-minimal " + list_text(pm) + " vs expected {x2^2*x0^4, x2^2*x1*x0^3}");
  const auto both = p_minimal_st_minimal_terms(j, 6, Characteristic(2));
  expect(o, both == set_of({"x0^4*x2^2"}), "intersection " + list_text(both));
  if (o.pass) o.detail = "St-minimal and 2-minimal sets match";
  return o;
}

Outcome criterion7() {
  Outcome o;
  expect(o, is_quasi_stable(parse_ideal("(x1, x2^2)", R02)), "(x1, x2^2) not quasi-stable");
  expect(o, !is_stable(parse_ideal("(x1, x2^2)", R02)), "(x1, x2^2) stable");
  const auto b = parse_ideal("(x2^11, x2^10*x1, x2^2*x1^9, x2*x1^10)", R02);
  expect(o, is_p_borel(b, Characteristic(3)), "not 3-Borel");
  expect(o, !is_p_borel(b, Characteristic(0)), "0-Borel");
  expect(o, !is_p_borel(b, Characteristic(5)), "5-Borel");
  const auto k = parse_ideal("(x1, x2^2, x3)", R03);
  for (std::uint32_t p : {0u, 2u, 3u, 5u, 7u, 11u}) {
    expect(o, !is_p_borel(k, Characteristic(p)), "(x1, x2^2, x3) is " + std::to_string(p) + "-Borel");
  }
  if (o.pass) o.detail = "all predicate fixtures hold";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t instances = 0;
  auto one = [&](RingSpec ring, int c) {
    const auto p = HilbertPolynomial::constant(c);
    const auto start = std::chrono::steady_clock::now();
    // A constant c has Gotzmann number c.
    const auto brute = oracle::brute_force_saturated_quasi_stable(ring, p, static_cast<Degree>(c));
    const auto res = qs_enum(ring.ell(), ring.n(), p);
    std::vector<std::vector<Term>> got;
    for (const auto& e : res.ideals) got.push_back(e.ideal.generators());
    std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CanonicalLess{});
    });
    const std::string tag = "S(" + std::to_string(ring.ell()) + "," + std::to_string(ring.n()) +
                            ") P=" + std::to_string(c);
    expect(o, got == brute, tag + " quasi-stable mismatch");
    for (std::uint32_t ch : {0u, 2u, 3u}) {
      std::vector<std::vector<Term>> filtered;
      for (const auto& g : brute) {
        if (oracle::naive_is_p_borel(ring, g, ch)) filtered.push_back(g);
      }
      std::vector<std::vector<Term>> borel;
      for (const auto& e : b_enum(ring.ell(), ring.n(), p, ch).ideals) {
        borel.push_back(e.ideal.generators());
      }
      std::sort(borel.begin(), borel.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            CanonicalLess{});
      });
      expect(o, borel == filtered, tag + " p=" + std::to_string(ch) + " mismatch");
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(o, secs <= 30.0, tag + " took " + std::to_string(secs) + "s");
    ++instances;
  };
  for (int c = 1; c <= 5; ++c) one(R02, c);
  for (int c = 1; c <= 2; ++c) one(R03, c);
  if (o.pass) o.detail = std::to_string(instances) + " instances agree with brute force";
  return o;
}

Outcome criterion9() {
  Outcome o;
  expect(o, invariants.checked > 0, "no ideals were checked");
  for (std::size_t k = 0; k < std::min<std::size_t>(5, invariants.violations.size()); ++k) {
    expect(o, false, invariants.violations[k]);
  }
  if (o.pass) o.detail = std::to_string(invariants.checked) + " enumerated ideals, no violations";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto p = parse_hilbert("6*z-3");
  const auto all = quasi_stable_enum(0, 3, p, Degree{12});
  for (std::uint32_t c : {0u, 2u, 3u}) {
    const auto filtered = cross_filter_borel(all, Characteristic(c)).ideal_list();
    const auto direct = borel_enum(0, 3, p, Degree{12}, Characteristic(c)).ideal_list();
    expect(o, filtered == direct, "p=" + std::to_string(c) + ":" + diff(filtered, direct));
  }
  if (o.pass) o.detail = "filtered quasi-stable lists equal Borel enumerations for p=0,2,3";
  return o;
}

Outcome criterion11() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs = {
      {"enum", "--n", "3", "--hilbert", "6*z-3", "--mode", "quasi-stable"},
      {"enum", "--n", "3", "--hilbert", "6*z-3", "--mode", "borel", "--char", "0"},
      {"enum", "--n", "3", "--hilbert", "6*z-3", "--mode", "borel", "--char", "2"},
      {"enum", "--n", "3", "--hilbert", "6*z-3", "--mode", "borel", "--char", "3"},
      {"enum", "--n", "2", "--hilbert", "14", "--mode", "borel", "--char", "0"},
  };
  for (auto args : runs) {
    args.insert(args.end(), {"--format", "json", "--show-pommaret"});
    auto single = args;
    single.insert(single.end(), {"--threads", "1"});
    auto multi = args;
    multi.insert(multi.end(), {"--threads", "4"});
    int c1 = 0;
    int c4 = 0;
    const std::string a = run_cli(single, c1);
    const std::string b = run_cli(multi, c4);
    expect(o, c1 == 0 && c4 == 0 && a == b, "outputs differ for " + args[4]);
  }
  if (o.pass) o.detail = "JSON identical with 1 and 4 threads on all five runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"count reproduction", criterion1},  {"Borel counts", criterion2},
      {"exact list for P=14", criterion3}, {"characteristic extras", criterion4},
      {"Gotzmann numbers", criterion5},    {"minimal-term fixtures", criterion6},
      {"predicate fixtures", criterion7},  {"oracle equivalence", criterion8},
      {"structural invariants", criterion9}, {"filter consistency", criterion10},
      {"determinism across threads", criterion11},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first
              << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
