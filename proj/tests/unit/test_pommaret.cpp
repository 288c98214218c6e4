#include "helpers.hpp"
#include "qsenum/error.hpp"
#include "qsenum/hilbert.hpp"
#include "qsenum/pommaret.hpp"
#include "qsenum/stability.hpp"

using namespace qsenum;
using namespace qsenum::testing;

namespace {
const RingSpec R01(0, 1);
const RingSpec R02(0, 2);
const RingSpec R03(0, 3);

std::vector<MonomialIdeal> random_quasi_stable(std::mt19937& rng, RingSpec ring, int want) {
  std::vector<MonomialIdeal> out;
  while (static_cast<int>(out.size()) < want) {
    auto j = random_ideal(rng, ring, 4, 3);
    if (is_quasi_stable(j) && !j.is_zero()) out.push_back(std::move(j));
  }
  return out;
}

int cones_hit(const std::vector<Term>& basis, const Term& t) {
  int hits = 0;
  for (const Term& b : basis) hits += in_cone(t, b) ? 1 : 0;
  return hits;
}
}  // namespace

TEST_CASE("Pommaret cones") {
  CHECK(in_cone(T(R02, "x1*x0^3"), T(R02, "x1")));
  CHECK_FALSE(in_cone(T(R02, "x1*x2"), T(R02, "x1")));
  CHECK(in_cone(T(R02, "x2^5"), T(R02, "x2^2")));
  CHECK(in_cone(T(R02, "x2^5*x0"), Term::unit(R02)));
  const auto m = terms(R02, {"x1", "x2^2"});
  CHECK_FALSE(span_contains(m, T(R02, "x1*x2")));
  CHECK(span_contains(m, T(R02, "x0*x1")));
  CHECK_FALSE(span_contains({}, T(R02, "x0")));
}

TEST_CASE("completion") {
  const auto basis = completion(I(R02, "(x1, x2^2)"));
  CHECK(basis.terms == sorted(terms(R02, {"x1", "x1*x2", "x2^2"})));
  for (Degree d = 0; d <= 5; ++d) {
    for (const Term& t : terms_of_degree(R02, d)) {
      CHECK(cones_hit(basis.terms, t) == (I(R02, "(x1, x2^2)").contains(t) ? 1 : 0));
    }
  }
  try {
    (void)completion(I(R01, "(x0*x1)"));
    FAIL("expected NotQuasiStable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotQuasiStable);
  }
  const RingSpec r12(1, 2);
  CHECK(completion(I(r12, "(x2, x1^14)")).terms == I(r12, "(x2, x1^14)").generators());
}

TEST_CASE("regularity") {
  CHECK(regularity(I(R02, "(x1, x2^2)")) == 2);
  CHECK(regularity(MonomialIdeal::unit(R02)) == 0);
  const auto j = I(R03, "(x3^2, x2^2)");
  const Degree reg = regularity(j);
  CHECK(reg <= 6);
  CHECK(reg == completion(j).max_degree());
  for (Degree t = reg; t <= reg + 4; ++t) CHECK(hilbert_function(j, t) == 4 * t);
  CHECK_THROWS_AS((void)regularity(MonomialIdeal::zero(R02)), Error);
}

TEST_CASE("class partition") {
  const auto basis = completion(I(R02, "(x1, x2^2)"));
  CHECK(class_partition(basis, 1) == sorted(terms(R02, {"x1", "x1*x2"})));
  CHECK(class_partition(basis, 2) == terms(R02, {"x2^2"}));
  CHECK(class_partition(basis, 0).empty());
  CHECK(stripped_class(basis, 1) == sorted(terms(R02, {"1", "x2"})));
}

TEST_CASE("saturations read off the basis") {
  const auto j = I(R02, "(x1, x2^2)");
  CHECK(var_saturation(j, 1) == colon_varset_infinity(j, 1));
  CHECK(var_saturation(MonomialIdeal::unit(R02), 1).is_unit());
  CHECK(saturate(MonomialIdeal::unit(R02)).is_unit());
  const auto truncated = MonomialIdeal::minimalize(R02, truncation_degree_component(j, 2));
  CHECK(saturate(truncated) == j);
  CHECK(x1_saturation(j) == colon_var_infinity(colon_var_infinity(j, 0), 1));
  CHECK(x1_saturation(j).is_unit());
  CHECK(x1_saturation(MonomialIdeal::unit(R02)).is_unit());
}

TEST_CASE("single degree basis") {
  const auto j = I(R02, "(x1, x2^2)");
  CHECK(stable_degree_basis(j, 2).terms == sorted(terms(R02, {"x2^2", "x1*x2", "x1^2", "x0*x1"})));
  CHECK(stable_degree_basis(MonomialIdeal::unit(R02), 0).terms == terms(R02, {"1"}));
}

TEST_CASE("property: basis structure on random quasi-stable ideals") {
  std::mt19937 rng(31);
  for (const RingSpec ring : {R02, R03}) {
    for (const auto& j : random_quasi_stable(rng, ring, 60)) {
      const auto basis = completion(j);
      const Degree reg = basis.max_degree();
      // disjoint cover
      for (Degree d = 0; d <= reg + 3; ++d) {
        for (const Term& t : terms_of_degree(ring, d)) {
          CHECK(cones_hit(basis.terms, t) == (j.contains(t) ? 1 : 0));
        }
      }
      // contains the minimal generators, equal to them exactly for stable ideals
      for (const Term& g : j.generators()) {
        CHECK(std::binary_search(basis.terms.begin(), basis.terms.end(), g, CanonicalLess{}));
      }
      CHECK((basis.terms == j.generators()) == is_stable(j));
      // no element can be dropped
      for (std::size_t k = 0; k < basis.terms.size(); ++k) {
        std::vector<Term> fewer = basis.terms;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
        bool shrinks = false;
        for (Degree d = 0; d <= reg + 1 && !shrinks; ++d) {
          for (const Term& t : terms_of_degree(ring, d)) {
            if (j.contains(t) && !span_contains(fewer, t)) {
              shrinks = true;
              break;
            }
          }
        }
        CHECK(shrinks);
      }
      for (VarIndex v = ring.ell(); v <= ring.n(); ++v) {
        CHECK(var_saturation(j, v) == colon_varset_infinity(j, v));
      }
      // dividing a non-basis term by its minimal variable stays in J
      for (Degree d = 1; d <= reg + 3; ++d) {
        for (const Term& t : terms_of_degree(ring, d)) {
          if (!j.contains(t)) continue;
          if (std::binary_search(basis.terms.begin(), basis.terms.end(), t, CanonicalLess{})) continue;
          CHECK(j.contains(exact_div(t, Term::variable(ring, t.min_var()))));
        }
      }
    }
  }
}

TEST_CASE("property: ring extension keeps the basis") {
  std::mt19937 rng(37);
  const RingSpec small(1, 3);
  for (const auto& j : random_quasi_stable(rng, small, 40)) {
    const auto lifted = extend_ring(j, 0);
    const auto a = completion(j);
    const auto b = completion(lifted);
    REQUIRE(a.terms.size() == b.terms.size());
    for (std::size_t k = 0; k < a.terms.size(); ++k) CHECK(a.terms[k].extended(0) == b.terms[k]);
  }
}
