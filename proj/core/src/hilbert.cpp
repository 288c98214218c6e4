#include "qsenum/hilbert.hpp"

#include <sstream>

#include "qsenum/error.hpp"
#include "qsenum/pommaret.hpp"
#include "qsenum/stability.hpp"

namespace qsenum {

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void HilbertPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HilbertPolynomial HilbertPolynomial::constant(Rational c) {
  return HilbertPolynomial(std::vector<Rational>{std::move(c)});
}

HilbertPolynomial HilbertPolynomial::z() { return HilbertPolynomial({Rational(0), Rational(1)}); }

HilbertPolynomial HilbertPolynomial::binomial(std::int64_t shift, std::uint32_t k) {
  HilbertPolynomial out = constant(1);
  BigInt factorial = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    out = out * HilbertPolynomial({Rational(shift - static_cast<std::int64_t>(i)), Rational(1)});
    factorial *= (i + 1);
  }
  for (Rational& c : out.coeffs_) c /= Rational(factorial);
  return out;
}

Rational HilbertPolynomial::value_at(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

HilbertPolynomial& HilbertPolynomial::operator+=(const HilbertPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

HilbertPolynomial& HilbertPolynomial::operator-=(const HilbertPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

HilbertPolynomial operator*(const HilbertPolynomial& a, const HilbertPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return HilbertPolynomial(std::move(c));
}

HilbertPolynomial HilbertPolynomial::operator-() const {
  HilbertPolynomial out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

HilbertPolynomial HilbertPolynomial::shifted(std::int64_t shift) const {
  const HilbertPolynomial linear({Rational(shift), Rational(1)});
  HilbertPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + constant(*it);
  return acc;
}

std::string to_string(const HilbertPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Rational mag = abs(c[k]);
    if (c[k] < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

BigInt evaluate(const HilbertPolynomial& p, std::int64_t t) {
  Rational v = p.value_at(Rational(t));
  if (denominator(v) != 1) {
    throw Error(ErrorKind::NonIntegerValue,
                to_string(p) + " is not an integer at z=" + std::to_string(t));
  }
  return numerator(v);
}

HilbertPolynomial delta(const HilbertPolynomial& p) { return p - p.shifted(-1); }

GotzmannDecomposition gotzmann_decompose(const HilbertPolynomial& p) {
  constexpr std::size_t kMaxTerms = 10'000'000;
  GotzmannDecomposition out;
  HilbertPolynomial rest = p;
  while (!rest.is_zero()) {
    const std::size_t i = out.a.size() + 1;
    const int d = rest.degree();
    if (rest.leading() <= 0) {
      throw Error(ErrorKind::NotAdmissible, to_string(p) + ": remainder " + to_string(rest) +
                                                " has non-positive leading coefficient at step " +
                                                std::to_string(i));
    }
    if (!out.a.empty() && static_cast<std::uint32_t>(d) > out.a.back()) {
      throw Error(ErrorKind::NotAdmissible,
                  to_string(p) + ": degree rose at step " + std::to_string(i));
    }
    if (i > kMaxTerms) {
      throw Error(ErrorKind::NotAdmissible, to_string(p) + ": decomposition does not terminate");
    }
    const auto a = static_cast<std::uint32_t>(d);
    rest -= HilbertPolynomial::binomial(static_cast<std::int64_t>(a) - static_cast<std::int64_t>(i - 1), a);
    out.a.push_back(a);
  }
  return out;
}

HilbertPolynomial reconstruct(const GotzmannDecomposition& d) {
  HilbertPolynomial out;
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    out += HilbertPolynomial::binomial(static_cast<std::int64_t>(d.a[i]) - static_cast<std::int64_t>(i),
                                       d.a[i]);
  }
  return out;
}

std::size_t gotzmann_number(const HilbertPolynomial& p) { return gotzmann_decompose(p).r(); }

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

namespace {

BigInt ambient_dim(const RingSpec& ring, Degree t) {
  const std::uint64_t v = ring.num_vars() - 1;
  return binomial(t + v, v);
}

// Number of terms of degree s in the Pommaret cone of apex.
BigInt cone_dim(const RingSpec& ring, const Term& apex, Degree s) {
  const Degree d = apex.degree();
  if (s < d) return 0;
  const std::uint64_t cls = apex.is_unit() ? ring.num_vars() - 1
                                           : static_cast<std::uint64_t>(apex.min_var() - ring.ell());
  return binomial(s - d + cls, cls);
}

BigInt naive_degree_dim(const MonomialIdeal& ideal, Degree s) {
  BigInt count = 0;
  for (const Term& t : terms_of_degree(ideal.ring(), s)) {
    if (ideal.contains(t)) ++count;
  }
  return count;
}

}  // namespace

BigInt ideal_degree_dim(const MonomialIdeal& ideal, Degree s) {
  if (ideal.is_zero()) return 0;
  const PommaretBasis basis = completion(ideal);
  if (s < basis.max_degree()) {
    throw Error(ErrorKind::DegreeBelowRegularity,
                "cone counting needs s >= reg = " + std::to_string(basis.max_degree()));
  }
  BigInt total = 0;
  for (const Term& apex : basis.terms) total += cone_dim(ideal.ring(), apex, s);
  return total;
}

BigInt hilbert_function(const MonomialIdeal& ideal, Degree t) {
  const BigInt total = ambient_dim(ideal.ring(), t);
  if (ideal.is_zero()) return total;
  if (is_quasi_stable(ideal) && t >= regularity(ideal)) return total - ideal_degree_dim(ideal, t);
  return total - naive_degree_dim(ideal, t);
}

HilbertPolynomial ambient_hilbert_polynomial(RingSpec ring) {
  const auto v = static_cast<std::uint32_t>(ring.num_vars() - 1);
  return HilbertPolynomial::binomial(v, v);
}

HilbertPolynomial hilbert_polynomial(const MonomialIdeal& ideal) {
  const RingSpec& ring = ideal.ring();
  HilbertPolynomial p = ambient_hilbert_polynomial(ring);
  for (const Term& apex : completion(ideal).terms) {
    const auto cls = apex.is_unit() ? static_cast<std::uint32_t>(ring.num_vars() - 1)
                                    : static_cast<std::uint32_t>(apex.min_var() - ring.ell());
    p -= HilbertPolynomial::binomial(static_cast<std::int64_t>(cls) -
                                         static_cast<std::int64_t>(apex.degree()),
                                     cls);
  }
  return p;
}

}  // namespace qsenum
