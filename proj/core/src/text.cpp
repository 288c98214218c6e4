#include "qsenum/text.hpp"

#include <cctype>
#include <limits>

#include "qsenum/error.hpp"

namespace qsenum {

std::string to_string(const Term& t) {
  if (t.is_unit()) return "1";
  std::string out;
  const RingSpec& ring = t.ring();
  for (VarIndex i = ring.n(); i >= ring.ell(); --i) {
    const Exponent e = t.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "(";
  bool first = true;
  for (const Term& g : ideal.generators()) {
    if (!first) out += ", ";
    out += to_string(g);
    first = false;
  }
  return out + ")";
}

namespace {

// Hand-rolled cursor over the input with whitespace skipping.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::string near = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw Error(ErrorKind::ParseError,
                what + " at position " + std::to_string(pos_) + " (found " + near + ")");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Exponent narrow_exponent(Cursor& cur, std::uint64_t v) {
  if (v > std::numeric_limits<Exponent>::max()) cur.fail("exponent too large");
  return static_cast<Exponent>(v);
}

Term parse_term_at(Cursor& cur, RingSpec ring) {
  std::vector<Exponent> exps(ring.num_vars(), 0);
  if (cur.peek() == '1') {
    if (cur.number() != 1) cur.fail("only the constant 1 is a term");
    return Term(ring, std::move(exps));
  }
  do {
    cur.expect('x');
    const std::uint64_t idx = cur.number();
    if (idx > static_cast<std::uint64_t>(ring.n()) || static_cast<VarIndex>(idx) < ring.ell()) {
      cur.fail("variable x" + std::to_string(idx) + " is not in the ring");
    }
    Exponent e = 1;
    if (cur.accept('^')) e = narrow_exponent(cur, cur.number());
    auto& slot = exps[static_cast<std::size_t>(static_cast<VarIndex>(idx) - ring.ell())];
    if (slot > std::numeric_limits<Exponent>::max() - e) cur.fail("exponent overflow");
    slot += e;
  } while (cur.accept('*'));
  return Term(ring, std::move(exps));
}

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := primary ['^' number]
// primary:= number | 'z' | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : cur_(text) {}

  HilbertPolynomial parse() {
    HilbertPolynomial p = expr();
    if (!cur_.at_end()) cur_.fail("unexpected input");
    return p;
  }

 private:
  HilbertPolynomial expr() {
    bool negate = false;
    if (cur_.accept('-')) {
      negate = true;
    } else {
      cur_.accept('+');
    }
    HilbertPolynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (cur_.accept('+')) {
        acc += term();
      } else if (cur_.accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  HilbertPolynomial term() {
    HilbertPolynomial acc = factor();
    for (;;) {
      if (cur_.accept('*')) {
        acc = acc * factor();
      } else if (cur_.accept('/')) {
        HilbertPolynomial d = factor();
        if (d.degree() != 0) cur_.fail("division only by a non-zero constant");
        const Rational c = d.coefficients()[0];
        std::vector<Rational> coeffs = acc.coefficients();
        for (Rational& k : coeffs) k /= c;
        acc = HilbertPolynomial(std::move(coeffs));
      } else {
        return acc;
      }
    }
  }

  HilbertPolynomial factor() {
    HilbertPolynomial base = primary();
    if (cur_.accept('^')) {
      const std::uint64_t e = cur_.number();
      if (e > 64) cur_.fail("exponent too large");
      HilbertPolynomial out = HilbertPolynomial::constant(1);
      for (std::uint64_t i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }

  HilbertPolynomial primary() {
    const char c = cur_.peek();
    if (c == 'z') {
      cur_.accept('z');
      return HilbertPolynomial::z();
    }
    if (cur_.accept('(')) {
      HilbertPolynomial inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return HilbertPolynomial::constant(Rational(BigInt(cur_.number())));
    }
    cur_.fail("expected a number, 'z' or '('");
  }

  Cursor cur_;
};

}  // namespace

Term parse_term(std::string_view text, RingSpec ring) {
  Cursor cur(text);
  Term t = parse_term_at(cur, ring);
  if (!cur.at_end()) cur.fail("unexpected input after term");
  return t;
}

MonomialIdeal parse_ideal(std::string_view text, RingSpec ring) {
  Cursor cur(text);
  cur.expect('(');
  std::vector<Term> gens;
  if (!cur.accept(')')) {
    do {
      gens.push_back(parse_term_at(cur, ring));
    } while (cur.accept(','));
    cur.expect(')');
  }
  if (!cur.at_end()) cur.fail("unexpected input after ideal");
  return MonomialIdeal::minimalize(ring, std::move(gens));
}

HilbertPolynomial parse_hilbert(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace qsenum
