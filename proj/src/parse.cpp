#include "dcond/parse.hpp"

#include <cctype>

namespace dcond {

namespace {

class Parser {
 public:
  Parser(const std::string& s, RingPtr ring) : s_(s), ring_(std::move(ring)) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  const std::string& s_;
  RingPtr ring_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(uint8_t(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      size_t at = pos_;
      long e = integer();
      if (e < 0) throw ParseError(at, "negative exponent");
      base = base.pow(unsigned(e));
    }
    return base;
  }

  long integer() {
    skip_ws();
    size_t at = pos_;
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(uint8_t(s_[pos_])))
      throw ParseError(at, "expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(uint8_t(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(uint8_t(c))) {
      long num = integer();
      if (eat('/')) {
        skip_ws();
        size_t at = pos_;
        long den = integer();
        if (den <= 0) throw ParseError(at, "denominator must be positive");
        return Poly::constant(ring_, rat_make(num, den));
      }
      return Poly::constant(ring_, Rational(num));
    }
    if (std::isalpha(uint8_t(c)) || c == '_') {
      size_t at = pos_;
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(uint8_t(s_[pos_])) || s_[pos_] == '_')) {
        name += s_[pos_];
        ++pos_;
      }
      int idx = ring_->find(name);
      if (idx < 0) throw ParseError(at, "unknown variable '" + name + "'");
      return Poly::variable(ring_, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

bool grevlex_less(const Expvec& x, const Expvec& y) {
  long dx = ev_total(x), dy = ev_total(y);
  if (dx != dy) return dx < dy;
  for (size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] > y[i];
  return false;
}

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

std::string print_monomial(const RingPtr& ring, const Expvec& ev) {
  std::string out;
  for (size_t i = 0; i < ev.size(); ++i) {
    if (!ev[i]) continue;
    if (!out.empty()) out += "*";
    out += ring->var(i).name;
    if (ev[i] != 1) out += "^" + std::to_string(ev[i]);
  }
  return out;
}

std::string print_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  // Terms descending in grevlex for readability.
  std::vector<const std::pair<const Expvec, Rational>*> ts;
  for (auto& t : p.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [](auto* a, auto* b) { return grevlex_less(b->first, a->first); });
  std::string out;
  for (auto* t : ts) {
    const Rational& c = t->second;
    bool neg = c < 0;
    Rational abs = neg ? Rational(-c) : c;
    std::string mono = print_monomial(p.ring(), t->first);
    std::string piece;
    if (mono.empty())
      piece = rat_to_string(abs);
    else if (abs == 1)
      piece = mono;
    else
      piece = rat_to_string(abs) + "*" + mono;
    if (out.empty())
      out = neg ? "-" + piece : piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace dcond
