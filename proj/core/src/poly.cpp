#include "uconf/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace uconf {

BivarPoly BivarPoly::monomial(BigInt c, int u_exp, int v_exp) {
  if (u_exp < 0 || v_exp < 0) throw std::invalid_argument("BivarPoly: negative exponent");
  BivarPoly p;
  if (!uconf::is_zero(c)) p.terms_.emplace(std::make_pair(u_exp, v_exp), std::move(c));
  return p;
}

const BigInt& BivarPoly::coeff(int u_exp, int v_exp) const {
  static const BigInt kZero = 0;
  auto it = terms_.find(std::make_pair(u_exp, v_exp));
  return it == terms_.end() ? kZero : it->second;
}

BigInt BivarPoly::eval(const BigInt& u, const BigInt& v) const {
  BigInt sum = 0;
  for (const auto& [exps, c] : terms_) {
    BigInt term = c;
    for (int i = 0; i < exps.first; ++i) term *= u;
    for (int j = 0; j < exps.second; ++j) term *= v;
    sum += term;
  }
  return sum;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [exps, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
      it->second += c;
      if (uconf::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [exps, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(exps, -c);
    if (!inserted) {
      it->second -= c;
      if (uconf::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

BivarPoly operator-(const BivarPoly& a) {
  BivarPoly r;
  for (const auto& [exps, c] : a.terms_) r.terms_.emplace(exps, -c);
  return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto exps = std::make_pair(ea.first + eb.first, ea.second + eb.second);
      auto [it, inserted] = r.terms_.emplace(exps, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return uconf::is_zero(kv.second); });
  return r;
}

namespace {

void append_var(std::string& out, const char* name, int exp) {
  if (exp == 0) return;
  out += '*';
  out += name;
  if (exp > 1) {
    out += '^';
    out += std::to_string(exp);
  }
}

}  // namespace

std::string to_string(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    BigInt mag = negative ? BigInt(-c) : c;
    std::string term;
    if (mag != 1 || (exps.first == 0 && exps.second == 0)) term = mag.str();
    append_var(term, "u", exps.first);
    append_var(term, "v", exps.second);
    if (!term.empty() && term[0] == '*') term.erase(0, 1);
    out += term;
  }
  return out;
}

namespace {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return text_[pos_];
  }
  char take() {
    skip_ws();
    return text_[pos_++];
  }

  BigInt take_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw PolyParseError("polynomial: expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// factor := integer | ('u'|'v') ['^' integer]
// term   := factor ('*' factor)*
// poly   := ['+'|'-'] term (('+'|'-') term)*
BivarPoly parse_term(PolyLexer& lex) {
  BigInt coeff = 1;
  int u_exp = 0, v_exp = 0;
  bool more = true;
  while (more) {
    char c = lex.done() ? '\0' : lex.peek();
    if (c == 'u' || c == 'v') {
      lex.take();
      int exp = 1;
      if (!lex.done() && lex.peek() == '^') {
        lex.take();
        BigInt e = lex.take_integer();
        if (e > 1000000) throw PolyParseError("polynomial: exponent too large");
        exp = static_cast<int>(e);
      }
      (c == 'u' ? u_exp : v_exp) += exp;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= lex.take_integer();
    } else {
      throw PolyParseError("polynomial: unexpected character");
    }
    more = !lex.done() && lex.peek() == '*';
    if (more) lex.take();
  }
  return BivarPoly::monomial(std::move(coeff), u_exp, v_exp);
}

}  // namespace

BivarPoly parse_poly(std::string_view text) {
  PolyLexer lex(text);
  if (lex.done()) throw PolyParseError("polynomial: empty input");
  BivarPoly result;
  bool first = true;
  while (!lex.done()) {
    int sign = 1;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      lex.take();
      sign = (c == '-') ? -1 : 1;
    } else if (!first) {
      throw PolyParseError("polynomial: expected '+' or '-' between terms");
    }
    BivarPoly term = parse_term(lex);
    if (sign < 0) {
      result -= term;
    } else {
      result += term;
    }
    first = false;
  }
  return result;
}

}  // namespace uconf
