#include "jacring/parse.hpp"

#include <cctype>
#include <string>

namespace jacring {

namespace {

constexpr int kMaxExponent = 100000;

class Parser {
 public:
  Parser(std::string_view text, const Grading& grading, bool allow_parameter)
      : text_(text),
        num_vars_(grading.num_vars()),
        allow_parameter_(allow_parameter),
        ring_{allow_parameter ? extend(grading) : grading, RationalField{}} {}

  Polynomial<RationalField> parse() {
    auto p = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  static Grading extend(const Grading& g) {
    auto w = g.weights();
    w.push_back(1);
    return Grading(std::move(w));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int small_integer(const char* what) {
    std::size_t start = pos_;
    mpz_class v = integer();
    if (v > kMaxExponent) {
      pos_ = start;
      fail(std::string(what) + " " + v.get_str() + " is too large");
    }
    return static_cast<int>(v.get_si());
  }

  Polynomial<RationalField> poly() {
    Polynomial<RationalField> acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    for (;;) {
      auto t = term();
      acc = negate ? acc - t : acc + t;
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return acc;
      }
    }
  }

  Polynomial<RationalField> term() {
    auto p = atom();
    while (accept('*')) p = p * atom();
    return p;
  }

  Polynomial<RationalField> atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial<RationalField>::constant(ring_, mpq_class(integer()));
    }
    if (c == '(') {
      ++pos_;
      auto inner = poly();
      if (!accept(')')) fail("expected ')'");
      return maybe_power(std::move(inner));
    }
    if (c == 'x') {
      std::size_t start = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a variable index after 'x'");
      }
      int idx = small_integer("variable index");
      if (static_cast<std::size_t>(idx) >= num_vars_) {
        pos_ = start;
        fail("variable x" + std::to_string(idx) + " out of range (ring has " +
             std::to_string(num_vars_) + " variables)");
      }
      return maybe_power(Polynomial<RationalField>::variable(ring_, idx));
    }
    if (c == 't' && allow_parameter_) {
      ++pos_;
      return maybe_power(Polynomial<RationalField>::variable(ring_, num_vars_));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial<RationalField> maybe_power(Polynomial<RationalField> base) {
    if (!accept('^')) return base;
    return base.pow(static_cast<unsigned>(small_integer("exponent")));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t num_vars_;
  bool allow_parameter_;
  Ring<RationalField> ring_;
};

}  // namespace

Polynomial<RationalField> parse_rational_polynomial(std::string_view text,
                                                    const Grading& grading,
                                                    bool require_homogeneous) {
  auto p = Parser(text, grading, false).parse();
  if (require_homogeneous && !p.is_homogeneous()) {
    throw NotHomogeneous("polynomial '" + std::string(text) + "' is not homogeneous");
  }
  return p;
}

Polynomial<RationalField> parse_parametric_polynomial(std::string_view text,
                                                      const Grading& grading) {
  return Parser(text, grading, true).parse();
}

std::vector<Polynomial<RationalField>> parse_polynomial_list(std::string_view text,
                                                             const Grading& grading) {
  std::vector<Polynomial<RationalField>> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      try {
        out.push_back(parse_rational_polynomial(text.substr(start, i - start), grading));
      } catch (const ParseError& e) {
        throw ParseError("in list entry " + std::to_string(out.size()) + ": " + e.what(),
                         start + e.position());
      }
      start = i + 1;
    }
  }
  return out;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw InputError("'" + s + "' is not a rational number");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw InputError("'" + s + "' has zero denominator");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace jacring
