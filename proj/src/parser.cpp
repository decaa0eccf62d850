#include "qschur/parser.hpp"

#include <cctype>
#include <string>

#include "qschur/errors.hpp"
#include "qschur/laurent.hpp"

namespace qschur {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, int n, int r) : text_(text), n_(n), r_(r) {}

  Element parse() {
    Element out;
    skip_ws();
    int sign = +1;
    if (peek() == '+' || peek() == '-') {
      if (get() == '-') sign = -1;
    }
    out = out + parse_term(sign);
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1 : +1;
      out = out + parse_term(sign);
      skip_ws();
    }
    if (pos_ != text_.size()) fail("trailing input");
    return out;
  }

 private:
  Element parse_term(int sign) {
    skip_ws();
    RatFunc coeff(sign);
    if (peek() == '(') {
      coeff = coeff * RatFunc(parse_paren_poly());
      skip_ws();
    }
    Word w;
    bool any = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == 'E' || c == '1' || c == 'R') {
        w.push_back(parse_gen());
        any = true;
      } else {
        break;
      }
    }
    if (!any) fail("expected a generator");
    return Element(std::move(w), coeff);
  }

  Laurent parse_paren_poly() {
    expect('(');
    size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size() && depth > 0) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')') --depth;
      ++pos_;
    }
    if (depth != 0) fail("unterminated '('");
    std::string_view inner = text_.substr(start, pos_ - 1 - start);
    return Laurent::parse(inner);
  }

  Generator parse_gen() {
    char c = get();
    if (c == 'R') {
      // "R" or "R^-1"
      if (peek() == '^') {
        ++pos_;
        if (text_.substr(pos_, 2) != "-1") fail("expected R^-1");
        pos_ += 2;
        return Generator::rshift(-1);
      }
      return Generator::rshift(+1);
    }
    if (c == '1') {
      expect('_');
      expect('(');
      std::vector<int> entries;
      entries.push_back(parse_int());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        entries.push_back(parse_int());
        skip_ws();
      }
      expect(')');
      if ((int)entries.size() != n_) fail("idempotent must have exactly n parts");
      for (int e : entries)
        if (e < 0) fail("idempotent entries must be nonnegative");
      int sum = 0;
      for (int e : entries) sum += e;
      if (sum != r_) fail("idempotent entries must sum to r");
      return Generator::idempotent(Composition(std::move(entries)));
    }
    // c == 'E'
    int sign = +1;
    if (peek() == 'd') {
      ++pos_;
      return Generator::edelta(+1);
    }
    if (peek() == '-') {
      ++pos_;
      if (peek() == 'd') {
        ++pos_;
        return Generator::edelta(-1);
      }
      sign = -1;
    }
    int color = parse_int();
    if (color < 1 || color > n_)
      throw UnknownColor("color " + std::to_string(color) + " outside 1.." + std::to_string(n_));
    int a = 1;
    if (peek() == '^') {
      ++pos_;
      expect('(');
      a = parse_int();
      expect(')');
      if (a < 0) fail("divided-power exponent must be nonnegative");
    }
    if (a == 0) fail("divided-power exponent 0 is not a generator");
    return Generator::divided(sign, color, a);
  }

  int parse_int() {
    skip_ws();
    size_t start = pos_;
    if (peek() == '-') ++pos_;
    if (!std::isdigit((unsigned char)peek())) fail("expected an integer");
    while (std::isdigit((unsigned char)peek())) ++pos_;
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_++];
  }
  void expect(char c) {
    skip_ws();
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  size_t pos_ = 0;
  int n_, r_;
};

}  // namespace

Element parse_element(std::string_view text, int n, int r) {
  return Cursor(text, n, r).parse();
}

}  // namespace qschur
