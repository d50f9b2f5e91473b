#include "regmaps/relator.hpp"

#include <cctype>
#include <utility>

namespace regmaps {

RelatorExpr RelatorExpr::generator(Gen g) {
  RelatorExpr e;
  e.kind = Kind::kGenerator;
  e.gen = g;
  return e;
}

RelatorExpr RelatorExpr::product(std::vector<RelatorExpr> factors) {
  RelatorExpr e;
  e.kind = Kind::kProduct;
  e.children = std::move(factors);
  return e;
}

RelatorExpr RelatorExpr::pow(RelatorExpr base, unsigned k) {
  RelatorExpr e;
  e.kind = Kind::kPower;
  e.exponent = k;
  e.children.push_back(std::move(base));
  return e;
}

RelatorExpr RelatorExpr::conj(RelatorExpr x, RelatorExpr y) {
  RelatorExpr e;
  e.kind = Kind::kConjugation;
  e.children.push_back(std::move(x));
  e.children.push_back(std::move(y));
  return e;
}

RelatorExpr RelatorExpr::comm(RelatorExpr x, RelatorExpr y) {
  RelatorExpr e;
  e.kind = Kind::kCommutator;
  e.children.push_back(std::move(x));
  e.children.push_back(std::move(y));
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  RelatorExpr parse() {
    RelatorExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return e;
  }

 private:
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

  RelatorExpr parse_expr() {
    std::vector<RelatorExpr> factors;
    factors.push_back(parse_term());
    while (!at_end()) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        factors.push_back(parse_term());
      } else if (c == 'r' || c == '(' || c == '[') {
        factors.push_back(parse_term());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return std::move(factors.front());
    return RelatorExpr::product(std::move(factors));
  }

  RelatorExpr parse_term() {
    RelatorExpr e = parse_atom();
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        RelatorExpr by = parse_expr();
        expect(')');
        e = RelatorExpr::conj(std::move(e), std::move(by));
      } else {
        e = RelatorExpr::pow(std::move(e), parse_exponent());
      }
    }
    return e;
  }

  unsigned parse_exponent() {
    skip_ws();
    size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected exponent", pos_);
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 1u << 30) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (negative || v < 1) throw ParseError("power exponent must be >= 1", start);
    return static_cast<unsigned>(v);
  }

  RelatorExpr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == 'r') {
      if (pos_ + 1 >= text_.size() || text_[pos_ + 1] < '0' || text_[pos_ + 1] > '2')
        throw ParseError("expected r0, r1 or r2", pos_);
      Gen g = static_cast<Gen>(text_[pos_ + 1] - '0');
      pos_ += 2;
      return RelatorExpr::generator(g);
    }
    if (c == '(') {
      ++pos_;
      RelatorExpr e = parse_expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      RelatorExpr x = parse_expr();
      expect(',');
      RelatorExpr y = parse_expr();
      expect(']');
      return RelatorExpr::comm(std::move(x), std::move(y));
    }
    throw ParseError("unexpected character", pos_);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

RelatorExpr parse_relator(const std::string& text) { return Parser(text).parse(); }

Word flatten(const RelatorExpr& e) {
  switch (e.kind) {
    case RelatorExpr::Kind::kGenerator:
      return Word{e.gen};
    case RelatorExpr::Kind::kProduct: {
      Word out;
      for (const RelatorExpr& c : e.children) {
        Word w = flatten(c);
        out.insert(out.end(), w.begin(), w.end());
      }
      return out;
    }
    case RelatorExpr::Kind::kPower:
      return power(flatten(e.children[0]), e.exponent);
    case RelatorExpr::Kind::kConjugation:
      return conjugate(flatten(e.children[0]), flatten(e.children[1]));
    case RelatorExpr::Kind::kCommutator:
      return commutator(flatten(e.children[0]), flatten(e.children[1]));
  }
  throw std::logic_error("unreachable");
}

}  // namespace regmaps
