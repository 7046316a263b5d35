#include <cctype>

#include "lpa/element.hpp"
#include "lpa/error.hpp"

namespace lpa {

namespace {

enum class Tok { Name, Number, Slash, Star, Ghost, Dot, Plus, Minus, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (is_head(c)) {
      std::size_t j = i;
      while (j < s.size() && is_tail(s[j])) ++j;
      out.push_back({Tok::Name, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (c == '*' && i + 1 < s.size() && s[i + 1] == '\'') {
      out.push_back({Tok::Ghost, "*'", i});
      i += 2;
    } else {
      Tok k;
      switch (c) {
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '.': k = Tok::Dot; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        default:
          throw Error("syntax error at position " + std::to_string(i) + ": unexpected '" +
                      std::string(1, c) + "'");
      }
      out.push_back({k, std::string(1, c), i});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const GraphPtr& g, std::string_view text) : g_(g), toks_(tokenize(text)) {}

  Element parse() {
    Element result(g_);
    bool negate = false;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) negate = next().kind == Tok::Minus;
    for (;;) {
      Element t = term();
      if (negate) result -= t;
      else result += t;
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        negate = next().kind == Tok::Minus;
        continue;
      }
      break;
    }
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return result;
  }

 private:
  struct Factor {
    Element value;
    Vertex source;
    Vertex range;
    std::string text;
  };

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("syntax error at position " + std::to_string(peek().pos) + ": " + what);
  }

  Element term() {
    if (peek().kind == Tok::Number) {
      Scalar c = rational();
      if (peek().kind == Tok::Star) {
        next();
        return c * monomial();
      }
      return c * Element::unit(g_);
    }
    return monomial();
  }

  Scalar rational() {
    std::string text = next().text;
    if (peek().kind == Tok::Slash) {
      next();
      if (peek().kind != Tok::Number) fail("expected denominator");
      text += "/" + next().text;
    }
    return parse_scalar(text);
  }

  Element monomial() {
    Factor acc = factor();
    while (peek().kind == Tok::Dot) {
      next();
      Factor f = factor();
      if (acc.range != f.source)
        throw Error("non-composable path: '" + acc.text + "' ends at '" + g_->name(acc.range) +
                    "' but '" + f.text + "' starts at '" + g_->name(f.source) + "'");
      acc.value = acc.value * f.value;
      acc.range = f.range;
      acc.text = f.text;
    }
    return acc.value;
  }

  Factor factor() {
    if (peek().kind != Tok::Name) fail("expected a vertex or edge name");
    std::string name = next().text;
    bool ghost = false;
    if (peek().kind == Tok::Ghost) {
      next();
      ghost = true;
    }
    if (auto v = g_->find_vertex(name)) {
      if (ghost) throw Error("'" + name + "' is a vertex and has no ghost");
      return {Element::vertex(g_, *v), *v, *v, name};
    }
    auto e = g_->find_edge(name);
    if (!e) throw Error("unknown vertex or edge '" + name + "'");
    if (ghost) return {Element::ghost(g_, *e), g_->rng(*e), g_->src(*e), name + "*'"};
    return {Element::edge(g_, *e), g_->src(*e), g_->rng(*e), name};
  }

  GraphPtr g_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const GraphPtr& g, std::string_view text) {
  return Parser(g, text).parse();
}

}  // namespace lpa
