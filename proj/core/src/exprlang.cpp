#include "octe8/exprlang.hpp"

#include <cctype>

namespace octe8 {
namespace {

const char* kLowerNames[8] = {"1", "i", "j", "k", "kl", "jl", "il", "l"};
const char* kUpperNames[8] = {"1", "I", "J", "K", "KL", "JL", "IL", "L"};

struct Token {
  enum class Kind { Name, Number, Plus, Minus, Star, Comma, LBrack, RBrack,
                    LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t at = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      // a rational literal may continue as n/d
      if (j < s.size() && s[j] == '/' && j + 1 < s.size() &&
          std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
          ++j;
      }
      out.push_back({Token::Kind::Number, std::string(s.substr(i, j - i)), at});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Token::Kind::Name, std::string(s.substr(i, j - i)), at});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case ',': k = Token::Kind::Comma; break;
      case '[': k = Token::Kind::LBrack; break;
      case ']': k = Token::Kind::RBrack; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      default:
        throw ParseError(at, "a token", std::string(1, c));
    }
    out.push_back({k, std::string(1, c), at});
    ++i;
  }
  out.push_back({Token::Kind::End, "<end>", s.size()});
  return out;
}

// "1" is valid on both sides; otherwise the case decides the side.
// Returns (side, unit) or throws.
std::pair<int, int> resolve_unit(const Token& t, int required_side) {
  for (int u = 0; u < 8; ++u) {
    if (t.text == kLowerNames[u]) {
      if (required_side == 1 && u != 0)
        throw ParseError(t.offset, "a left-factor unit (uppercase)", t.text);
      return {0, u};
    }
    if (u > 0 && t.text == kUpperNames[u]) {
      if (required_side == 0)
        throw ParseError(t.offset, "a right-factor unit (lowercase)", t.text);
      return {1, u};
    }
  }
  throw ParseError(t.offset, "unit name", "unknown unit '" + t.text + "'");
}

struct Parser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  ElementExpr out;

  const Token& peek() const { return toks[pos]; }
  const Token& next() { return toks[pos++]; }
  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) throw ParseError(peek().offset, what, peek().text);
    ++pos;
  }
  int push(ExprNode n) {
    out.nodes.push_back(std::move(n));
    return static_cast<int>(out.nodes.size() - 1);
  }

  // unit := name | name ('+'|'-') name, both names on the same side.
  // Returns list of (side, unit, sign).
  std::vector<std::tuple<int, int, int>> parse_unit(int required_side) {
    if (peek().kind != Token::Kind::Name && peek().kind != Token::Kind::Number)
      throw ParseError(peek().offset, "unit name", peek().text);
    Token t = next();
    if (t.kind == Token::Kind::Number && t.text != "1")
      throw ParseError(t.offset, "unit name", t.text);
    auto [s, u] = t.kind == Token::Kind::Number
                      ? std::pair<int, int>{required_side < 0 ? 0 : required_side, 0}
                      : resolve_unit(t, required_side);
    std::vector<std::tuple<int, int, int>> units{{s, u, +1}};
    if (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      int sign = peek().kind == Token::Kind::Plus ? +1 : -1;
      ++pos;
      if (peek().kind != Token::Kind::Name)
        throw ParseError(peek().offset, "unit name", peek().text);
      Token t2 = next();
      auto [s2, u2] = resolve_unit(t2, s);
      if (s2 != s)
        throw ParseError(t2.offset, "unit from the same factor", t2.text);
      units.push_back({s2, u2, sign});
    }
    return units;
  }

  int parse_basisname(const Token& fam) {
    static const std::string fams = "XYZDSGA";
    std::size_t f = fams.find(fam.text[0]);
    expect(Token::Kind::LBrack, "'['");
    ExprNode node;
    node.kind = ExprNode::Kind::Basis;
    if (f <= 2) {
      auto left = parse_unit(1);
      expect(Token::Kind::Star, "'*'");
      auto right = parse_unit(0);
      expect(Token::Kind::RBrack, "']'");
      for (auto [ls, lu, lsign] : left)
        for (auto [rs, ru, rsign] : right) {
          (void)ls;
          (void)rs;
          int idx = static_cast<int>(f) * 64 + 8 * lu + ru;
          node.basis.push_back({idx, rat(lsign * rsign)});
        }
    } else {
      auto units = parse_unit(-1);
      expect(Token::Kind::RBrack, "']'");
      for (auto [s, u, sign] : units) {
        if (u == 0)
          throw ParseError(fam.offset, "an imaginary unit", "1");
        int idx = 192 + (static_cast<int>(f) - 3) * 14 + s * 7 + (u - 1);
        node.basis.push_back({idx, rat(sign)});
      }
    }
    return push(std::move(node));
  }

  int parse_atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Name && t.text.size() == 1 &&
        std::string("XYZDSGA").find(t.text[0]) != std::string::npos) {
      Token fam = next();
      return parse_basisname(fam);
    }
    if (t.kind == Token::Kind::LBrack) {
      ++pos;
      int lhs = parse_expr();
      expect(Token::Kind::Comma, "','");
      int rhs = parse_expr();
      expect(Token::Kind::RBrack, "']'");
      ExprNode node;
      node.kind = ExprNode::Kind::Bracket;
      node.lhs = lhs;
      node.rhs = rhs;
      return push(std::move(node));
    }
    if (t.kind == Token::Kind::LParen) {
      ++pos;
      int inner = parse_expr();
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    throw ParseError(t.offset, "basis name, '[' or '('", t.text);
  }

  int parse_term() {
    if (peek().kind == Token::Kind::Number) {
      Token num = next();
      Rat c = rat_parse(num.text);
      if (peek().kind == Token::Kind::Star) ++pos;
      int atom = parse_atom();
      ExprNode node;
      node.kind = ExprNode::Kind::Scaled;
      node.coeff = c;
      node.child = atom;
      return push(std::move(node));
    }
    return parse_atom();
  }

  int parse_expr() {
    ExprNode sum;
    sum.kind = ExprNode::Kind::Sum;
    int first_sign = +1;
    if (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      first_sign = peek().kind == Token::Kind::Plus ? +1 : -1;
      ++pos;
    }
    sum.summands.push_back({first_sign, parse_term()});
    while (peek().kind == Token::Kind::Plus ||
           peek().kind == Token::Kind::Minus) {
      int sign = peek().kind == Token::Kind::Plus ? +1 : -1;
      ++pos;
      sum.summands.push_back({sign, parse_term()});
    }
    if (sum.summands.size() == 1 && sum.summands[0].first == 1)
      return sum.summands[0].second;
    return push(std::move(sum));
  }
};

}  // namespace

int ElementExpr::root_arity() const {
  if (root < 0) return 0;
  const ExprNode& n = nodes[root];
  switch (n.kind) {
    case ExprNode::Kind::Sum:
      return static_cast<int>(n.summands.size());
    case ExprNode::Kind::Bracket:
      return 2;
    case ExprNode::Kind::Scaled:
      return 1;
    default:
      return 0;
  }
}

ElementExpr parse_element(std::string_view text) {
  auto toks = lex(text);
  Parser p{toks};
  p.out.root = p.parse_expr();
  if (p.peek().kind != Token::Kind::End)
    throw ParseError(p.peek().offset, "end of input", p.peek().text);
  return std::move(p.out);
}

namespace {

E8Vector eval_node(const ElementExpr& e, int idx, const E8Algebra& alg) {
  const ExprNode& n = e.nodes[idx];
  switch (n.kind) {
    case ExprNode::Kind::Basis: {
      E8Vector v;
      for (const auto& [b, w] : n.basis) v.c[b] += w;
      return v;
    }
    case ExprNode::Kind::Scaled: {
      E8Vector v = eval_node(e, n.child, alg);
      v *= n.coeff;
      return v;
    }
    case ExprNode::Kind::Bracket:
      return alg.bracket(eval_node(e, n.lhs, alg), eval_node(e, n.rhs, alg));
    case ExprNode::Kind::Sum: {
      E8Vector v;
      for (const auto& [sign, child] : n.summands) {
        E8Vector t = eval_node(e, child, alg);
        if (sign < 0)
          v -= t;
        else
          v += t;
      }
      return v;
    }
  }
  throw error("corrupt expression");
}

}  // namespace

E8Vector eval_element(const ElementExpr& expr, const E8Algebra& alg) {
  return eval_node(expr, expr.root, alg);
}

std::string print_element(const E8Vector& v, const E8Algebra& alg) {
  std::string out;
  for (int i = 0; i < 248; ++i) {
    if (is_zero(v.c[i])) continue;
    Rat c = v.c[i];
    bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rat a = neg ? Rat(-c) : c;
    if (a != 1) {
      out += rat_str(a);
      out += "*";
    }
    out += alg.basis_name(i);
  }
  if (out.empty()) return "0*" + alg.basis_name(0);
  return out;
}

}  // namespace octe8
