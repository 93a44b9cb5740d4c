#include "extword/parser.hpp"

#include <cctype>
#include <sstream>

namespace extword {

namespace {

struct Token {
  enum class Kind { Ident, InvIdent, Int, Caret, LParen, RParen, Semi, ExponentLit, Eq, End };
  Kind kind;
  std::string text;
  size_t col;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "syntax error at column " << (tok_.col + 1) << ": " << msg;
    throw invalid_input_error(os.str());
  }

private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.col = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::Kind::End, "", i_};
      return;
    }
    char c = s_[i_];
    auto ident = [&](size_t start) {
      size_t j = start;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      return j;
    };
    if (c == '~') {
      size_t j = ident(i_ + 1);
      if (j == i_ + 1) {
        tok_ = {Token::Kind::InvIdent, "", i_};
        throw invalid_input_error("syntax error at column " + std::to_string(i_ + 1) +
                                  ": '~' must prefix a symbol");
      }
      tok_ = {Token::Kind::InvIdent, s_.substr(i_ + 1, j - i_ - 1), i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = ident(i_);
      tok_ = {Token::Kind::Ident, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
      size_t j = i_ + 1;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Kind::Int, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (c == '[') {
      size_t j = s_.find(']', i_);
      if (j == std::string::npos)
        throw invalid_input_error("syntax error at column " + std::to_string(i_ + 1) +
                                  ": unterminated exponent literal");
      tok_ = {Token::Kind::ExponentLit, s_.substr(i_, j - i_ + 1), i_};
      i_ = j + 1;
      return;
    }
    switch (c) {
      case '^': tok_ = {Token::Kind::Caret, "^", i_}; break;
      case '(': tok_ = {Token::Kind::LParen, "(", i_}; break;
      case ')': tok_ = {Token::Kind::RParen, ")", i_}; break;
      case ';':
      case ',': tok_ = {Token::Kind::Semi, ";", i_}; break;
      case '=': tok_ = {Token::Kind::Eq, "=", i_}; break;
      default:
        throw invalid_input_error("syntax error at column " + std::to_string(i_ + 1) +
                                  ": unexpected character '" + std::string(1, c) + "'");
    }
    ++i_;
  }
  const std::string& s_;
  size_t i_ = 0;
  Token tok_{Token::Kind::End, "", 0};
};

const char* kBuiltins[] = {"raypair", "wm", "xd", "xinf", "hnn", "cdr", "atom"};

bool is_builtin(const std::string& name) {
  for (const char* b : kBuiltins)
    if (name == b) return true;
  return false;
}

class Parser {
public:
  explicit Parser(const std::string& s) : lx_(s) {}

  ExprPtr parse() {
    ExprPtr e = product();
    if (lx_.peek().kind != Token::Kind::End) lx_.fail("trailing input");
    return e;
  }

private:
  ExprPtr product() {
    auto out = std::make_shared<Expr>();
    out->kind = Expr::Kind::Product;
    for (;;) {
      auto k = lx_.peek().kind;
      if (k == Token::Kind::Ident || k == Token::Kind::InvIdent || k == Token::Kind::LParen) {
        out->args.push_back(power());
        continue;
      }
      break;
    }
    if (out->args.size() == 1) return out->args[0];
    return out;
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (lx_.peek().kind == Token::Kind::Caret) {
      lx_.take();
      if (lx_.peek().kind != Token::Kind::Int) lx_.fail("expected an integer exponent after '^'");
      auto out = std::make_shared<Expr>();
      out->kind = Expr::Kind::Power;
      out->number = Int(lx_.take().text);
      out->args.push_back(std::move(base));
      return out;
    }
    return base;
  }

  ExprPtr primary() {
    const Token& t = lx_.peek();
    if (t.kind == Token::Kind::LParen) {
      lx_.take();
      ExprPtr e = product();
      if (lx_.peek().kind != Token::Kind::RParen) lx_.fail("expected ')'");
      lx_.take();
      return e;
    }
    if (t.kind == Token::Kind::InvIdent) {
      Token tok = lx_.take();
      auto leaf = std::make_shared<Expr>();
      leaf->kind = Expr::Kind::Letter;  // resolved to letter-or-var by the session
      leaf->name = tok.text;
      auto out = std::make_shared<Expr>();
      out->kind = Expr::Kind::Power;
      out->number = -1;
      out->args.push_back(std::move(leaf));
      return out;
    }
    if (t.kind == Token::Kind::Ident) {
      Token tok = lx_.take();
      if (is_builtin(tok.text) && lx_.peek().kind == Token::Kind::LParen) {
        lx_.take();
        auto out = std::make_shared<Expr>();
        out->kind = Expr::Kind::Builtin;
        out->name = tok.text;
        if (lx_.peek().kind != Token::Kind::RParen) {
          out->args.push_back(builtin_arg());
          while (lx_.peek().kind == Token::Kind::Semi) {
            lx_.take();
            out->args.push_back(builtin_arg());
          }
        }
        if (lx_.peek().kind != Token::Kind::RParen) lx_.fail("expected ')' after builtin arguments");
        lx_.take();
        return out;
      }
      auto leaf = std::make_shared<Expr>();
      leaf->kind = Expr::Kind::Letter;
      leaf->name = tok.text;
      return leaf;
    }
    lx_.fail("expected a letter, variable, builtin, or '('");
  }

  ExprPtr builtin_arg() {
    const Token& t = lx_.peek();
    if (t.kind == Token::Kind::Int) {
      auto out = std::make_shared<Expr>();
      out->kind = Expr::Kind::IntArg;
      out->number = Int(lx_.take().text);
      return out;
    }
    if (t.kind == Token::Kind::ExponentLit) {
      auto out = std::make_shared<Expr>();
      out->kind = Expr::Kind::ExponentArg;
      out->literal = lx_.take().text;
      return out;
    }
    if (t.kind == Token::Kind::Ident && t.text == "c") {
      // 'c=[...]' sugar for the atom offset
      Token save = lx_.take();
      if (lx_.peek().kind == Token::Kind::Eq) {
        lx_.take();
        if (lx_.peek().kind != Token::Kind::ExponentLit) lx_.fail("expected '[...]' after 'c='");
        auto out = std::make_shared<Expr>();
        out->kind = Expr::Kind::ExponentArg;
        out->literal = lx_.take().text;
        return out;
      }
      // plain identifier named 'c': fall through as a product starting with it
      auto leaf = std::make_shared<Expr>();
      leaf->kind = Expr::Kind::Letter;
      leaf->name = save.text;
      auto rest = product();
      if (rest->kind == Expr::Kind::Product && rest->args.empty()) return leaf;
      auto out = std::make_shared<Expr>();
      out->kind = Expr::Kind::Product;
      out->args.push_back(leaf);
      out->args.push_back(rest);
      return out;
    }
    return product();
  }

  Lexer lx_;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Letter:
    case Expr::Kind::Var: return e.name;
    case Expr::Kind::IntArg: return e.number.get_str();
    case Expr::Kind::ExponentArg: return e.literal;
    case Expr::Kind::Power: {
      if (e.number == -1 && e.args[0]->kind == Expr::Kind::Letter) return "~" + e.args[0]->name;
      return "(" + print_expr(*e.args[0]) + ")^" + e.number.get_str();
    }
    case Expr::Kind::Product: {
      std::string out;
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ' ';
        out += print_expr(*e.args[i]);
      }
      return out;
    }
    case Expr::Kind::Builtin: {
      std::string out = e.name + "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ';';
        out += print_expr(*e.args[i]);
      }
      return out + ")";
    }
  }
  return "";
}

}  // namespace extword
