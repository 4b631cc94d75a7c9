#include "attackmc/goal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace attackmc {

namespace {

struct Token {
  enum class Kind { Ident, LParen, RParen, Comma, Not, AndAnd, OrOr, End };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      bump();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text = "<end of input>";
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        id += text_[pos_];
        bump();
      }
      tok_ = {Token::Kind::Ident, std::move(id), tok_.line, tok_.col};
      return;
    }
    switch (c) {
      case '(': single(Token::Kind::LParen, "("); return;
      case ')': single(Token::Kind::RParen, ")"); return;
      case ',': single(Token::Kind::Comma, ","); return;
      case '!': single(Token::Kind::Not, "!"); return;
      case '&':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '&') {
          bump();
          single(Token::Kind::AndAnd, "&&");
          return;
        }
        break;
      case '|':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '|') {
          bump();
          single(Token::Kind::OrOr, "||");
          return;
        }
        break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void single(Token::Kind k, const char* text) {
    tok_.kind = k;
    tok_.text = text;
    bump();
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{};
};

GoalPtr mk(GoalExpr g) { return std::make_shared<GoalExpr>(std::move(g)); }

class Parser {
 public:
  Parser(const std::string& text, const ModelFile& model)
      : lex_(text), model_(model) {}

  GoalPtr parse_goal_expr() {
    GoalPtr g = or_goal();
    expect_end();
    return g;
  }

  ParsedCtl parse_ctl_expr() {
    FormulaPtr f = or_formula();
    expect_end();
    return {std::move(f), std::move(atoms_)};
  }

 private:
  [[noreturn]] void err(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col);
  }

  void expect_end() {
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::End) err("unexpected trailing input \"" + t.text + "\"", t);
  }

  Token expect(Token::Kind k, const char* what) {
    Token t = lex_.take();
    if (t.kind != k) err(std::string("expected ") + what + ", got \"" + t.text + "\"", t);
    return t;
  }

  // ---- goal grammar --------------------------------------------------

  GoalPtr or_goal() {
    GoalPtr g = and_goal();
    while (lex_.peek().kind == Token::Kind::OrOr) {
      lex_.take();
      g = mk({GoalExpr::Kind::Or, {}, {}, {}, g, and_goal()});
    }
    return g;
  }

  GoalPtr and_goal() {
    GoalPtr g = not_goal();
    while (lex_.peek().kind == Token::Kind::AndAnd) {
      lex_.take();
      g = mk({GoalExpr::Kind::And, {}, {}, {}, g, not_goal()});
    }
    return g;
  }

  GoalPtr not_goal() {
    if (lex_.peek().kind == Token::Kind::Not) {
      lex_.take();
      return mk({GoalExpr::Kind::Not, {}, {}, {}, not_goal(), nullptr});
    }
    return primary_goal();
  }

  GoalPtr primary_goal() {
    Token t = lex_.peek();
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      GoalPtr g = or_goal();
      expect(Token::Kind::RParen, "\")\"");
      return g;
    }
    if (t.kind != Token::Kind::Ident) err("expected goal atom, got \"" + t.text + "\"", t);
    lex_.take();
    if (t.text == "policy_violation")
      return mk({GoalExpr::Kind::PolicyViolation, {}, {}, {}, nullptr, nullptr});
    if (t.text == "enables") return enables_atom();
    err("unknown goal atom \"" + t.text + "\"", t);
  }

  GoalPtr enables_atom() {
    expect(Token::Kind::LParen, "\"(\"");
    Token loc = expect(Token::Kind::Ident, "location");
    if (!std::binary_search(model_.locations.begin(), model_.locations.end(), loc.text))
      err("unknown location \"" + loc.text + "\"", loc);
    expect(Token::Kind::Comma, "\",\"");
    Token actor = expect(Token::Kind::Ident, "actor");
    if (!model_.actors.contains(actor.text))
      err("unknown actor \"" + actor.text + "\"", actor);
    expect(Token::Kind::Comma, "\",\"");
    Token act = expect(Token::Kind::Ident, "action");
    Action action;
    if (act.text == "move") action = Action::Move;
    else if (act.text == "get") action = Action::Get;
    else if (act.text == "put") action = Action::Put;
    else err("unknown action \"" + act.text + "\"", act);
    expect(Token::Kind::RParen, "\")\"");
    return mk({GoalExpr::Kind::Enables, loc.text, actor.text, action, nullptr, nullptr});
  }

  // ---- CTL layer -----------------------------------------------------

  static std::optional<CtlOp> temporal_op(const std::string& id) {
    if (id == "EX") return CtlOp::EX;
    if (id == "AX") return CtlOp::AX;
    if (id == "EF") return CtlOp::EF;
    if (id == "AF") return CtlOp::AF;
    if (id == "EG") return CtlOp::EG;
    if (id == "AG") return CtlOp::AG;
    return std::nullopt;
  }

  FormulaPtr or_formula() {
    FormulaPtr f = and_formula();
    while (lex_.peek().kind == Token::Kind::OrOr) {
      lex_.take();
      f = f_disj(f, and_formula());
    }
    return f;
  }

  FormulaPtr and_formula() {
    FormulaPtr f = not_formula();
    while (lex_.peek().kind == Token::Kind::AndAnd) {
      lex_.take();
      f = f_conj(f, not_formula());
    }
    return f;
  }

  FormulaPtr not_formula() {
    if (lex_.peek().kind == Token::Kind::Not) {
      lex_.take();
      return f_neg(not_formula());
    }
    return primary_formula();
  }

  FormulaPtr primary_formula() {
    Token t = lex_.peek();
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      FormulaPtr f = or_formula();
      expect(Token::Kind::RParen, "\")\"");
      return f;
    }
    if (t.kind == Token::Kind::Ident) {
      if (auto op = temporal_op(t.text)) {
        lex_.take();
        expect(Token::Kind::LParen, "\"(\"");
        FormulaPtr f = or_formula();
        expect(Token::Kind::RParen, "\")\"");
        return f_unary(*op, std::move(f));
      }
    }
    GoalPtr g = primary_goal();
    std::string name = to_string(*g);
    atoms_.emplace(name, g);
    return f_atom(std::move(name));
  }

  Lexer lex_;
  const ModelFile& model_;
  std::map<std::string, GoalPtr> atoms_;
};

}  // namespace

GoalPtr parse_goal(const std::string& text, const ModelFile& model) {
  return Parser(text, model).parse_goal_expr();
}

ParsedCtl parse_ctl(const std::string& text, const ModelFile& model) {
  return Parser(text, model).parse_ctl_expr();
}

std::string to_string(const GoalExpr& g) {
  std::ostringstream os;
  switch (g.kind) {
    case GoalExpr::Kind::Enables:
      os << "enables(" << g.loc << ", " << g.actor << ", " << to_string(g.action) << ")";
      break;
    case GoalExpr::Kind::PolicyViolation:
      os << "policy_violation";
      break;
    case GoalExpr::Kind::Not: {
      const GoalExpr& a = *g.lhs;
      bool atom = a.kind == GoalExpr::Kind::Enables ||
                  a.kind == GoalExpr::Kind::PolicyViolation ||
                  a.kind == GoalExpr::Kind::Not;
      os << "!" << (atom ? "" : "(") << to_string(a) << (atom ? "" : ")");
      break;
    }
    case GoalExpr::Kind::And: {
      auto wrap = [&](const GoalExpr& a, bool strict) {
        bool parens = a.kind == GoalExpr::Kind::Or ||
                      (strict && a.kind == GoalExpr::Kind::And);
        return parens ? "(" + to_string(a) + ")" : to_string(a);
      };
      os << wrap(*g.lhs, false) << " && " << wrap(*g.rhs, true);
      break;
    }
    case GoalExpr::Kind::Or: {
      auto wrap = [&](const GoalExpr& a, bool strict) {
        bool parens = strict && a.kind == GoalExpr::Kind::Or;
        return parens ? "(" + to_string(a) + ")" : to_string(a);
      };
      os << wrap(*g.lhs, false) << " || " << wrap(*g.rhs, true);
      break;
    }
  }
  return os.str();
}

bool eval_goal(const GoalExpr& g, const EInfrastructure& state) {
  switch (g.kind) {
    case GoalExpr::Kind::Enables:
      return policy_allows(state.policy, g.loc, g.actor, g.action);
    case GoalExpr::Kind::PolicyViolation:
      return !global_policy(eset_i(state));
    case GoalExpr::Kind::Not:
      return !eval_goal(*g.lhs, state);
    case GoalExpr::Kind::And:
      return eval_goal(*g.lhs, state) && eval_goal(*g.rhs, state);
    case GoalExpr::Kind::Or:
      return eval_goal(*g.lhs, state) || eval_goal(*g.rhs, state);
  }
  return false;
}

StatePredicate goal_predicate(GoalPtr g) {
  return [g = std::move(g)](const EInfrastructure& state) {
    return eval_goal(*g, state);
  };
}

}  // namespace attackmc
