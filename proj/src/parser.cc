// Copyright 2026 The scforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Lexer and recursive-descent parser for the `.sc` dialect.

#include <algorithm>
#include <cctype>
#include <sstream>

#include "scforge/errors.h"
#include "scforge/syntax.h"

namespace scforge {
namespace {

enum class TokKind { kIdent, kInt, kStereo, kPunct, kEnd };

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int col;
};

const char* const kPuncts[] = {"->", "==", "!=", "<=", ">=", "&&", "||", "<",
                               ">",  "=",  "!",  "&",  "+",  "-",  ":",  ",",
                               ";",  "/",  "(",  ")",  "[",  "]",  "{",  "}"};

std::vector<Token> Lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.compare(i, 2, "//") == 0) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (text.compare(i, 2, "/*") == 0) {
      int l0 = line, c0 = col;
      size_t end = text.find("*/", i + 2);
      if (end == std::string::npos) throw LexError(l0, c0, "unterminated comment");
      advance(end + 2 - i);
      continue;
    }
    int l0 = line, c0 = col;
    if (text.compare(i, 2, "<<") == 0) {
      size_t end = text.find(">>", i + 2);
      if (end == std::string::npos) {
        throw LexError(l0, c0, "unterminated stereotype");
      }
      out.push_back({TokKind::kStereo, text.substr(i + 2, end - i - 2), l0, c0});
      advance(end + 2 - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j - i > 18) throw LexError(l0, c0, "integer literal too large");
      out.push_back({TokKind::kInt, text.substr(i, j - i), l0, c0});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_' || text[j] == '$')) {
        ++j;
      }
      out.push_back({TokKind::kIdent, text.substr(i, j - i), l0, c0});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const char* p : kPuncts) {
      size_t n = std::char_traits<char>::length(p);
      if (text.compare(i, n, p) == 0) {
        out.push_back({TokKind::kPunct, p, l0, c0});
        advance(n);
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw LexError(l0, c0, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({TokKind::kEnd, "", line, col});
  return out;
}

bool IsKeyword(const std::string& s) {
  static const std::set<std::string> kw = {
      "statechart", "for",   "state", "initial",  "final",
      "entry",      "exit",  "do",    "true",     "false",
      "skip",       "setTimer", "stopTimer", "check", "exception",
      "matchPattern"};
  return kw.count(s) > 0;
}

// Whitespace-normalized stereotype text: trimmed, single spaces, no spaces
// around ':' or '='.
std::string NormalizeStereo(const std::string& raw) {
  std::string collapsed;
  bool space = false;
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !collapsed.empty()) collapsed += ' ';
    space = false;
    collapsed += c;
  }
  std::string out;
  for (size_t i = 0; i < collapsed.size(); ++i) {
    char c = collapsed[i];
    if (c == ' ' && ((i + 1 < collapsed.size() &&
                      (collapsed[i + 1] == ':' || collapsed[i + 1] == '=')) ||
                     (!out.empty() && (out.back() == ':' || out.back() == '=')))) {
      continue;
    }
    out += c;
  }
  return out;
}

std::vector<std::string> SplitStereo(const std::string& raw) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : raw) {
    if (c == ',') {
      out.push_back(NormalizeStereo(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(NormalizeStereo(cur));
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, ParseOptions opts)
      : toks_(Lex(text)), opts_(opts) {}

  SCFull Chart() {
    SCFull sc;
    for (const auto& [s, tok] : Stereos()) {
      if (s == "prio:inner") {
        sc.stereos.insert(ChartStereo::kPrioInner);
      } else if (s == "prio:outer") {
        sc.stereos.insert(ChartStereo::kPrioOuter);
      } else if (s == "completion:ignore") {
        sc.stereos.insert(ChartStereo::kCompletionIgnore);
      } else if (s == "completion:chaos") {
        sc.stereos.insert(ChartStereo::kCompletionChaos);
      } else if (s == "completion:error") {
        sc.stereos.insert(ChartStereo::kCompletionError);
      } else if (s == "action conditions:sequential") {
        sc.stereos.insert(ChartStereo::kActionConditionsSequential);
      } else {
        Fail(tok, "chart stereotype");
      }
    }
    Keyword("statechart");
    sc.diagram_name = Name("diagram name");
    if (AcceptKeyword("for")) {
      sc.class_name = Name("class name");
    } else {
      sc.class_name = sc.diagram_name;
    }
    Punct("{");
    while (!AtPunct("}")) Element(sc, nullptr);
    Punct("}");
    End();
    sc.Normalize();
    return sc;
  }

  Cond CondOnly() {
    Cond c = ParseCondition();
    End();
    return c;
  }
  Expr ExprOnly() {
    Expr e = ParseExpression();
    End();
    return e;
  }
  Stmt StmtOnly() {
    Stmt s = Statements();
    End();
    return s;
  }
  Call CallOnly() {
    Call c = ParseCallExpr();
    End();
    return c;
  }
  Pattern PatternOnly() {
    Pattern p = ParsePat();
    End();
    return p;
  }
  Value ValueOnly() {
    Value v = ParseVal();
    End();
    return v;
  }
  Message MessageOnly() {
    Message m;
    m.exception = AcceptKeyword("exception");
    m.name = Name("operation name");
    Punct("(");
    if (!AtPunct(")")) {
      m.args.push_back(ParseVal());
      while (AcceptPunct(",")) m.args.push_back(ParseVal());
    }
    Punct(")");
    End();
    return m;
  }

 private:
  const Token& Peek(size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = Peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  static std::string Describe(const Token& t) {
    switch (t.kind) {
      case TokKind::kEnd:
        return "end of input";
      case TokKind::kStereo:
        return "'<<" + t.text + ">>'";
      default:
        return "'" + t.text + "'";
    }
  }

  [[noreturn]] void Fail(const Token& t, const std::string& expected) const {
    throw SyntaxError(t.line, t.col, expected, Describe(t));
  }

  bool AtPunct(const char* p) const {
    return Peek().kind == TokKind::kPunct && Peek().text == p;
  }
  bool AtKeyword(const char* k, size_t ahead = 0) const {
    return Peek(ahead).kind == TokKind::kIdent && Peek(ahead).text == k;
  }
  bool AcceptPunct(const char* p) {
    if (!AtPunct(p)) return false;
    Next();
    return true;
  }
  bool AcceptKeyword(const char* k) {
    if (!AtKeyword(k)) return false;
    Next();
    return true;
  }
  void Punct(const char* p) {
    if (!AcceptPunct(p)) Fail(Peek(), std::string("'") + p + "'");
  }
  void Keyword(const char* k) {
    if (!AcceptKeyword(k)) Fail(Peek(), std::string("'") + k + "'");
  }
  void End() {
    if (Peek().kind != TokKind::kEnd) Fail(Peek(), "end of input");
  }

  std::string Name(const std::string& what) {
    const Token& t = Peek();
    if (t.kind != TokKind::kIdent || IsKeyword(t.text)) Fail(t, what);
    Next();
    return t.text;
  }

  void Reserved(const Token& t, const std::string& why) const {
    throw ReservedIdentifier(std::to_string(t.line) + ":" +
                             std::to_string(t.col) + ": '" + t.text +
                             "' is reserved (" + why + ")");
  }

  std::string StateName() {
    const Token& t = Peek();
    std::string n = Name("state name");
    if (!opts_.allow_reserved && n.find('$') != std::string::npos) {
      Reserved(t, "'$' marks generated names");
    }
    return n;
  }

  std::string VarName() {
    const Token& t = Peek();
    std::string n = Name("variable");
    if (!opts_.allow_reserved) {
      if (n.find('$') != std::string::npos) Reserved(t, "'$' marks internal names");
      if (IsInputParamName(n)) Reserved(t, "generated input parameter");
    }
    return n;
  }

  std::vector<std::pair<std::string, Token>> Stereos() {
    std::vector<std::pair<std::string, Token>> out;
    while (Peek().kind == TokKind::kStereo) {
      Token t = Next();
      for (auto& s : SplitStereo(t.text)) out.emplace_back(s, t);
    }
    return out;
  }

  static void Conjoin(std::optional<Cond>& slot, Cond c) {
    slot = slot ? Cond::And(*slot, std::move(c)) : std::move(c);
  }

  // One chart or state-body element. `owner` is the enclosing state.
  void Element(SCFull& sc, FullState* owner) {
    if (AtPunct("[")) {
      Next();
      Cond c = ParseCondition();
      Punct("]");
      Punct(";");
      if (owner != nullptr) {
        Conjoin(owner->inv, std::move(c));
      } else {
        Conjoin(sc.inv, std::move(c));
      }
      return;
    }
    if (owner != nullptr) {
      if (AtKeyword("entry") || AtKeyword("exit") || AtKeyword("do")) {
        const Token& kw = Next();
        std::optional<Action>& slot = kw.text == "entry"  ? owner->entry
                                      : kw.text == "exit" ? owner->exit
                                                          : owner->do_;
        if (slot) Fail(kw, "at most one " + kw.text + " action");
        slot = ActionPart();
        Punct(";");
        return;
      }
      if (AtPunct("->")) {
        Next();
        Punct(":");
        InternT it;
        if (AcceptPunct("[")) {
          it.pre = ParseCondition();
          Punct("]");
        }
        it.call = ParseCallExpr();
        if (AtPunct("/")) it.act = ActionPart();
        Punct(";");
        owner->internT.insert(std::move(it));
        return;
      }
    }
    size_t start = pos_;
    auto stereos = Stereos();
    if (AtKeyword("initial") || AtKeyword("final") || AtKeyword("state")) {
      State(sc, owner, stereos);
      return;
    }
    if (Peek().kind == TokKind::kIdent && !IsKeyword(Peek().text)) {
      Transition(sc, stereos);
      return;
    }
    pos_ = start;
    Fail(Peek(), "state, transition or invariant");
  }

  void State(SCFull& sc, FullState* owner,
             const std::vector<std::pair<std::string, Token>>& stereos) {
    FullState st;
    for (const auto& [s, tok] : stereos) {
      if (s == "error") {
        st.stereos.insert(StateStereo::kError);
      } else if (s == "exception") {
        st.stereos.insert(StateStereo::kException);
      } else {
        Fail(tok, "state stereotype");
      }
    }
    while (true) {
      if (AcceptKeyword("initial")) {
        st.modifiers.insert(Modifier::kInitial);
      } else if (AcceptKeyword("final")) {
        st.modifiers.insert(Modifier::kFinal);
      } else {
        break;
      }
    }
    const Token& kw = Peek();
    Keyword("state");
    st.pos = {kw.line, kw.col};
    st.name = StateName();
    if (owner != nullptr) sc.sub.insert({st.name, owner->name});
    if (AcceptPunct(";")) {
      sc.states.push_back(std::move(st));
      return;
    }
    Punct("{");
    // Children are appended to sc.states; keep the state by index so the
    // vector may grow.
    size_t index = sc.states.size();
    sc.states.push_back(std::move(st));
    while (!AtPunct("}")) {
      FullState copy = sc.states[index];
      Element(sc, &copy);
      sc.states[index] = std::move(copy);
    }
    Punct("}");
    AcceptPunct(";");
  }

  void Transition(SCFull& sc,
                  const std::vector<std::pair<std::string, Token>>& stereos) {
    Trans t;
    for (const auto& [s, tok] : stereos) {
      const std::string prefix = "prio=";
      if (s.rfind(prefix, 0) == 0 && s.size() > prefix.size() &&
          std::all_of(s.begin() + prefix.size(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }) && s.size() - prefix.size() <= 9) {
        if (t.prio) Fail(tok, "a single priority stereotype");
        t.prio = std::stoi(s.substr(prefix.size()));
      } else {
        Fail(tok, "transition stereotype 'prio = n'");
      }
    }
    const Token& first = Peek();
    t.pos = {first.line, first.col};
    t.src = StateName();
    Punct("->");
    t.trg = StateName();
    Punct(":");
    if (AcceptPunct("[")) {
      t.pre = ParseCondition();
      Punct("]");
    }
    t.call = ParseCallExpr();
    if (AtPunct("/")) t.act = ActionPart();
    Punct(";");
    sc.trans.insert(std::move(t));
  }

  Action ActionPart() {
    Punct("/");
    Action a;
    a.stmt = Statements();
    if (AcceptPunct("[")) {
      a.post = ParseCondition();
      Punct("]");
    }
    return a;
  }

  Stmt Statements() {
    Stmt s = Statement();
    while (AcceptPunct("&")) s = s & Statement();
    return s;
  }

  Stmt Statement() {
    if (AcceptKeyword("skip")) return Stmt{};
    if (AcceptKeyword("setTimer")) return Stmt{{Prim::SetTimer()}};
    if (AcceptKeyword("stopTimer")) return Stmt{{Prim::StopTimer()}};
    if (AcceptKeyword("check")) {
      Punct("[");
      Cond c = ParseCondition();
      Punct("]");
      return Stmt{{Prim::Check(std::move(c))}};
    }
    bool exception = AcceptKeyword("exception");
    const Token& t = Peek();
    if (t.kind != TokKind::kIdent || IsKeyword(t.text)) Fail(t, "statement");
    if (!exception && Peek(1).kind == TokKind::kPunct && Peek(1).text == "=") {
      std::string var = VarName();
      Punct("=");
      return Stmt{{Prim::Assign(var, ParseExpression())}};
    }
    std::string name = Name("operation name");
    Punct("(");
    std::vector<Expr> args;
    if (!AtPunct(")")) {
      args.push_back(ParseExpression());
      while (AcceptPunct(",")) args.push_back(ParseExpression());
    }
    Punct(")");
    return Stmt{{Prim::Send(name, std::move(args), exception)}};
  }

  Call ParseCallExpr() {
    Call c;
    c.exception = AcceptKeyword("exception");
    const Token& t = Peek();
    c.name = Name("trigger");
    if (!opts_.allow_reserved) {
      if (c.name == kTimeoutName) Reserved(t, "timer trigger");
      if (c.name.find('$') != std::string::npos) Reserved(t, "'$' marks internal names");
    }
    Punct("(");
    if (!AtPunct(")")) {
      c.args.push_back(ParsePat());
      while (AcceptPunct(",")) c.args.push_back(ParsePat());
    }
    Punct(")");
    return c;
  }

  // pattern := part (':' pattern)?
  Pattern ParsePat() {
    Pattern head = PatPart();
    if (AcceptPunct(":")) return Pattern::Cons(std::move(head), ParsePat());
    return head;
  }

  static bool Ground(const Pattern& p) {
    if (p.kind == Pattern::Kind::kLit || p.kind == Pattern::Kind::kNil) return true;
    if (p.kind == Pattern::Kind::kCons) return Ground(p.parts[0]) && Ground(p.parts[1]);
    return false;
  }

  static Value GroundValue(const Pattern& p) {
    if (p.kind == Pattern::Kind::kLit) return p.lit;
    if (p.kind == Pattern::Kind::kNil) return Value(List{});
    List out{GroundValue(p.parts[0])};
    const List& tail = GroundValue(p.parts[1]).as_list();
    out.insert(out.end(), tail.begin(), tail.end());
    return Value(std::move(out));
  }

  std::int64_t IntLit() {
    const Token& t = Peek();
    if (t.kind != TokKind::kInt) Fail(t, "integer");
    Next();
    return std::stoll(t.text);
  }

  Pattern PatPart() {
    const Token& t = Peek();
    if (AcceptPunct("-")) return Pattern::Lit(Value(-IntLit()));
    if (t.kind == TokKind::kInt) return Pattern::Lit(Value(IntLit()));
    if (AcceptKeyword("true")) return Pattern::Lit(Value(true));
    if (AcceptKeyword("false")) return Pattern::Lit(Value(false));
    if (AcceptPunct("(")) {
      Pattern p = ParsePat();
      Punct(")");
      return p;
    }
    if (AcceptPunct("[")) {
      if (AcceptPunct("]")) return Pattern::Nil();
      std::vector<Pattern> items{ParsePat()};
      while (AcceptPunct(",")) items.push_back(ParsePat());
      Punct("]");
      bool ground = std::all_of(items.begin(), items.end(), Ground);
      if (ground) {
        List l;
        for (const auto& p : items) l.push_back(GroundValue(p));
        return Pattern::Lit(Value(std::move(l)));
      }
      Pattern acc = Pattern::Nil();
      for (auto it = items.rbegin(); it != items.rend(); ++it) {
        acc = Pattern::Cons(*it, acc);
      }
      return acc;
    }
    std::string var = VarName();
    if (AtPunct("+") || AtPunct("-")) {
      bool plus = Next().text == "+";
      std::int64_t k = IntLit();
      return Pattern::Plus(var, plus ? k : -k);
    }
    return Pattern::Var(var);
  }

  Value ParseVal() {
    const Token& t = Peek();
    if (AcceptPunct("-")) return Value(-IntLit());
    if (t.kind == TokKind::kInt) return Value(IntLit());
    if (AcceptKeyword("true")) return Value(true);
    if (AcceptKeyword("false")) return Value(false);
    if (AcceptPunct("[")) {
      List l;
      if (!AtPunct("]")) {
        l.push_back(ParseVal());
        while (AcceptPunct(",")) l.push_back(ParseVal());
      }
      Punct("]");
      return Value(std::move(l));
    }
    Fail(t, "value");
  }

  // expr := add (':' expr)?
  Expr ParseExpression() {
    Expr head = Additive();
    if (AcceptPunct(":")) return Expr::Cons(std::move(head), ParseExpression());
    return head;
  }

  Expr Additive() {
    Expr acc = Unary();
    while (AtPunct("+") || AtPunct("-")) {
      bool plus = Next().text == "+";
      Expr rhs = Unary();
      acc = plus ? Expr::Add(std::move(acc), std::move(rhs))
                 : Expr::Sub(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Expr Unary() {
    if (AcceptPunct("-")) {
      if (Peek().kind == TokKind::kInt) return Expr::Int(-IntLit());
      return Expr::Neg(Unary());
    }
    return Atom();
  }

  Expr Atom() {
    const Token& t = Peek();
    if (t.kind == TokKind::kInt) return Expr::Int(IntLit());
    if (AcceptKeyword("true")) return Expr::Bool(true);
    if (AcceptKeyword("false")) return Expr::Bool(false);
    if (AcceptPunct("(")) {
      Expr e = ParseExpression();
      Punct(")");
      return e;
    }
    if (AcceptPunct("[")) {
      if (AcceptPunct("]")) return Expr::Nil();
      std::vector<Expr> items{ParseExpression()};
      while (AcceptPunct(",")) items.push_back(ParseExpression());
      Punct("]");
      return Expr::ListOf(std::move(items));
    }
    if (t.kind == TokKind::kIdent && !IsKeyword(t.text)) {
      return Expr::Var(VarName());
    }
    Fail(t, "expression");
  }

  // cond := and ('||' and)*
  Cond ParseCondition() {
    Cond acc = Conjunction();
    while (AcceptPunct("||")) acc = Cond::Or(std::move(acc), Conjunction());
    return acc;
  }

  Cond Conjunction() {
    Cond acc = Negation();
    while (AcceptPunct("&&")) acc = Cond::And(std::move(acc), Negation());
    return acc;
  }

  Cond Negation() {
    if (AcceptPunct("!")) return Cond::Not(Negation());
    return CondAtom();
  }

  bool AtCompare() const {
    static const char* ops[] = {"==", "=", "!=", "<", "<=", ">", ">="};
    return std::any_of(std::begin(ops), std::end(ops),
                       [&](const char* o) { return AtPunct(o); });
  }

  bool AtExprContinuation() const {
    return AtCompare() || AtPunct("+") || AtPunct("-") || AtPunct(":");
  }

  Cond CondAtom() {
    if (AcceptKeyword("matchPattern")) {
      Punct("(");
      std::string var = VarName();
      Punct(",");
      Pattern p = ParsePat();
      Punct(")");
      return Cond::Match(var, std::move(p));
    }
    if (AtPunct("(")) {
      size_t save = pos_;
      try {
        Next();
        Cond c = ParseCondition();
        Punct(")");
        if (!AtExprContinuation()) return c;
      } catch (const SyntaxError&) {
      }
      pos_ = save;
    }
    const Token& start = Peek();
    Expr lhs = ParseExpression();
    if (AtCompare()) {
      std::string op = Next().text;
      Cond::Kind k = op == "==" || op == "=" ? Cond::Kind::kEq
                     : op == "!="            ? Cond::Kind::kNe
                     : op == "<"             ? Cond::Kind::kLt
                     : op == "<="            ? Cond::Kind::kLe
                     : op == ">"             ? Cond::Kind::kGt
                                             : Cond::Kind::kGe;
      return Cond::Compare(k, std::move(lhs), ParseExpression());
    }
    if (lhs.kind == Expr::Kind::kVar) return Cond::Var(lhs.var);
    if (lhs.kind == Expr::Kind::kBool) return lhs.bval ? Cond::True() : Cond::False();
    Fail(Peek(), "comparison operator after '" + start.text + "...'");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  ParseOptions opts_;
};

}  // namespace

SCFull Parse(const std::string& text, const ParseOptions& opts) {
  return Parser(text, opts).Chart();
}

SCSimp ParseSimp(const std::string& text) {
  return NormalizeFlat(Parse(text, ParseOptions{true}));
}

Cond ParseCond(const std::string& text, const ParseOptions& opts) {
  return Parser(text, opts).CondOnly();
}
Expr ParseExpr(const std::string& text, const ParseOptions& opts) {
  return Parser(text, opts).ExprOnly();
}
Stmt ParseStmt(const std::string& text, const ParseOptions& opts) {
  return Parser(text, opts).StmtOnly();
}
Call ParseCall(const std::string& text, const ParseOptions& opts) {
  return Parser(text, opts).CallOnly();
}
Pattern ParsePattern(const std::string& text, const ParseOptions& opts) {
  return Parser(text, opts).PatternOnly();
}
Value ParseValue(const std::string& text) {
  return Parser(text, {}).ValueOnly();
}
Message ParseMessage(const std::string& text) {
  return Parser(text, {true}).MessageOnly();
}

std::vector<Message> ParseMessages(const std::string& text) {
  std::vector<Message> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t c = line.find("//");
    if (c != std::string::npos) line.resize(c);
    if (std::all_of(line.begin(), line.end(),
                    [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); })) {
      continue;
    }
    out.push_back(ParseMessage(line));
  }
  return out;
}

}  // namespace scforge
