#include "prf/parser.hpp"

#include <cctype>
#include <set>

#include "prf/errors.hpp"

namespace prf {
namespace {

enum class Tok : std::uint8_t {
  Ident, Number, Plus, Monus, Minus, Bar, LParen, RParen, LBrack, RBrack,
  Semi, Comma, Caret, Hash, Equals, MacroPlus, MacroMinus, MacroTimes, End,
};

struct Token {
  Tok kind;
  std::string text;
  Nat num;
  std::size_t pos = 0;
};

// `let_mode` enables `#` line comments, `=`, and the (+)/(-)/(x) macros.
// A `#` directly after `^` is always the iteration marker, never a comment.
std::vector<Token> lex(const std::string& src, bool let_mode) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto prev_is_caret = [&] { return !out.empty() && out.back().kind == Tok::Caret; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), Nat(0), start});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      std::string digits = src.substr(i, j - i);
      out.push_back({Tok::Number, digits, Nat(digits), start});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::Plus, "+", Nat(0), start}); ++i; break;
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '.') {
          out.push_back({Tok::Monus, "-.", Nat(0), start});
          i += 2;
        } else {
          out.push_back({Tok::Minus, "-", Nat(0), start});
          ++i;
        }
        break;
      case '|': out.push_back({Tok::Bar, "|", Nat(0), start}); ++i; break;
      case '(':
        if (let_mode && i + 2 < src.size() && src[i + 2] == ')' &&
            (src[i + 1] == '+' || src[i + 1] == '-' || src[i + 1] == 'x')) {
          Tok k = src[i + 1] == '+' ? Tok::MacroPlus
                : src[i + 1] == '-' ? Tok::MacroMinus
                                    : Tok::MacroTimes;
          out.push_back({k, src.substr(i, 3), Nat(0), start});
          i += 3;
        } else {
          out.push_back({Tok::LParen, "(", Nat(0), start});
          ++i;
        }
        break;
      case ')': out.push_back({Tok::RParen, ")", Nat(0), start}); ++i; break;
      case '[': out.push_back({Tok::LBrack, "[", Nat(0), start}); ++i; break;
      case ']': out.push_back({Tok::RBrack, "]", Nat(0), start}); ++i; break;
      case ';': out.push_back({Tok::Semi, ";", Nat(0), start}); ++i; break;
      case ',': out.push_back({Tok::Comma, ",", Nat(0), start}); ++i; break;
      case '^': out.push_back({Tok::Caret, "^", Nat(0), start}); ++i; break;
      case '=':
        if (!let_mode) throw SyntaxError(start, "a term ('=' is only valid in let files)");
        out.push_back({Tok::Equals, "=", Nat(0), start});
        ++i;
        break;
      case '#':
        if (prev_is_caret()) {
          out.push_back({Tok::Hash, "#", Nat(0), start});
          ++i;
        } else if (let_mode) {
          while (i < src.size() && src[i] != '\n') ++i;
        } else {
          throw SyntaxError(start, "a term ('#' only follows '^')");
        }
        break;
      default:
        throw SyntaxError(start, "a valid token, got '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, "", Nat(0), src.size()});
  return out;
}

bool is_const_name(const std::string& s) {
  if (s.size() < 2 || s[0] != 'c') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

const std::set<std::string>& reserved_names() {
  static const std::set<std::string> r = {"S", "o", "let", "M", "Ma", "pr", "sub"};
  return r;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const LetEnv* env, const MacroExpander* macros)
      : toks_(std::move(toks)), env_(env), macros_(macros) {}

  TermPtr parse_full_expr() {
    TermPtr t = expr();
    expect(Tok::End, "end of input");
    return t;
  }

  std::vector<std::pair<std::string, TermPtr>> parse_lets(LetEnv scope) {
    std::vector<std::pair<std::string, TermPtr>> out;
    env_ = &scope;
    while (peek().kind != Tok::End) {
      const Token& kw = expect(Tok::Ident, "'let'");
      if (kw.text != "let") throw SyntaxError(kw.pos, "'let'");
      const Token& name = expect(Tok::Ident, "a binding name");
      if (reserved_names().count(name.text) || is_const_name(name.text))
        throw SyntaxError(name.pos, "a non-reserved binding name ('" + name.text + "' is reserved)");
      if (scope.count(name.text))
        throw SyntaxError(name.pos, "a fresh name ('" + name.text + "' is already bound)");
      expect(Tok::Equals, "'='");
      TermPtr body = expr();
      expect(Tok::Semi, "';'");
      scope[name.text] = body;
      out.emplace_back(name.text, body);
    }
    return out;
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  const LetEnv* env_;
  const MacroExpander* macros_;
  int bar_depth_ = 0;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = at_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& advance() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw SyntaxError(peek().pos, what);
    return advance();
  }

  Nat expect_number(const std::string& what) {
    const Token& t = expect(Tok::Number, what);
    return t.num;
  }

  unsigned expect_small(const std::string& what) {
    const Token& t = peek();
    Nat n = expect_number(what);
    if (n > 1000000) throw SyntaxError(t.pos, what + " (index too large)");
    return static_cast<unsigned>(n);
  }

  // An expression between its own delimiters: brackets restore the power to
  // open '|...|' even when we are already inside one.
  TermPtr delimited_expr() {
    int saved = bar_depth_;
    bar_depth_ = 0;
    TermPtr t = expr();
    bar_depth_ = saved;
    return t;
  }

  // Level 1: + / -. / - and the let-file macros, all left associative.
  TermPtr expr() {
    TermPtr l = seq();
    for (;;) {
      Tok k = peek().kind;
      if (k == Tok::Plus) { advance(); l = op_add(l, seq()); }
      else if (k == Tok::Monus) { advance(); l = op_monus(l, seq()); }
      else if (k == Tok::Minus) { advance(); l = op_amb_minus(l, seq()); }
      else if (k == Tok::MacroPlus || k == Tok::MacroMinus || k == Tok::MacroTimes) {
        const Token& t = advance();
        if (!macros_ || !*macros_)
          throw SyntaxError(t.pos, "no macro operators (no expander is configured)");
        char op = k == Tok::MacroPlus ? '+' : k == Tok::MacroMinus ? '-' : 'x';
        l = (*macros_)(op, l, seq());
      } else {
        return l;
      }
    }
  }

  bool starts_factor(const Token& t) const {
    switch (t.kind) {
      case Tok::Ident: return t.text != "o";
      case Tok::LParen: return true;
      case Tok::Bar: return bar_depth_ == 0;  // inside |...| a bar closes
      default: return false;
    }
  }

  // Level 2: juxtaposition / 'o', folded to the right: A B C = A (B C).
  TermPtr seq() {
    std::vector<TermPtr> fs;
    fs.push_back(postfix());
    for (;;) {
      if (peek().kind == Tok::Ident && peek().text == "o") {
        advance();
        fs.push_back(postfix());
      } else if (starts_factor(peek())) {
        fs.push_back(postfix());
      } else {
        break;
      }
    }
    return fs.size() == 1 ? fs[0] : compose_chain(fs);
  }

  // Level 3: postfix ^n, ^#, ^#(a), ^+, stackable.
  TermPtr postfix() {
    TermPtr t = primary();
    while (peek().kind == Tok::Caret) {
      advance();
      const Token& n = peek();
      if (n.kind == Tok::Number) {
        advance();
        t = power(t, n.num);
      } else if (n.kind == Tok::Hash) {
        advance();
        if (peek().kind == Tok::LParen && peek(1).kind == Tok::Number &&
            peek(2).kind == Tok::RParen) {
          advance();
          Nat a = advance().num;
          advance();
          t = pure_iter_a(t, a);
        } else {
          t = pure_iter(t);
        }
      } else if (n.kind == Tok::Plus) {
        advance();
        t = op_plus(t);
      } else {
        throw SyntaxError(n.pos, "a number, '#', or '+' after '^'");
      }
    }
    return t;
  }

  TermPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        advance();
        TermPtr inner = delimited_expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Bar: {
        advance();
        ++bar_depth_;
        TermPtr inner = expr();
        --bar_depth_;
        expect(Tok::Bar, "closing '|'");
        if (inner->kind() != Kind::OpAmbMinus)
          throw SyntaxError(t.pos, "'F - G' inside '|...|'");
        return op_dist(inner->child(0), inner->child(1));
      }
      case Tok::Ident: return named(advance());
      default: throw SyntaxError(t.pos, "a term");
    }
  }

  TermPtr named(const Token& id) {
    const std::string& s = id.text;
    if (s == "pr" && peek().kind == Tok::LBrack) {
      advance();
      unsigned n = expect_small("an arity in pr[n,k]");
      expect(Tok::Comma, "','");
      unsigned k = expect_small("an index in pr[n,k]");
      expect(Tok::RBrack, "']'");
      return proj(n, k);
    }
    if (s == "M" && peek().kind == Tok::LBrack) {
      advance();
      TermPtr h = delimited_expr();
      expect(Tok::RBrack, "']'");
      return mixed_iter(h);
    }
    if (s == "Ma" && peek().kind == Tok::LBrack) {
      advance();
      TermPtr h = delimited_expr();
      expect(Tok::Semi, "';'");
      Nat a = expect_number("a seed in Ma[F; a]");
      expect(Tok::RBrack, "']'");
      return mixed_iter_a(h, a);
    }
    if (s == "R" && peek().kind == Tok::LBrack) {
      advance();
      TermPtr f = delimited_expr();
      expect(Tok::Comma, "','");
      TermPtr g = delimited_expr();
      expect(Tok::RBrack, "']'");
      return prim_rec(f, g);
    }
    if (s == "sub" && peek().kind == Tok::LParen) {
      advance();
      TermPtr f = delimited_expr();
      expect(Tok::Semi, "';'");
      std::vector<TermPtr> gs;
      gs.push_back(delimited_expr());
      while (peek().kind == Tok::Comma) {
        advance();
        gs.push_back(delimited_expr());
      }
      expect(Tok::RParen, "')'");
      return subst(f, gs);
    }
    if (s == "J" && peek().kind == Tok::LParen) {
      advance();
      TermPtr f = delimited_expr();
      expect(Tok::Comma, "','");
      TermPtr g = delimited_expr();
      expect(Tok::RParen, "')'");
      return op_pair_j(f, g);
    }
    if (is_const_name(s)) return constant(Nat(s.substr(1)));
    if (s == "S") return succ();
    if (env_) {
      auto it = env_->find(s);
      if (it != env_->end()) return it->second;
    }
    if (atom_exists(s)) return atom(s);
    throw UnknownName("unknown name '" + s + "' at offset " + std::to_string(id.pos));
  }
};

int prec(Kind k) {
  switch (k) {
    case Kind::OpAdd:
    case Kind::OpMonus:
    case Kind::OpAmbMinus: return 1;
    case Kind::Compose: return 2;
    case Kind::Power:
    case Kind::PureIter:
    case Kind::PureIterA:
    case Kind::OpPlus: return 3;
    default: return 4;
  }
}

void render(const TermPtr& t, int min_prec, std::string& out) {
  int p = prec(t->kind());
  if (p < min_prec) {
    out += '(';
    render(t, 0, out);
    out += ')';
    return;
  }
  switch (t->kind()) {
    case Kind::OpAdd:
    case Kind::OpMonus:
    case Kind::OpAmbMinus:
      render(t->child(0), 1, out);
      out += t->kind() == Kind::OpAdd ? " + " : t->kind() == Kind::OpMonus ? " -. " : " - ";
      render(t->child(1), 2, out);
      break;
    case Kind::Compose:
      render(t->child(0), 3, out);
      out += ' ';
      render(t->child(1), 2, out);
      break;
    case Kind::Power:
      render(t->child(0), 3, out);
      out += '^';
      out += t->number().str();
      break;
    case Kind::PureIter:
      render(t->child(0), 3, out);
      out += "^#";
      break;
    case Kind::PureIterA:
      render(t->child(0), 3, out);
      out += "^#(" + t->number().str() + ")";
      break;
    case Kind::OpPlus:
      render(t->child(0), 3, out);
      out += "^+";
      break;
    case Kind::Const:
      out += 'c';
      out += t->number().str();
      break;
    case Kind::Succ: out += 'S'; break;
    case Kind::Proj:
      out += "pr[" + std::to_string(t->proj_n()) + "," + std::to_string(t->proj_k()) + "]";
      break;
    case Kind::Atom: out += t->atom_name(); break;
    case Kind::Subst:
      out += "sub(";
      render(t->child(0), 0, out);
      out += "; ";
      for (std::size_t i = 1; i < t->child_count(); ++i) {
        if (i > 1) out += ", ";
        render(t->child(i), 0, out);
      }
      out += ')';
      break;
    case Kind::PrimRec:
      out += "R[";
      render(t->child(0), 0, out);
      out += ", ";
      render(t->child(1), 0, out);
      out += ']';
      break;
    case Kind::MixedIter:
      out += "M[";
      render(t->child(0), 0, out);
      out += ']';
      break;
    case Kind::MixedIterA:
      out += "Ma[";
      render(t->child(0), 0, out);
      out += "; " + t->number().str() + "]";
      break;
    case Kind::OpPairJ:
      out += "J(";
      render(t->child(0), 0, out);
      out += ", ";
      render(t->child(1), 0, out);
      out += ')';
      break;
    case Kind::OpDist: {
      // a bare '|' inside the body would be read as another opening bar, so
      // any operand that renders one gets parenthesised
      std::string l, r;
      render(t->child(0), 1, l);
      render(t->child(1), 2, r);
      out += '|';
      if (l.find('|') != std::string::npos) l = "(" + l + ")";
      if (r.find('|') != std::string::npos) r = "(" + r + ")";
      out += l;
      out += " - ";
      out += r;
      out += '|';
      break;
    }
  }
}

}  // namespace

TermPtr parse_expr(const std::string& src, const LetEnv* env) {
  Parser p(lex(src, false), env, nullptr);
  return p.parse_full_expr();
}

std::vector<std::pair<std::string, TermPtr>> parse_let_file(
    const std::string& src, const LetEnv* base, const MacroExpander& macros) {
  Parser p(lex(src, true), nullptr, macros ? &macros : nullptr);
  return p.parse_lets(base ? *base : LetEnv{});
}

std::string to_source(const TermPtr& t) {
  std::string out;
  render(t, 0, out);
  return out;
}

bool reserved_binding_name(const std::string& name) {
  return reserved_names().count(name) > 0 || is_const_name(name);
}

}  // namespace prf
