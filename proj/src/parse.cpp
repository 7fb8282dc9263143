#include "tw/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <vector>

namespace tw {

namespace {

enum class Tok {
  KwFun,
  KwIf,
  KwThen,
  KwElse,
  KwSucc,
  KwRec,
  KwTrue,
  KwFalse,
  KwLet,
  KwNat,
  KwBool,
  Ident,
  NumLit,
  Arrow,   // ->
  Colon,
  Dot,
  LParen,
  RParen,
  Equal,
  Semi,
  End,
};

struct Token {
  Tok kind;
  std::string text;  // ident spelling or literal digits
  Span span;
};

const std::map<std::string, Tok, std::less<>> kKeywords = {
    {"fun", Tok::KwFun},   {"if", Tok::KwIf},     {"then", Tok::KwThen},
    {"else", Tok::KwElse}, {"succ", Tok::KwSucc}, {"rec", Tok::KwRec},
    {"true", Tok::KwTrue}, {"false", Tok::KwFalse}, {"let", Tok::KwLet},
    {"nat", Tok::KwNat},   {"bool", Tok::KwBool},
};

// Literals elaborate to succ chains; cap keeps pathological inputs from
// exhausting memory.
constexpr uint64_t kMaxNumericLiteral = 1000000;

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_trivia();
    Span here{line_, column_};
    if (pos_ >= text_.size()) {
      current_ = Token{Tok::End, "", here};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits.push_back(text_[pos_]);
        take();
      }
      current_ = Token{Tok::NumLit, digits, here};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        word.push_back(text_[pos_]);
        take();
      }
      auto kw = kKeywords.find(word);
      current_ = kw != kKeywords.end() ? Token{kw->second, word, here}
                                       : Token{Tok::Ident, word, here};
      return;
    }
    switch (c) {
      case '-':
        take();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          take();
          current_ = Token{Tok::Arrow, "->", here};
          return;
        }
        throw ParseError(ParseError::Kind::Lex, here, format_pos(here) + "lex error: expected '->'");
      case ':':
        take();
        current_ = Token{Tok::Colon, ":", here};
        return;
      case '.':
        take();
        current_ = Token{Tok::Dot, ".", here};
        return;
      case '(':
        take();
        current_ = Token{Tok::LParen, "(", here};
        return;
      case ')':
        take();
        current_ = Token{Tok::RParen, ")", here};
        return;
      case '=':
        take();
        current_ = Token{Tok::Equal, "=", here};
        return;
      case ';':
        take();
        current_ = Token{Tok::Semi, ";", here};
        return;
      default:
        throw ParseError(ParseError::Kind::Lex, here,
                         format_pos(here) + "lex error: unexpected character '" +
                             std::string(1, c) + "'");
    }
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else {
        break;
      }
    }
  }

  void take() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  static std::string format_pos(Span s) {
    return std::to_string(s.line) + ":" + std::to_string(s.column) + ": ";
  }

  std::string_view text_;
  size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t column_ = 1;
  Token current_{Tok::End, "", {1, 1}};
};

std::string pos_prefix(Span s) {
  return std::to_string(s.line) + ":" + std::to_string(s.column) + ": ";
}

[[noreturn]] void syntax_error(Span where, const std::string& message) {
  throw ParseError(ParseError::Kind::Syntax, where, pos_prefix(where) + "syntax error: " + message);
}

const char* token_name(Tok k) {
  switch (k) {
    case Tok::KwFun: return "'fun'";
    case Tok::KwIf: return "'if'";
    case Tok::KwThen: return "'then'";
    case Tok::KwElse: return "'else'";
    case Tok::KwSucc: return "'succ'";
    case Tok::KwRec: return "'rec'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::KwLet: return "'let'";
    case Tok::KwNat: return "'nat'";
    case Tok::KwBool: return "'bool'";
    case Tok::Ident: return "identifier";
    case Tok::NumLit: return "numeric literal";
    case Tok::Arrow: return "'->'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equal: return "'='";
    case Tok::Semi: return "';'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  SourceFile parse_file() {
    SourceFile file;
    while (lex_.peek().kind == Tok::KwLet) {
      Token let_tok = lex_.next();
      Token name = expect(Tok::Ident, "definition name after 'let'");
      for (const auto& [n, _] : file.definitions) {
        if (n == name.text) {
          syntax_error(name.span, "duplicate definition '" + name.text + "'");
        }
      }
      (void)let_tok;
      expect(Tok::Equal, "'=' after definition name");
      Term body = parse_term();
      expect(Tok::Semi, "';' after definition");
      definitions_.emplace_back(name.text, body);
      file.definitions.emplace_back(name.text, std::move(body));
    }
    if (lex_.peek().kind != Tok::End) {
      file.main = parse_term();
      if (lex_.peek().kind != Tok::End) {
        syntax_error(lex_.peek().span,
                     std::string("expected end of input, found ") + token_name(lex_.peek().kind));
      }
    }
    return file;
  }

  Term parse_single_term() {
    Term t = parse_term();
    if (lex_.peek().kind != Tok::End) {
      syntax_error(lex_.peek().span,
                   std::string("expected end of input, found ") + token_name(lex_.peek().kind));
    }
    return t;
  }

  Type parse_single_type() {
    Type t = parse_type();
    if (lex_.peek().kind != Tok::End) {
      syntax_error(lex_.peek().span,
                   std::string("expected end of input, found ") + token_name(lex_.peek().kind));
    }
    return t;
  }

 private:
  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) {
      syntax_error(lex_.peek().span, "expected " + what + ", found " +
                                         token_name(lex_.peek().kind));
    }
    return lex_.next();
  }

  Type parse_type() {
    Type lhs = parse_type_atom();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.next();
      return Type::arrow(std::move(lhs), parse_type());  // right associative
    }
    return lhs;
  }

  Type parse_type_atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::KwNat:
        lex_.next();
        return Type::nat();
      case Tok::KwBool:
        lex_.next();
        return Type::boolean();
      case Tok::LParen: {
        lex_.next();
        Type inner = parse_type();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        syntax_error(t.span, std::string("expected a type, found ") + token_name(t.kind));
    }
  }

  bool starts_atom(Tok k) const {
    switch (k) {
      case Tok::NumLit:
      case Tok::KwTrue:
      case Tok::KwFalse:
      case Tok::Ident:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Term parse_term() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::KwFun: {
        Span here = t.span;
        lex_.next();
        Token name = expect(Tok::Ident, "binder name after 'fun'");
        expect(Tok::Colon, "':' after binder name");
        Type annotation = parse_type();
        expect(Tok::Dot, "'.' after binder type");
        binders_.push_back(name.text);
        Term body = parse_term();
        binders_.pop_back();
        return Term::lam(std::move(annotation), std::move(body), here);
      }
      case Tok::KwIf: {
        Span here = t.span;
        lex_.next();
        Term cond = parse_term();
        expect(Tok::KwThen, "'then'");
        Term then_branch = parse_term();
        expect(Tok::KwElse, "'else'");
        Term else_branch = parse_term();
        return Term::if_then_else(std::move(cond), std::move(then_branch),
                                  std::move(else_branch), here);
      }
      case Tok::KwSucc: {
        Span here = t.span;
        lex_.next();
        if (starts_atom(lex_.peek().kind)) {
          return Term::succ(parse_atom(), here);
        }
        // bare successor: fun x : nat . succ x
        return Term::lam(Type::nat(), Term::succ(Term::var(0, here), here), here);
      }
      case Tok::KwRec: {
        Span here = t.span;
        lex_.next();
        if (starts_atom(lex_.peek().kind)) {
          Term z = parse_atom();
          if (!starts_atom(lex_.peek().kind)) {
            syntax_error(lex_.peek().span, "'rec' takes three arguments (or none)");
          }
          Term s = parse_atom();
          if (!starts_atom(lex_.peek().kind)) {
            syntax_error(lex_.peek().span, "'rec' takes three arguments (or none)");
          }
          Term n = parse_atom();
          return Term::rec(std::move(z), std::move(s), std::move(n), here);
        }
        // bare recursor, elaborated at result type nat:
        //   fun z : nat . fun s : nat -> nat -> nat . fun n : nat . rec z s n
        Type step = Type::arrow(Type::nat(), Type::arrow(Type::nat(), Type::nat()));
        return Term::lam(
            Type::nat(),
            Term::lam(step,
                      Term::lam(Type::nat(),
                                Term::rec(Term::var(2, here), Term::var(1, here),
                                          Term::var(0, here), here),
                                here),
                      here),
            here);
      }
      default:
        return parse_appchain();
    }
  }

  Term parse_appchain() {
    Term head = parse_atom();
    while (starts_atom(lex_.peek().kind)) {
      Span here = lex_.peek().span;
      Term arg = parse_atom();
      head = Term::app(std::move(head), std::move(arg), here);
    }
    return head;
  }

  Term parse_atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::NumLit: {
        Token lit = lex_.next();
        uint64_t n = std::strtoull(lit.text.c_str(), nullptr, 10);
        if (n > kMaxNumericLiteral) {
          syntax_error(lit.span, "numeric literal too large (max " +
                                     std::to_string(kMaxNumericLiteral) + ")");
        }
        return Term::nat_literal(n, lit.span);
      }
      case Tok::KwTrue:
        lex_.next();
        return Term::lit_true(t.span);
      case Tok::KwFalse:
        lex_.next();
        return Term::lit_false(t.span);
      case Tok::Ident: {
        Token name = lex_.next();
        // innermost binder wins
        for (size_t i = binders_.size(); i-- > 0;) {
          if (binders_[i] == name.text) {
            return Term::var(static_cast<int>(binders_.size() - 1 - i), name.span);
          }
        }
        for (const auto& [n, body] : definitions_) {
          if (n == name.text) return body;  // closed, so inlining cannot capture
        }
        throw ParseError(ParseError::Kind::Unbound, name.span,
                         pos_prefix(name.span) + "unbound identifier '" + name.text + "'");
      }
      case Tok::LParen: {
        lex_.next();
        Term inner = parse_term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        syntax_error(t.span, std::string("expected a term, found ") + token_name(t.kind));
    }
  }

  Lexer lex_;
  std::vector<std::string> binders_;
  std::vector<std::pair<std::string, Term>> definitions_;
};

}  // namespace

SourceFile parse(std::string_view text) { return Parser(text).parse_file(); }

Term parse_term_text(std::string_view text) { return Parser(text).parse_single_term(); }

Type parse_type_text(std::string_view text) { return Parser(text).parse_single_type(); }

}  // namespace tw
