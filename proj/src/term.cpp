#include "teleo/term.hpp"

#include <cctype>
#include <sstream>

namespace teleo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

TermPtr make(auto node, SourceSpan span = {}) {
  return std::make_shared<const Term>(Term{std::move(node), span});
}

}  // namespace

TermPtr gen(std::string name) { return make(ast::Gen{std::move(name)}); }
TermPtr gen_dual(std::string name) { return make(ast::GenDual{std::move(name)}); }
TermPtr id(Word w) { return make(ast::Id{std::move(w)}); }
TermPtr sym(Word left, Word right) { return make(ast::Sym{std::move(left), std::move(right)}); }
TermPtr cup(Word w) { return make(ast::Cup{std::move(w)}); }
TermPtr comp(TermPtr first, TermPtr second) {
  return make(ast::Comp{std::move(first), std::move(second)});
}
TermPtr tensor(TermPtr left, TermPtr right) {
  return make(ast::Tensor{std::move(left), std::move(right)});
}

bool equal(const Term& a, const Term& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const ast::Gen& x) { return x.name == std::get<ast::Gen>(b.node).name; },
          [&](const ast::GenDual& x) { return x.name == std::get<ast::GenDual>(b.node).name; },
          [&](const ast::Id& x) { return x.word == std::get<ast::Id>(b.node).word; },
          [&](const ast::Sym& x) {
            const auto& y = std::get<ast::Sym>(b.node);
            return x.left == y.left && x.right == y.right;
          },
          [&](const ast::Cup& x) { return x.word == std::get<ast::Cup>(b.node).word; },
          [&](const ast::Comp& x) {
            const auto& y = std::get<ast::Comp>(b.node);
            return equal(*x.first, *y.first) && equal(*x.second, *y.second);
          },
          [&](const ast::Tensor& x) {
            const auto& y = std::get<ast::Tensor>(b.node);
            return equal(*x.left, *y.left) && equal(*x.right, *y.right);
          },
      },
      a.node);
}

// ---------------------------------------------------------------- printing

namespace {

std::string word_text(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i].to_string();
  }
  return out;
}

enum class Level { comp = 0, tensor = 1, postfix = 2 };

std::string print(const Term& t, Level ctx) {
  return std::visit(
      overloaded{
          [](const ast::Gen& x) { return x.name; },
          [](const ast::GenDual& x) { return x.name + "^"; },
          [](const ast::Id& x) { return "id(" + word_text(x.word) + ")"; },
          [](const ast::Sym& x) {
            return "sym(" + word_text(x.left) + " ; " + word_text(x.right) + ")";
          },
          [](const ast::Cup& x) { return "cup(" + word_text(x.word) + ")"; },
          [&](const ast::Comp& x) {
            auto s = print(*x.first, Level::comp) + " ; " + print(*x.second, Level::tensor);
            return ctx > Level::comp ? "(" + s + ")" : s;
          },
          [&](const ast::Tensor& x) {
            auto s = print(*x.left, Level::tensor) + " | " + print(*x.right, Level::postfix);
            return ctx > Level::tensor ? "(" + s + ")" : s;
          },
      },
      t.node);
}

}  // namespace

std::string to_string(const Term& t) { return print(t, Level::comp); }

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { ident, lparen, rparen, semi, bar, caret, comma, star, end };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    SourceSpan span{line_, col_};
    if (pos_ >= src_.size()) return {Tok::end, "", span};
    char c = src_[pos_];
    auto single = [&](Tok k) {
      advance();
      return Token{k, std::string(1, c), span};
    };
    switch (c) {
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case ';': return single(Tok::semi);
      case '|': return single(Tok::bar);
      case '^': return single(Tok::caret);
      case ',': return single(Tok::comma);
      case '*': return single(Tok::star);
      default: break;
    }
    auto u = static_cast<unsigned char>(c);
    if (std::isalpha(u) || c == '_') {
      std::string text;
      while (pos_ < src_.size()) {
        auto d = static_cast<unsigned char>(src_[pos_]);
        if (!(std::isalnum(d) || d == '_' || d == '\'')) break;
        text += src_[pos_];
        advance();
      }
      return {Tok::ident, text, span};
    }
    throw Error(ErrorCode::syntax_error, location(span) + ": unexpected character '" +
                                             std::string(1, c) + "'");
  }

  static std::string location(SourceSpan s) {
    return std::to_string(s.line) + ":" + std::to_string(s.column);
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { cur_ = lexer_.next(); }

  TermPtr parse() {
    auto t = parse_comp();
    if (cur_.kind != Tok::end) fail("expected end of input, found '" + cur_.text + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::syntax_error, Lexer::location(cur_.span) + ": " + what);
  }

  Token take() {
    Token t = cur_;
    cur_ = lexer_.next();
    return t;
  }

  void expect(Tok k, std::string_view what) {
    if (cur_.kind != k) {
      fail("expected '" + std::string(what) + "'" +
           (cur_.kind == Tok::end ? std::string(", found end of input")
                                  : ", found '" + cur_.text + "'"));
    }
    take();
  }

  TermPtr parse_comp() {
    auto lhs = parse_tensor();
    while (cur_.kind == Tok::semi) {
      auto span = take().span;
      auto rhs = parse_tensor();
      lhs = make(ast::Comp{lhs, rhs}, span);
    }
    return lhs;
  }

  TermPtr parse_tensor() {
    auto lhs = parse_postfix();
    while (cur_.kind == Tok::bar) {
      auto span = take().span;
      auto rhs = parse_postfix();
      lhs = make(ast::Tensor{lhs, rhs}, span);
    }
    return lhs;
  }

  TermPtr parse_postfix() {
    auto t = parse_atom();
    while (cur_.kind == Tok::caret) {
      auto span = take().span;
      try {
        t = dual_syntax(t);
      } catch (const Error& e) {
        throw Error(ErrorCode::syntax_error,
                    Lexer::location(span) + ": cannot dualise a term containing cup");
      }
    }
    return t;
  }

  Word parse_word(Tok terminator) {
    Word w;
    if (cur_.kind == terminator) return w;
    for (;;) {
      if (cur_.kind != Tok::ident) fail("expected object symbol");
      SignedObject letter{take().text, false};
      if (cur_.kind == Tok::star) {
        take();
        letter.starred = true;
      }
      w.push_back(std::move(letter));
      if (cur_.kind != Tok::comma) break;
      take();
    }
    return w;
  }

  TermPtr parse_atom() {
    SourceSpan span = cur_.span;
    if (cur_.kind == Tok::lparen) {
      take();
      auto t = parse_comp();
      expect(Tok::rparen, ")");
      return t;
    }
    if (cur_.kind != Tok::ident) {
      fail(cur_.kind == Tok::end ? "unexpected end of input"
                                 : "unexpected '" + cur_.text + "'");
    }
    std::string name = take().text;
    if (name == "id" || name == "cup") {
      expect(Tok::lparen, "(");
      Word w = parse_word(Tok::rparen);
      expect(Tok::rparen, ")");
      return name == "id" ? make(ast::Id{std::move(w)}, span) : make(ast::Cup{std::move(w)}, span);
    }
    if (name == "sym") {
      expect(Tok::lparen, "(");
      Word left = parse_word(Tok::semi);
      expect(Tok::semi, ";");
      Word right = parse_word(Tok::rparen);
      expect(Tok::rparen, ")");
      return make(ast::Sym{std::move(left), std::move(right)}, span);
    }
    return make(ast::Gen{std::move(name)}, span);
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- typing

namespace {

std::string where(const Term& t) {
  if (t.span.line == 0) return "";
  return Lexer::location(t.span) + ": ";
}

void check_letters(const Word& w, const TeleologicalSignature& s, const Term& at) {
  for (const auto& letter : w) {
    if (!s.objects.contains(letter.symbol)) {
      throw Error(ErrorCode::unknown_symbol,
                  where(at) + "unknown object symbol '" + letter.symbol + "'");
    }
  }
}

std::pair<Word, Word> infer(const Term& t, const TeleologicalSignature& s) {
  return std::visit(
      overloaded{
          [&](const ast::Gen& x) -> std::pair<Word, Word> {
            const auto* decl = s.find(x.name);
            if (!decl) {
              throw Error(ErrorCode::unknown_symbol,
                          where(t) + "unknown generator '" + x.name + "'");
            }
            return {decl->dom, decl->cod};
          },
          [&](const ast::GenDual& x) -> std::pair<Word, Word> {
            const auto* decl = s.find(x.name);
            if (!decl) {
              throw Error(ErrorCode::unknown_symbol,
                          where(t) + "unknown generator '" + x.name + "'");
            }
            if (!decl->dualisable) {
              throw Error(ErrorCode::not_dualisable,
                          where(t) + "generator '" + x.name + "' is not dualisable");
            }
            return {word_dual(decl->cod), word_dual(decl->dom)};
          },
          [&](const ast::Id& x) -> std::pair<Word, Word> {
            check_letters(x.word, s, t);
            return {x.word, x.word};
          },
          [&](const ast::Sym& x) -> std::pair<Word, Word> {
            check_letters(x.left, s, t);
            check_letters(x.right, s, t);
            return {concat(x.left, x.right), concat(x.right, x.left)};
          },
          [&](const ast::Cup& x) -> std::pair<Word, Word> {
            check_letters(x.word, s, t);
            return {concat(x.word, word_dual(x.word)), Word{}};
          },
          [&](const ast::Comp& x) -> std::pair<Word, Word> {
            auto [d1, c1] = infer(*x.first, s);
            auto [d2, c2] = infer(*x.second, s);
            if (c1 != d2) {
              throw Error(ErrorCode::type_mismatch, where(t) + "cannot compose: codomain " +
                                                        to_string(c1) + " of '" +
                                                        to_string(*x.first) +
                                                        "' differs from domain " +
                                                        to_string(d2) + " of '" +
                                                        to_string(*x.second) + "'");
            }
            return {std::move(d1), std::move(c2)};
          },
          [&](const ast::Tensor& x) -> std::pair<Word, Word> {
            auto [d1, c1] = infer(*x.left, s);
            auto [d2, c2] = infer(*x.right, s);
            return {concat(d1, d2), concat(c1, c2)};
          },
      },
      t.node);
}

}  // namespace

TypedTerm typecheck(const TermPtr& t, const TeleologicalSignature& s) {
  auto [dom, cod] = infer(*t, s);
  return {t, std::move(dom), std::move(cod)};
}

TermPtr dual_syntax(const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const ast::Gen& x) { return make(ast::GenDual{x.name}, t->span); },
          [&](const ast::GenDual& x) { return make(ast::Gen{x.name}, t->span); },
          [&](const ast::Id& x) { return make(ast::Id{word_dual(x.word)}, t->span); },
          [&](const ast::Sym& x) {
            return make(ast::Sym{word_dual(x.right), word_dual(x.left)}, t->span);
          },
          [&](const ast::Cup&) -> TermPtr {
            throw Error(ErrorCode::not_dualisable, where(*t) + "cup is not dualisable");
          },
          [&](const ast::Comp& x) {
            return make(ast::Comp{dual_syntax(x.second), dual_syntax(x.first)}, t->span);
          },
          [&](const ast::Tensor& x) {
            return make(ast::Tensor{dual_syntax(x.left), dual_syntax(x.right)}, t->span);
          },
      },
      t->node);
}

namespace {

void require_dualisable(const Term& t, const TeleologicalSignature& s) {
  std::visit(overloaded{
                 [&](const ast::Gen& x) {
                   const auto* decl = s.find(x.name);
                   if (!decl || !decl->dualisable) {
                     throw Error(ErrorCode::not_dualisable,
                                 where(t) + "generator '" + x.name + "' is not dualisable");
                   }
                 },
                 [&](const ast::GenDual&) {},
                 [&](const ast::Id&) {},
                 [&](const ast::Sym&) {},
                 [&](const ast::Cup&) {
                   throw Error(ErrorCode::not_dualisable, where(t) + "cup is not dualisable");
                 },
                 [&](const ast::Comp& x) {
                   require_dualisable(*x.first, s);
                   require_dualisable(*x.second, s);
                 },
                 [&](const ast::Tensor& x) {
                   require_dualisable(*x.left, s);
                   require_dualisable(*x.right, s);
                 },
             },
             t.node);
}

}  // namespace

TypedTerm dual_term(const TypedTerm& t, const TeleologicalSignature& s) {
  require_dualisable(*t.term, s);
  auto dual = dual_syntax(t.term);
  return {dual, word_dual(t.cod), word_dual(t.dom)};
}

}  // namespace teleo
