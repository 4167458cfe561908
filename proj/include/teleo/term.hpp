#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "teleo/signature.hpp"

namespace teleo {

struct SourceSpan {
  int line = 0;  // 1-based; 0 when the term was built in code
  int column = 0;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

namespace ast {
struct Gen { std::string name; };
struct GenDual { std::string name; };
struct Id { Word word; };
struct Sym { Word left; Word right; };
struct Cup { Word word; };
struct Comp { TermPtr first; TermPtr second; };  // diagrammatic order: first, then second
struct Tensor { TermPtr left; TermPtr right; };
}  // namespace ast

/// Syntax of diagrams. Immutable; subterms are shared.
struct Term {
  std::variant<ast::Gen, ast::GenDual, ast::Id, ast::Sym, ast::Cup, ast::Comp, ast::Tensor> node;
  SourceSpan span;
};

TermPtr gen(std::string name);
TermPtr gen_dual(std::string name);
TermPtr id(Word w);
TermPtr sym(Word left, Word right);
TermPtr cup(Word w);
TermPtr comp(TermPtr first, TermPtr second);
TermPtr tensor(TermPtr left, TermPtr right);

/// Structural equality; source spans are ignored.
bool equal(const Term& a, const Term& b);

/// Prints in the concrete grammar; parse_term(to_string(t)) is structurally equal to t.
std::string to_string(const Term& t);

/// Grammar (lowest to highest precedence):
///   term    := tensor (';' tensor)*        left-assoc, diagrammatic order
///   tensor  := postfix ('|' postfix)*
///   postfix := atom '^'*
///   atom    := 'id' '(' word ')' | 'sym' '(' word ';' word ')' | 'cup' '(' word ')'
///            | identifier | '(' term ')'
///   word    := [ letter (',' letter)* ]    letter := identifier ['*']
/// A postfix '^' on a compound term is expanded syntactically via dual_syntax.
/// Throws Error(syntax_error) with line:column.
TermPtr parse_term(std::string_view text);

struct TypedTerm {
  TermPtr term;
  Word dom;
  Word cod;
};

TypedTerm typecheck(const TermPtr& t, const TeleologicalSignature& s);

/// Syntactic dual: Gen <-> GenDual, Comp reversed, Tensor kept, Id/Sym dualised.
/// Throws not_dualisable on Cup.
TermPtr dual_syntax(const TermPtr& t);

/// Dual of a cap-free term whose generators are all dualisable.
TypedTerm dual_term(const TypedTerm& t, const TeleologicalSignature& s);

}  // namespace teleo
