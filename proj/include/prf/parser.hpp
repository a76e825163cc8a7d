#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prf/term.hpp"

namespace prf {

// Environment of named bindings (from let files or --let flags).  Lookup
// happens after the built-in forms but before the atom registry, so a
// binding may shadow an atom name.
using LetEnv = std::map<std::string, TermPtr>;

// Hook used by let files for the infix macros (+), (-), (x).  Receives the
// macro character ('+', '-', 'x') and both operands, returns the expanded
// term.  Parsing a macro without a hook is a syntax error.
using MacroExpander = std::function<TermPtr(char, const TermPtr&, const TermPtr&)>;

// Parse a single expression.  Throws SyntaxError on malformed input,
// UnknownName for identifiers that resolve to nothing.
TermPtr parse_expr(const std::string& src, const LetEnv* env = nullptr);

// Parse the contents of a let file: a sequence of `let NAME = expr;`
// bindings with `#` line comments.  Later bindings may use earlier ones;
// redefinition within one file is an error.  Returns bindings in file
// order (names stay unique).
std::vector<std::pair<std::string, TermPtr>> parse_let_file(
    const std::string& src, const LetEnv* base = nullptr,
    const MacroExpander& macros = nullptr);

// Render a term back to source form with minimal parentheses.  The output
// reparses to a structurally equal term.
std::string to_source(const TermPtr& t);

// True for names a let file may not bind: grammar keywords (S, o, let, M,
// Ma, pr, sub) and the c<digits> constant forms.
bool reserved_binding_name(const std::string& name);

}  // namespace prf
