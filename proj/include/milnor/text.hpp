#pragma once

// Text grammar for residue-field elements, differential forms and symbols.
//
//   element := term ('+' term)*
//   term    := coeff ('*' monomial)? | monomial
//   monomial:= 't'IDX'^'INT ('*' 't'IDX'^'INT)*
//   coeff   := integer (reduced mod p) | 'g^'INT (power of the stored generator)
//   form    := fterm ('+' fterm)*
//   fterm   := element '*' 'dlog[' idxlist ']' | element
//   symbol  := '{' '1+pi^'INT'*(' element ')' (';' entry)* '}'
//   entry   := term | 'pi'
//
// A parenthesised element may stand in for a single term before '*dlog[..]'.
// 'dt[idxlist]' is accepted as input and converted with dt_i = t_i dlog t_i.
// Printing emits one term per '+' in canonical order and round-trips exactly.

#include <optional>
#include <string>
#include <string_view>

#include "milnor/ffield.hpp"
#include "milnor/forms.hpp"
#include "milnor/graded.hpp"

namespace milnor {

LaurentPoly parse_element(const ResidueFieldPtr& ctx, std::string_view text);
std::string print_element(const LaurentPoly& f);

std::string print_coeff(const FiniteField& F, Fq c);

/// `degree` is required to type the zero form "0"; otherwise it is inferred.
DiffForm parse_form(const ResidueFieldPtr& ctx, std::string_view text, std::optional<int> degree = std::nullopt);
std::string print_form(const DiffForm& w);

SymbolExpr parse_symbol(const ResidueFieldPtr& ctx, std::string_view text);
std::string print_symbol(const SymbolExpr& sym);

std::string print_exponent(const Exponent& alpha);

}  // namespace milnor
