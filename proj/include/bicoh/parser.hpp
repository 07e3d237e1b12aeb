#ifndef BICOH_PARSER_HPP
#define BICOH_PARSER_HPP

#include <stdexcept>
#include <string>

#include "bicoh/terms.hpp"

namespace bicoh {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Term grammar:
//
//   obj  := "I" | IDENT | "(" obj "*" obj ")"
//   cell := "id[" obj "]"
//         | "a[" obj "," obj "," obj "]"   | "a'[" obj "," obj "," obj "]"
//         | "l[" obj "]" | "l'[" obj "]"   | "r[" obj "]" | "r'[" obj "]"
//         | "R[" obj "," obj "]"           | "R'[" obj "," obj "]"
//         | "(" cell "*" cell ")" | "(" cell ";" cell ")"
//
// IDENT = [A-Za-z][A-Za-z0-9_]*, whitespace insignificant.  "(f;g)" reads in
// diagram order: f first, then g.  As a convenience the parser also accepts
// unparenthesized chains (left-associated, ";" binding looser than "*");
// printing always emits the fully parenthesized core grammar.
ObjPtr parse_obj(const std::string& text);
CellPtr parse_cell(const std::string& text);

// Generators referenced by a term, in first-appearance order.
GenSet infer_gens(const ObjPtr& x);
GenSet infer_gens(const CellPtr& c);

}  // namespace bicoh

#endif
