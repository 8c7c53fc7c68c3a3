#pragma once

#include <string>
#include <string_view>

#include "weylbkk/bkk.hpp"
#include "weylbkk/morphisms.hpp"

namespace weylbkk::io {

/// Canonical printing: graded-lexicographic term order, leading term first.
/// parse(print(e)) == e for every element.
std::string to_string(const Scalar& s);
std::string to_string(const WeylElement& e);                 // generators x1..xn, y1..yn
std::string to_string(const Poly& q, char var = 'z');        // variables z1..z_k (or x for potentials)
std::string to_string(const SymplectoMap& s);

/// Grammar: expr := ['-'] term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
/// factor := atom ('^' nat)? ; atom := nat | 't' | gen | '(' expr ')' ;
/// gen := ('x'|'y') nat. Division requires a scalar divisor; 't' requires the
/// F_p(t) ring. Products are normal-ordered as they are read.
WeylElement parse_weyl_expr(std::string_view text, unsigned n, const RingDescriptor& ring);

/// Same grammar with commutative variables named <var>1..<var>nvars.
Poly parse_poly_expr(std::string_view text, unsigned nvars, const RingDescriptor& ring, char var = 'z');

/// A coefficient literal on its own: integer or t-fraction.
Scalar parse_scalar(std::string_view text, const RingDescriptor& ring);

RingDescriptor ring_from_json(const std::string& json_text);

/// Morphism documents are JSON objects:
///   { "n": 1, "ring": {"kind": "prime_field", "p": 7},
///     "images": ["x1", "y1+x1^2"],
///     "inverse_images": [...],                         (optional)
///     "word": [ {"type": "elementary", "potential": "x1^3"},
///               {"type": "linear", "matrix": [["0","1"],["-1","0"]]} ] }  (optional)
/// When both images and word are present they must agree exactly.
WeylMorphism parse_morphism(const std::string& json_text);
std::string emit_morphism(const WeylMorphism& f);

/// Word documents: { "n": .., "ring": .., "word": [...] } with no images.
TameWord parse_word_document(const std::string& json_text, unsigned& n_out, RingDescriptor& ring_out);
std::string emit_word_document(unsigned n, const RingDescriptor& ring, const TameWord& word);

/// Deterministic JSON for reports: {check, params, pass, witnesses[], timing_ms}.
/// Key order and term order are stable so runs are diffable.
std::string emit_report(const CheckReport& rep);
std::string emit_report(const IndependenceReport& rep);

} // namespace weylbkk::io
