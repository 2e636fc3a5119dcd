#pragma once

#include <json.hpp>

#include <string>

#include "treg/algebra.hpp"
#include "treg/hypercomplex.hpp"
#include "treg/poly.hpp"
#include "treg/stem.hpp"

namespace treg {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- JSON forms -----------------------------------------------------------
//
// Multivector:  {"signature": [p, q],
//                "terms": [{"blade": [1, 2], "coeff": "-3/2"}, ...]}
// Blades are sorted index arrays (empty array for the scalar part), terms
// appear in ascending blade order, coefficients are exact rational strings.
//
// Polynomial:   {"vars": ["x0", ...], "signature": [p, q],
//                "terms": [{"exps": [3, 0, ...], "coeff": <multivector>}]}
// Variable roles are encoded in the names (x* mirror/coordinate, a* stem
// mirror, b* stem radial); terms appear in canonical monomial order.
//
// Stem:         {"steps": [0, 3, 6],
//                "components": [{"K": [1, 2], "poly": <polynomial>}, ...]}
// Zero components are omitted; K is a sorted index array.

nlohmann::json mv_to_json(const Multivector& x);
Multivector mv_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const CliffordPoly& p);
CliffordPoly poly_from_json(const nlohmann::json& j);

nlohmann::json stem_to_json(const StemFunction& f);
StemFunction stem_from_json(const nlohmann::json& j, const HypercomplexBasis& basis);

// --- Canonical text -------------------------------------------------------
//
// Fully expanded, machine-stable forms. Multivectors print as
// "3/2 + -1 e13 + 2 e134" (blade indices concatenated when all are single
// digit, '_'-separated otherwise); polynomials print one parenthesised
// coefficient per monomial, "(1) x0^3 + (-3) x0 x1^2". Both parse back
// exactly: *_from_text(*_to_text(v)) == v.

std::string mv_to_text(const Multivector& x);
Multivector mv_from_text(const std::string& text, Signature sig);

std::string poly_to_text(const CliffordPoly& p);
CliffordPoly poly_from_text(const std::string& text, const VarSpace& vars, Signature sig);

std::string stem_to_text(const StemFunction& f);

// Grouped display over the block structure of T: monomials are collected
// into radial norms |x^u|^2 and block vectors x^u where the polynomial is
// exactly such a combination, e.g. "x0^3 + 3 x0^2 x^2 - 3 x0 |x^1|^2".
// Falls back to the expanded canonical form when no grouping exists.
std::string grouped_text(const CliffordPoly& p, const StepList& T, const HypercomplexBasis& basis);

}  // namespace treg
