#pragma once

// Text and JSON forms of the library's values. Schemas are in docs/formats.md.

#include "dioph/heights.hpp"
#include "dioph/lattice.hpp"
#include "dioph/polyindex.hpp"
#include "dioph/siegel.hpp"

#include <json.hpp>

namespace dioph {

using Json = nlohmann::ordered_json;

/// Expressions over Q with + - * ^ and parentheses; exponents are
/// nonnegative integer literals. ParseError offsets are 1-based columns.
RatPoly parse_rat_poly(std::string_view text);
/// Same grammar; the result must have integer coefficients.
IntPoly parse_int_poly(std::string_view text);
/// Variables x1..xm (or x, y, z, w for the first four); arity 0 means
/// "largest variable index used".
QPoly parse_multi_poly(std::string_view text, std::size_t arity = 0);

/// Either an expression string or {"coeffs": [...]} (constant term first).
RatPoly rat_poly_from_json(const Json& j);
IntPoly int_poly_from_json(const Json& j);
QPoly multi_poly_from_json(const Json& j);

Rational rational_from_json(const Json& j);  // "p/q", "p", decimal string, or JSON integer
Json to_json(const Rational& q);             // always "p/q"
Json to_json(const Integer& z);              // "z"
Json to_json(const RealEnclosure& e);        // {"lo", "hi", "approx"}
Json to_json(const HeightValue& h);          // {"exact": "p/q" | null, "enclosure": ...}
Json to_json(const IndexValue& v);           // "inf" | "p/q"
Json to_json(const IntPoly& f);              // {"coeffs": [...], "text": ...}
Json to_json(const RatPoly& f);
Json to_json(const QPoly& p);                // {"arity", "terms": [{"coeff", "exps"}]}
Json to_json(const IntVector& v);
Json to_json(const NFElement& a);            // {"rep": [...]}

IntRows int_matrix_from_json(const Json& j);  // {"rows", "cols", "entries"}
NFMatrix nf_matrix_from_json(const Json& j);  // plus "base": {"coeffs"}, "root"
ConvexBody body_from_json(const Json& j);     // {"forms", "bounds"}
Json to_json(const ConvexBody& b);

/// Algebraic number from {"poly": ..., "root": k} (k-th real root) or
/// {"poly": ..., "conjugate": k}; a bare rational is accepted too.
AlgebraicNumber algebraic_from_json(const Json& j);

}  // namespace dioph
