#pragma once

#include <complex>

#include <json.hpp>

#include "tlrc/braidrep.hpp"
#include "tlrc/laurent.hpp"
#include "tlrc/rational.hpp"
#include "tlrc/recoupling.hpp"
#include "tlrc/tl.hpp"

namespace tlrc {

using Json = nlohmann::ordered_json;

/// {"coeffs": [[exponent, "coefficient"], ...]}, exponents ascending.
Json to_json(const LaurentPoly& p);
/// Inverse of to_json; throws ParseError on malformed input.
LaurentPoly laurent_from_json(const Json& j);

/// {"num": poly, "den": poly}.
Json to_json(const RationalFunction& f);
RationalFunction rational_from_json(const Json& j);
/// A bare polynomial document when the denominator is 1, else the {"num","den"} form.
Json exact_value_json(const RationalFunction& f);

/// [re, im].
Json to_json(std::complex<double> z);

/// {"n": bottom, "m": top, "terms": [{"pairing": [...], "coeff": {num, den}}]}.
Json to_json(const TLElement& x);

/// {"a","b","c","d","r","rows","cols","entries"}.
Json to_json(const RecouplingMatrix& m);

/// {"n","ell","t","r","basis","matrix"}; "r" is null for a generic basis.
Json to_json(const FusionBasis& basis, const Eigen::MatrixXcd& u);
Json to_json(const FusionBasis& basis, const ExactMatrix& u);

Json to_json(const CheckEntry& e);
Json to_json(const std::vector<CheckEntry>& entries);

}  // namespace tlrc
