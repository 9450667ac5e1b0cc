#ifndef LOOPALG_SERIALIZE_HPP
#define LOOPALG_SERIALIZE_HPP

#include <json.hpp>

#include "loopalg/catalog.hpp"

namespace loopalg {

using json = nlohmann::json;

/// {"Z": "<decimal>"} | {"Q": "<num>/<den>"} | {"F2": 0|1}
json scalar_to_json(const Scalar& c);
Scalar scalar_from_json(const json& j);

/// {gen name: exponent}, omitting zero exponents.
json monomial_to_json(const GradedAlgebra& A, const Monomial& m);
Monomial monomial_from_json(const GradedAlgebra& A, const json& j);

/// [{monomial: {...}, coeff: {...}}, ...]
json element_to_json(const GradedAlgebra& A, const Element& e);
Element element_from_json(const GradedAlgebra& A, const json& j);

/// {ring, generators: [{name, degree, kind}], rewrites: [{lhs, rhs}],
///  torsions: [{modulus, pattern}]}
json algebra_to_json(const PresentedAlgebra& A);
PresentedAlgebra algebra_from_json(const json& j);

/// Whole model: both algebra presentations plus Hopf, suspension, primitive
/// and derivation data, keyed by generator name.  Round-trips bit-exactly.
json model_to_json(const LoopModel& M);
LoopModel model_from_json(const json& j);

json loop_element_to_json(const LoopModel& M, const LoopElement& e);
LoopElement loop_element_from_json(const LoopModel& M, const json& j);

}  // namespace loopalg

#endif
