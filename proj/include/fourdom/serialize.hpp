#pragma once

// JSON wire format for forms, descriptors and decisions.

#include <string>

#include <json.hpp>

#include "fourdom/domination.hpp"
#include "fourdom/intforms.hpp"
#include "fourdom/laurent.hpp"
#include "fourdom/manifolds.hpp"
#include "fourdom/modtwo.hpp"

namespace fourdom {

using Json = nlohmann::ordered_json;

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_json_text(const std::string& text);

Json to_json(const IntForm& f);
/// {"gram": [[...]]} or a name expression such as "E8+H", "3H", "I(2,1)",
/// "-E8", "A1", "0".
IntForm form_from_json(const Json& j);
IntForm parse_form_expression(const std::string& text);

Json to_json(const LaurentPoly& p);
/// {"poly": {"-1": 1, "1": 1}} or a bare integer.
LaurentPoly poly_from_json(const Json& j);

Json to_json(const LambdaMatrix& m);
LambdaMatrix lambda_matrix_from_json(const Json& j);
Json to_json(const HermitianLambdaForm& f);
/// {"lambda_gram": [[poly, ...], ...]} or the name "A".
HermitianLambdaForm lambda_form_from_json(const Json& j);

Json to_json(const ModTwoForm& f);
Json to_json(const FormClass& cls);
Json to_json(const SplitDecision& s);

Json to_json(const ManifoldDescriptor& d);
/// Object form, a built-in name, or a '#'-separated connected sum of
/// built-ins (left associative). Structural errors throw ParseError; the
/// result is not validated.
ManifoldDescriptor descriptor_from_json(const Json& j);
/// Like descriptor_from_json and then validated (InvalidDescriptor).
ManifoldDescriptor parse_descriptor(const Json& j, const AxiomRegistry& axioms = AxiomRegistry::builtin());
/// Accepts JSON text or a bare name expression.
ManifoldDescriptor parse_descriptor_text(const std::string& text,
                                         const AxiomRegistry& axioms = AxiomRegistry::builtin());

Json to_json(const Decomposition& d);
Json to_json(const Decision& d);
Json to_json(const Chi4& c);
Json to_json(const StableClass& s);

/// {"axioms": [{"id": "...", "lambda_gram": [...]}, ...]}
AxiomRegistry axioms_from_json(const Json& j);
AxiomRegistry load_axioms(const std::string& path);
/// FOURDOM_AXIOMS if set, otherwise the built-in registry.
AxiomRegistry axioms_from_environment();

}  // namespace fourdom
