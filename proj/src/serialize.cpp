#include "fourdom/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "fourdom/error.hpp"

namespace fourdom {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  parse_error("expected an integer, got " + j.dump());
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array()) parse_error("gram must be an array of rows");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) parse_error("gram rows must be arrays");
    IntVector r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) parse_error("gram entries must be integers");
      r.push_back(e.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

// -- integer forms --------------------------------------------------------------

Json to_json(const IntForm& f) {
  Json gram = Json::array();
  for (const auto& row : f.gram()) gram.push_back(row);
  return {{"gram", gram}};
}

IntForm parse_form_expression(const std::string& text) {
  IntForm total;
  static const std::regex term(R"((\d*)\s*(-?)(H|E8|A1|I\(\s*(\d+)\s*,\s*(\d+)\s*\)|0))");
  for (const auto& part : split_top(text, '+')) {
    std::smatch m;
    if (!std::regex_match(part, m, term)) parse_error("unrecognised form term '" + part + "' in '" + text + "'");
    const int copies = m[1].length() ? std::stoi(m[1]) : 1;
    const bool negate = m[2].length() > 0;
    IntForm piece;
    const std::string name = m[3];
    if (name == "H") piece = forms::hyperbolic();
    else if (name == "E8") piece = forms::e8();
    else if (name == "A1") piece = forms::ht_augmentation();
    else if (name == "0") piece = IntForm{};
    else piece = forms::diagonal(std::stoi(m[4]), std::stoi(m[5]));
    if (negate) piece = piece.negated();
    total = direct_sum(total, forms::repeat(piece, copies));
  }
  return total;
}

IntForm form_from_json(const Json& j) {
  if (j.is_string()) return parse_form_expression(j.get<std::string>());
  if (j.is_object() && j.contains("gram")) return IntForm::make(int_matrix_from_json(j.at("gram")));
  parse_error("expected a form: {\"gram\": [[...]]} or a name expression, got " + j.dump());
}

// -- Laurent --------------------------------------------------------------------

Json to_json(const LaurentPoly& p) {
  Json terms = Json::object();
  for (const auto& [exp, coef] : p.terms()) terms[std::to_string(exp)] = big_to_json(coef);
  return {{"poly", terms}};
}

LaurentPoly poly_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return LaurentPoly(big_from_json(j));
  if (!j.is_object() || !j.contains("poly") || !j.at("poly").is_object())
    parse_error("expected {\"poly\": {exponent: coefficient}}, got " + j.dump());
  std::map<int, BigInt> terms;
  for (const auto& [key, value] : j.at("poly").items()) {
    int exp = 0;
    try {
      std::size_t used = 0;
      exp = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      parse_error("bad exponent '" + key + "'");
    }
    terms[exp] += big_from_json(value);
  }
  return LaurentPoly::from_terms(terms);
}

Json to_json(const LambdaMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(r);
  }
  return rows;
}

LambdaMatrix lambda_matrix_from_json(const Json& j) {
  if (!j.is_array()) parse_error("Laurent matrix must be an array of rows");
  LambdaMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) parse_error("Laurent matrix rows must be arrays");
    std::vector<LaurentPoly> r;
    for (const auto& e : row) r.push_back(poly_from_json(e));
    m.push_back(std::move(r));
  }
  return m;
}

Json to_json(const HermitianLambdaForm& f) { return {{"lambda_gram", to_json(f.entries())}}; }

HermitianLambdaForm lambda_form_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "A") return ht_matrix_A();
  if (j.is_object() && j.contains("lambda_gram")) {
    if (j.at("lambda_gram").is_string()) return lambda_form_from_json(j.at("lambda_gram"));
    return HermitianLambdaForm::make(lambda_matrix_from_json(j.at("lambda_gram")));
  }
  parse_error("expected {\"lambda_gram\": [[...]]} or \"A\", got " + j.dump());
}

// -- reports ----------------------------------------------------------------------

Json to_json(const ModTwoForm& f) {
  return {{"gram2", f.to_matrix()}, {"alternating", f.alternating()}, {"class", classify_z2(f).label()}};
}

Json to_json(const FormClass& cls) {
  Json j = {{"label", describe(cls)}};
  if (const auto* o = std::get_if<IndefiniteOdd>(&cls)) {
    j["kind"] = "indefinite-odd";
    j["plus"] = o->plus;
    j["minus"] = o->minus;
  } else if (const auto* e = std::get_if<IndefiniteEven>(&cls)) {
    j["kind"] = "indefinite-even";
    j["hyperbolic"] = e->hyperbolic;
    j["e8"] = e->e8;
  } else if (const auto* d = std::get_if<DefiniteCatalog>(&cls)) {
    j["kind"] = "definite";
    j["sign"] = d->sign;
    j["e8"] = d->e8;
    j["ones"] = d->ones;
  } else {
    j["kind"] = "definite-unclassified";
  }
  return j;
}

Json to_json(const SplitDecision& s) {
  Json j = {{"outcome", to_string(s.outcome)}};
  if (s.outcome == Verdict::Yes) {
    j["complement"] = {{"rank", s.complement.rank},
                       {"signature", s.complement.signature},
                       {"parity", to_string(s.complement.parity)}};
    if (s.complement_form) j["complement_form"] = to_json(*s.complement_form);
    if (!s.witness.empty()) j["embedding"] = s.witness;
  }
  if (s.obstruction) j["obstruction"] = to_string(*s.obstruction);
  if (!s.detail.empty()) j["detail"] = s.detail;
  return j;
}

// -- descriptors ------------------------------------------------------------------

Json to_json(const ManifoldDescriptor& d) {
  Json j;
  if (const auto* s = std::get_if<SimplyConnected>(&d)) {
    j["pi1"] = "1";
    j["form"] = to_json(s->form);
    j["ks"] = s->ks;
  } else if (const auto* ic = std::get_if<InfiniteCyclic>(&d)) {
    j["pi1"] = "Z";
    j["form"] = to_json(ic->int_form);
    j["ks"] = ic->ks;
    if (ic->lambda_form) j["lambda_form"] = to_json(*ic->lambda_form);
    if (const auto* w = std::get_if<ExtendedWitness>(&ic->extension))
      j["extension_status"] = {{"kind", "extended_witness"}, {"p", to_json(w->p)}, {"b", to_json(w->b)}};
    else if (const auto* a = std::get_if<RegisteredNonExtended>(&ic->extension))
      j["extension_status"] = {{"kind", "registered_non_extended"}, {"axiom", a->axiom_id}};
    else
      j["extension_status"] = "unknown";
  } else {
    const auto& fc = std::get<FiniteCyclic>(d);
    j["pi1"] = {{"Zn", fc.n}};
    j["form"] = to_json(fc.form);
    j["w2"] = to_string(fc.w2);
    j["ks"] = fc.ks;
  }
  return j;
}

namespace {

ManifoldDescriptor named_sum(const std::string& text) {
  std::optional<ManifoldDescriptor> total;
  for (const auto& part : split_top(text, '#')) {
    auto piece = builtin_manifold(part);
    if (!piece) parse_error("unknown manifold name '" + part + "'");
    total = total ? connected_sum(*total, *piece) : *piece;
  }
  return *total;
}

int ks_from_json(const Json& j) {
  if (!j.contains("ks")) return 0;
  if (!j.at("ks").is_number_integer()) parse_error("ks must be 0 or 1");
  return j.at("ks").get<int>();
}

}  // namespace

ManifoldDescriptor descriptor_from_json(const Json& j) {
  if (j.is_string()) return named_sum(j.get<std::string>());
  if (!j.is_object()) parse_error("expected a descriptor object or name, got " + j.dump());
  if (!j.contains("pi1")) parse_error("descriptor needs \"pi1\"");
  if (!j.contains("form")) parse_error("descriptor needs \"form\"");
  const Json& pi1 = j.at("pi1");
  const IntForm form = form_from_json(j.at("form"));
  const int ks = ks_from_json(j);

  if (pi1 == "1") return SimplyConnected{form, ks};
  if (pi1 == "Z") {
    InfiniteCyclic ic{form, std::nullopt, ExtensionUnknown{}, ks};
    if (j.contains("lambda_form") && !j.at("lambda_form").is_null())
      ic.lambda_form = lambda_form_from_json(j.at("lambda_form"));
    if (j.contains("extension_status")) {
      const Json& e = j.at("extension_status");
      if (e == "unknown" || e.is_null()) {
        ic.extension = ExtensionUnknown{};
      } else if (e.is_object() && e.value("kind", "") == "extended_witness") {
        if (!e.contains("p") || !e.contains("b")) parse_error("extended_witness needs \"p\" and \"b\"");
        ic.extension = ExtendedWitness{lambda_matrix_from_json(e.at("p")), form_from_json(e.at("b"))};
      } else if (e.is_object() && e.value("kind", "") == "registered_non_extended") {
        if (!e.contains("axiom") || !e.at("axiom").is_string()) parse_error("registered_non_extended needs \"axiom\"");
        ic.extension = RegisteredNonExtended{e.at("axiom").get<std::string>()};
      } else {
        parse_error("unrecognised extension_status " + e.dump());
      }
    }
    return ic;
  }
  if (pi1.is_object() && pi1.contains("Zn") && pi1.at("Zn").is_number_integer()) {
    if (!j.contains("w2") || !j.at("w2").is_string()) parse_error("finite cyclic descriptor needs \"w2\"");
    const auto w2 = parse_w2(j.at("w2").get<std::string>());
    if (!w2) parse_error("w2 must be one of I, II, III, spin, nonspin");
    return FiniteCyclic{pi1.at("Zn").get<int>(), form, *w2, ks};
  }
  parse_error("pi1 must be \"1\", \"Z\" or {\"Zn\": n}, got " + pi1.dump());
}

ManifoldDescriptor parse_descriptor(const Json& j, const AxiomRegistry& axioms) {
  ManifoldDescriptor d = descriptor_from_json(j);
  require_valid(d, axioms);
  return d;
}

ManifoldDescriptor parse_descriptor_text(const std::string& text, const AxiomRegistry& axioms) {
  const std::string t = trim(text);
  if (!t.empty() && (t.front() == '{' || t.front() == '"')) return parse_descriptor(parse_json_text(t), axioms);
  return parse_descriptor(Json(t), axioms);
}

Json to_json(const Decomposition& d) {
  return {{"sigma", d.sigma.name()}, {"m", to_json(ManifoldDescriptor{d.m})}};
}

Json to_json(const Decision& d) {
  Json j = {{"outcome", to_string(d.outcome())}};
  if (const auto* c = std::get_if<Certificate>(&d.result)) {
    Json cert = {{"rule", c->rule}, {"chain", c->chain}};
    if (c->split) cert["split"] = to_json(*c->split);
    if (c->x_decomposition) cert["x_decomposition"] = to_json(*c->x_decomposition);
    if (c->y_decomposition) cert["y_decomposition"] = to_json(*c->y_decomposition);
    if (c->stabilization) cert["stabilization"] = c->stabilization;
    j["certificate"] = cert;
  } else if (const auto* o = std::get_if<Obstruction>(&d.result)) {
    Json values = Json::object();
    for (const auto& [k, v] : o->values) values[k] = v;
    j["obstruction"] = {{"rule", o->rule}, {"detail", o->detail}, {"values", values}};
  } else {
    const auto& u = std::get<Undetermined>(d.result);
    j["reason"] = u.reason;
    j["detail"] = u.detail;
  }
  return j;
}

Json to_json(const Chi4& c) {
  if (c.exact) return {{"value", c.value}};
  return {{"lower_bound", c.value}};
}

Json to_json(const StableClass& s) {
  return {{"rank", s.invariants.rank},
          {"signature", s.invariants.signature},
          {"parity", to_string(s.invariants.parity)},
          {"ks", s.ks},
          {"form", to_json(s.form)}};
}

// -- axioms ---------------------------------------------------------------------------

AxiomRegistry axioms_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("axioms") || !j.at("axioms").is_array())
    parse_error("axiom file needs {\"axioms\": [...]}");
  AxiomRegistry registry;
  for (const auto& entry : j.at("axioms")) {
    if (!entry.is_object() || !entry.contains("id") || !entry.at("id").is_string())
      parse_error("each axiom needs a string \"id\"");
    registry.add(entry.at("id").get<std::string>(), lambda_form_from_json(entry));
  }
  return registry;
}

AxiomRegistry load_axioms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read axiom file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return axioms_from_json(parse_json_text(buffer.str()));
}

AxiomRegistry axioms_from_environment() {
  const char* path = std::getenv("FOURDOM_AXIOMS");
  if (path && *path) return load_axioms(path);
  return AxiomRegistry::builtin();
}

}  // namespace fourdom
