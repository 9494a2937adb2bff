#include "fourdom/fourdom.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "fourdom/domination.hpp"
#include "fourdom/error.hpp"
#include "fourdom/serialize.hpp"

struct fourdom_context {
  fourdom::AxiomRegistry axioms;
  fourdom::EngineOptions options;

  fourdom::EngineOptions engine() const {
    fourdom::EngineOptions o = options;
    o.axioms = &axioms;
    return o;
  }
};

struct fourdom_form {
  fourdom::IntForm form;
};

struct fourdom_manifold {
  fourdom::ManifoldDescriptor d;
};

struct fourdom_decision {
  fourdom::Decision d;
};

namespace {

thread_local std::string last_error;

fourdom_status status_for(fourdom::ErrorCode code) {
  using fourdom::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return FOURDOM_ERR_PARSE;
    case ErrorCode::InvalidDescriptor: return FOURDOM_ERR_INVALID_DESCRIPTOR;
    case ErrorCode::NotSymmetric: return FOURDOM_ERR_NOT_SYMMETRIC;
    case ErrorCode::NotUnimodular:
    case ErrorCode::NotUnimodularAfterAugmentation: return FOURDOM_ERR_NOT_UNIMODULAR;
    case ErrorCode::NotHermitian: return FOURDOM_ERR_NOT_HERMITIAN;
    case ErrorCode::Degenerate: return FOURDOM_ERR_DEGENERATE;
    case ErrorCode::RankMismatch: return FOURDOM_ERR_RANK_MISMATCH;
    case ErrorCode::RankTooLarge: return FOURDOM_ERR_RANK_TOO_LARGE;
    case ErrorCode::BoundTooLarge: return FOURDOM_ERR_BOUND_TOO_LARGE;
    case ErrorCode::UnsupportedPi1Combination: return FOURDOM_ERR_UNSUPPORTED_PI1;
    case ErrorCode::Pi1Mismatch: return FOURDOM_ERR_PI1_MISMATCH;
    case ErrorCode::InvalidArgument: return FOURDOM_ERR_INVALID_ARGUMENT;
    case ErrorCode::Internal: return FOURDOM_ERR_INTERNAL;
  }
  return FOURDOM_ERR_INTERNAL;
}

template <class F>
fourdom_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return FOURDOM_OK;
  } catch (const fourdom::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    return FOURDOM_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FOURDOM_ERR_INTERNAL;
  }
}

fourdom_status null_argument() {
  last_error = "null argument";
  return FOURDOM_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const fourdom::Json& j, char** out) { *out = copy_string(j.dump()); }

fourdom::EngineOptions engine_of(const fourdom_context* ctx) {
  return ctx ? ctx->engine() : fourdom::EngineOptions{};
}

}  // namespace

extern "C" {

const char* fourdom_last_error(void) { return last_error.c_str(); }

const char* fourdom_status_name(fourdom_status status) {
  switch (status) {
    case FOURDOM_OK: return "ok";
    case FOURDOM_ERR_PARSE: return "ParseError";
    case FOURDOM_ERR_INVALID_DESCRIPTOR: return "InvalidDescriptor";
    case FOURDOM_ERR_NOT_SYMMETRIC: return "NotSymmetric";
    case FOURDOM_ERR_NOT_UNIMODULAR: return "NotUnimodular";
    case FOURDOM_ERR_NOT_HERMITIAN: return "NotHermitian";
    case FOURDOM_ERR_DEGENERATE: return "Degenerate";
    case FOURDOM_ERR_RANK_MISMATCH: return "RankMismatch";
    case FOURDOM_ERR_RANK_TOO_LARGE: return "RankTooLarge";
    case FOURDOM_ERR_BOUND_TOO_LARGE: return "BoundTooLarge";
    case FOURDOM_ERR_UNSUPPORTED_PI1: return "UnsupportedPi1Combination";
    case FOURDOM_ERR_PI1_MISMATCH: return "Pi1Mismatch";
    case FOURDOM_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case FOURDOM_ERR_INTERNAL: return "Internal";
  }
  return "unknown";
}

void fourdom_string_free(char* s) { std::free(s); }

fourdom_status fourdom_context_create(fourdom_context** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new fourdom_context{fourdom::axioms_from_environment(), {}}; });
}

void fourdom_context_destroy(fourdom_context* ctx) { delete ctx; }

fourdom_status fourdom_context_set_z2_extrapolation(fourdom_context* ctx, int enabled) {
  if (!ctx) return null_argument();
  ctx->options.z2_extrapolation = enabled != 0;
  return FOURDOM_OK;
}

fourdom_status fourdom_context_set_definite_cap(fourdom_context* ctx, int cap) {
  if (!ctx) return null_argument();
  if (cap < 0) {
    last_error = "definite cap must be non-negative";
    return FOURDOM_ERR_INVALID_ARGUMENT;
  }
  ctx->options.forms.definite_cap = cap;
  return FOURDOM_OK;
}

fourdom_status fourdom_context_load_axioms(fourdom_context* ctx, const char* path) {
  if (!ctx || !path) return null_argument();
  return guarded([&] { ctx->axioms = fourdom::load_axioms(path); });
}

fourdom_status fourdom_form_parse(const char* text, fourdom_form** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    const std::string t(text);
    const auto first = t.find_first_not_of(" \t\r\n");
    fourdom::IntForm f = (first != std::string::npos && (t[first] == '{' || t[first] == '"'))
                             ? fourdom::form_from_json(fourdom::parse_json_text(t))
                             : fourdom::parse_form_expression(t);
    *out = new fourdom_form{std::move(f)};
  });
}

void fourdom_form_destroy(fourdom_form* f) { delete f; }

fourdom_status fourdom_form_classify_json(const fourdom_context* ctx, const fourdom_form* f, char** json) {
  if (!f || !json) return null_argument();
  return guarded([&] {
    const auto opts = engine_of(ctx).forms;
    const auto& form = f->form;
    fourdom::Json j = {{"rank", form.rank()},
                       {"signature", form.signature()},
                       {"parity", fourdom::to_string(form.parity())},
                       {"definite", form.is_definite()},
                       {"class", fourdom::to_json(fourdom::classify(form, opts))}};
    emit(j, json);
  });
}

fourdom_status fourdom_form_split_json(const fourdom_context* ctx, const fourdom_form* x, const fourdom_form* y,
                                       char** json) {
  if (!x || !y || !json) return null_argument();
  return guarded([&] { emit(fourdom::to_json(fourdom::split_off(x->form, y->form, engine_of(ctx).forms)), json); });
}

fourdom_status fourdom_manifold_parse(const fourdom_context* ctx, const char* text, fourdom_manifold** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    const auto& axioms = ctx ? ctx->axioms : fourdom::AxiomRegistry::builtin();
    *out = new fourdom_manifold{fourdom::parse_descriptor_text(text, axioms)};
  });
}

void fourdom_manifold_destroy(fourdom_manifold* m) { delete m; }

fourdom_status fourdom_manifold_check_json(const fourdom_context* ctx, const char* text, char** json, int* valid) {
  if (!text || !json) return null_argument();
  return guarded([&] {
    const std::string t(text);
    const auto first = t.find_first_not_of(" \t\r\n");
    const fourdom::Json input = (first != std::string::npos && (t[first] == '{' || t[first] == '"'))
                                    ? fourdom::parse_json_text(t)
                                    : fourdom::Json(t);
    const auto d = fourdom::descriptor_from_json(input);
    const auto violations = fourdom::validate(d, ctx ? ctx->axioms : fourdom::AxiomRegistry::builtin());
    fourdom::Json list = fourdom::Json::array();
    for (const auto& v : violations) list.push_back({{"rule", v.rule}, {"message", v.message}});
    if (valid) *valid = violations.empty() ? 1 : 0;
    emit({{"valid", violations.empty()}, {"violations", list}, {"descriptor", fourdom::to_json(d)}}, json);
  });
}

fourdom_status fourdom_manifold_to_json(const fourdom_manifold* m, char** json) {
  if (!m || !json) return null_argument();
  return guarded([&] { emit(fourdom::to_json(m->d), json); });
}

fourdom_status fourdom_manifold_report_json(const fourdom_context* ctx, const fourdom_manifold* m, char** json) {
  if (!m || !json) return null_argument();
  return guarded([&] {
    const auto& d = m->d;
    const auto& form = fourdom::form_of(d);
    fourdom::Json j = {{"pi1", fourdom::pi1_label(d)},
                       {"betti", fourdom::betti(d)},
                       {"chi", fourdom::chi(d)},
                       {"signature", form.signature()},
                       {"parity", fourdom::to_string(form.parity())},
                       {"form_class", fourdom::to_json(fourdom::classify(form, engine_of(ctx).forms))},
                       {"ks", fourdom::ks_of(d)}};
    if (const auto* fc = std::get_if<fourdom::FiniteCyclic>(&d)) j["w2"] = fourdom::to_string(fc->w2);
    if (const auto* ic = std::get_if<fourdom::InfiniteCyclic>(&d)) {
      j["beta2_minus_abs_signature"] = fourdom::indefinite_excess(d);
      if (ic->lambda_form) j["lambda_determinant"] = fourdom::to_json(fourdom::determinant(*ic->lambda_form));
      if (std::holds_alternative<fourdom::ExtendedWitness>(ic->extension)) j["extension"] = "extended_witness";
      else if (std::holds_alternative<fourdom::RegisteredNonExtended>(ic->extension)) j["extension"] = "registered_non_extended";
      else j["extension"] = "unknown";
    }
    j["descriptor"] = fourdom::to_json(d);
    emit(j, json);
  });
}

fourdom_status fourdom_manifold_decompose_json(const fourdom_manifold* m, char** json) {
  if (!m || !json) return null_argument();
  return guarded([&] {
    const auto* fc = std::get_if<fourdom::FiniteCyclic>(&m->d);
    if (!fc) throw fourdom::Error(fourdom::ErrorCode::InvalidDescriptor, "decompose needs a finite cyclic descriptor");
    fourdom::Json list = fourdom::Json::array();
    for (const auto& dec : fourdom::decompose(*fc)) list.push_back(fourdom::to_json(dec));
    emit({{"decompositions", list}}, json);
  });
}

fourdom_status fourdom_manifold_z2_form_json(const fourdom_context* ctx, const fourdom_manifold* m, char** json) {
  if (!m || !json) return null_argument();
  return guarded([&] {
    const auto opts = engine_of(ctx);
    fourdom::Json j;
    if (const auto* fc = std::get_if<fourdom::FiniteCyclic>(&m->d)) {
      const auto z2 = fourdom::z2_form(*fc, opts.z2_extrapolation);
      if (!z2) {
        j = {{"available", false}, {"reason", "undecided:z2-extrapolation-off"}};
      } else {
        j = fourdom::to_json(*z2);
        j["available"] = true;
        if (fc->n % 2 == 0 && fc->n > 2) j["z2-sigma-block"] = "extrapolated";
      }
    } else {
      // No 2-torsion in H_1: the mod 2 reduction carries everything.
      j = fourdom::to_json(fourdom::mod2_reduction(fourdom::form_of(m->d)));
      j["available"] = true;
    }
    emit(j, json);
  });
}

fourdom_status fourdom_manifold_stabilize(const fourdom_manifold* m, int k, fourdom_manifold** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { *out = new fourdom_manifold{fourdom::stabilize(m->d, k)}; });
}

fourdom_status fourdom_manifold_connected_sum(const fourdom_manifold* a, const fourdom_manifold* b,
                                              fourdom_manifold** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = new fourdom_manifold{fourdom::connected_sum(a->d, b->d)}; });
}

fourdom_status fourdom_dominates(const fourdom_context* ctx, const fourdom_manifold* x, const fourdom_manifold* y,
                                 fourdom_decision** out) {
  if (!x || !y || !out) return null_argument();
  return guarded([&] { *out = new fourdom_decision{fourdom::dominates(x->d, y->d, engine_of(ctx))}; });
}

fourdom_status fourdom_stably_dominates(const fourdom_context* ctx, const fourdom_manifold* x,
                                        const fourdom_manifold* y, fourdom_decision** out) {
  if (!x || !y || !out) return null_argument();
  return guarded([&] { *out = new fourdom_decision{fourdom::stably_dominates(x->d, y->d, engine_of(ctx))}; });
}

fourdom_status fourdom_pair_report_json(const fourdom_manifold* x, const fourdom_manifold* y,
                                        const fourdom_decision* d, char** json) {
  if (!x || !y || !d || !json) return null_argument();
  return guarded([&] {
    if (!fourdom::same_pi1(x->d, y->d)) {
      emit(nullptr, json);
      return;
    }
    fourdom::Json j = {{"chi_x", fourdom::chi(x->d)},
                       {"chi_y", fourdom::chi(y->d)},
                       {"euler", fourdom::euler_check(x->d, y->d) == fourdom::EulerCheck::Consistent ? "consistent"
                                                                                                    : "violation"}};
    const auto* fx = std::get_if<fourdom::FiniteCyclic>(&x->d);
    const auto* fy = std::get_if<fourdom::FiniteCyclic>(&y->d);
    if (fx && fy) {
      if (auto report = fourdom::rigidity(*fx, *fy, d->d)) j["rigidity"] = *report;
    }
    emit(j, json);
  });
}

fourdom_status fourdom_minimal_target(const fourdom_context* ctx, const fourdom_manifold* x,
                                      fourdom_manifold** target, fourdom_decision** decision) {
  if (!x || !target || !decision) return null_argument();
  return guarded([&] {
    auto result = fourdom::minimal_target(x->d, engine_of(ctx));
    *target = new fourdom_manifold{std::move(result.target)};
    *decision = new fourdom_decision{std::move(result.decision)};
  });
}

fourdom_outcome fourdom_decision_outcome(const fourdom_decision* d) {
  if (!d) return FOURDOM_UNKNOWN;
  switch (d->d.outcome()) {
    case fourdom::Outcome::Yes: return FOURDOM_YES;
    case fourdom::Outcome::No: return FOURDOM_NO;
    case fourdom::Outcome::Unknown: return FOURDOM_UNKNOWN;
  }
  return FOURDOM_UNKNOWN;
}

fourdom_status fourdom_decision_rule(const fourdom_decision* d, char** rule) {
  if (!d || !rule) return null_argument();
  return guarded([&] { *rule = copy_string(d->d.tag()); });
}

fourdom_status fourdom_decision_to_json(const fourdom_decision* d, char** json) {
  if (!d || !json) return null_argument();
  return guarded([&] { emit(fourdom::to_json(d->d), json); });
}

void fourdom_decision_destroy(fourdom_decision* d) { delete d; }

fourdom_status fourdom_chi4_json(const char* group, char** json) {
  if (!group || !json) return null_argument();
  return guarded([&] {
    const auto g = fourdom::parse_group(group);
    const auto c = fourdom::chi4(g);
    fourdom::Json j = fourdom::to_json(c);
    j["group"] = g.label();
    j["rhs_realizable"] = c.exact && fourdom::rhs_realizable(g, c.value);
    emit(j, json);
  });
}

fourdom_status fourdom_enumerate_simply_connected_json(int bound, char** json) {
  if (!json) return null_argument();
  return guarded([&] {
    fourdom::Json list = fourdom::Json::array();
    for (const auto& m : fourdom::enumerate_simply_connected(bound)) {
      fourdom::Json entry = fourdom::to_json(fourdom::ManifoldDescriptor{m});
      entry["class"] = fourdom::describe(fourdom::classify(m.form));
      list.push_back(entry);
    }
    emit({{"bound", bound}, {"count", list.size()}, {"classes", list}}, json);
  });
}

fourdom_status fourdom_enumerate_stable_json(const fourdom_context* ctx, const fourdom_manifold* x, char** json) {
  if (!x || !json) return null_argument();
  return guarded([&] {
    const auto* ic = std::get_if<fourdom::InfiniteCyclic>(&x->d);
    if (!ic) throw fourdom::Error(fourdom::ErrorCode::Pi1Mismatch, "stable targets are enumerated for pi1 = Z");
    fourdom::Json list = fourdom::Json::array();
    for (const auto& s : fourdom::enumerate_stable_targets_Z(*ic, engine_of(ctx))) list.push_back(fourdom::to_json(s));
    emit({{"count", list.size()}, {"classes", list}}, json);
  });
}

fourdom_status fourdom_enumerate_zn_json(const fourdom_context* ctx, const fourdom_manifold* x, char** json) {
  if (!x || !json) return null_argument();
  return guarded([&] {
    const auto* fc = std::get_if<fourdom::FiniteCyclic>(&x->d);
    if (!fc) throw fourdom::Error(fourdom::ErrorCode::Pi1Mismatch, "Z/n targets need a finite cyclic source");
    fourdom::Json list = fourdom::Json::array();
    for (const auto& t : fourdom::enumerate_targets_Zn(*fc, engine_of(ctx)))
      list.push_back({{"target", fourdom::to_json(fourdom::ManifoldDescriptor{t.target})},
                      {"decision", fourdom::to_json(t.decision)}});
    emit({{"count", list.size()}, {"targets", list}}, json);
  });
}

fourdom_status fourdom_universal_dominator(int n, fourdom_manifold** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new fourdom_manifold{fourdom::universal_dominator_Z(n)}; });
}

}  // extern "C"
