// Command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "fourdom/fourdom.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kUsageError = 3;

struct Failure {
  std::string message;
};

void check(fourdom_status status) {
  if (status != FOURDOM_OK) throw Failure{std::string(fourdom_status_name(status)) + ": " + fourdom_last_error()};
}

/// Owns a string returned by the C API.
std::string take(char* s) {
  std::string out = s ? s : "";
  fourdom_string_free(s);
  return out;
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Context = std::unique_ptr<fourdom_context, Deleter<fourdom_context, fourdom_context_destroy>>;
using Form = std::unique_ptr<fourdom_form, Deleter<fourdom_form, fourdom_form_destroy>>;
using Manifold = std::unique_ptr<fourdom_manifold, Deleter<fourdom_manifold, fourdom_manifold_destroy>>;
using DecisionHandle = std::unique_ptr<fourdom_decision, Deleter<fourdom_decision, fourdom_decision_destroy>>;

/// A value naming an existing file is replaced by the file's contents.
std::string resolve_input(const std::string& value) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(value, ec)) return value;
  std::ifstream in(value);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Form load_form(const std::string& value) {
  fourdom_form* f = nullptr;
  check(fourdom_form_parse(resolve_input(value).c_str(), &f));
  return Form(f);
}

Manifold load_manifold(const fourdom_context* ctx, const std::string& value) {
  fourdom_manifold* m = nullptr;
  check(fourdom_manifold_parse(ctx, resolve_input(value).c_str(), &m));
  return Manifold(m);
}

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        os << pad << key << ":\n";
        render_text(value, os, indent + 1);
      } else {
        os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    const bool matrix = std::all_of(j.begin(), j.end(), [](const Json& e) {
      return e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_primitive(); });
    });
    if (flat || matrix) {
      for (const auto& e : j) os << pad << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "- [" << i << "]\n";
      render_text(j[i], os, indent + 1);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Output {
  std::string format = "json";

  void print(const Json& j) const {
    if (format == "text") render_text(j, std::cout, 0);
    else std::cout << j.dump(2) << "\n";
  }
};

int outcome_exit(fourdom_outcome outcome) { return static_cast<int>(outcome); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-one map decisions for 4-manifolds with cyclic fundamental group"};
  app.require_subcommand(1);

  Output out;
  std::string z2 = "off";
  int definite_cap = 9;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--z2-extrapolation", z2, "Use the n = 2 Z/2 sphere models for even n > 2")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--definite-cap", definite_cap, "Largest definite rank searched exhaustively")
      ->check(CLI::NonNegativeNumber);

  std::string x, y, group;
  int bound = 0;
  auto verb = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto* classify_form = verb("classify-form", "Invariants and isomorphism class of a unimodular form");
  classify_form->add_option("--x", x, "Form (JSON, file or name expression)")->required();
  auto* split = verb("split", "Decide whether --y is an orthogonal summand of --x");
  split->add_option("--x", x)->required();
  split->add_option("--y", y)->required();
  auto* classify_manifold = verb("classify-manifold", "Invariants of a manifold descriptor");
  classify_manifold->add_option("--x", x)->required();
  auto* validate = verb("validate", "List violated descriptor rules");
  validate->add_option("--x", x)->required();
  auto* decompose = verb("decompose", "Sigma # M decompositions of a Z/n descriptor");
  decompose->add_option("--x", x)->required();
  auto* dominates = verb("dominates", "Does --x admit a degree-one map onto --y");
  dominates->add_option("--x", x)->required();
  dominates->add_option("--y", y)->required();
  auto* stably = verb("stably-dominates", "Degree-one map after adding copies of S2xS2 (pi1 = Z)");
  stably->add_option("--x", x)->required();
  stably->add_option("--y", y)->required();
  auto* chi4 = verb("chi4", "Minimal Euler characteristic for a group");
  chi4->add_option("--group", group, "1, Z, Zn:k, Ab:d1,d2,... or beta1:k")->required();
  auto* minimal = verb("minimal-target", "Target realizing chi4 that --x dominates");
  minimal->add_option("--x", x)->required();
  auto* enum_sc = verb("enumerate-sc", "Simply connected classes with beta2 <= bound");
  enum_sc->add_option("--bound", bound)->required();
  auto* enum_stable = verb("enumerate-stable", "Stable pi1 = Z classes stably dominated by --x");
  enum_stable->add_option("--x", x)->required();
  auto* enum_zn = verb("enumerate-zn", "Z/n targets of --x with decisions");
  enum_zn->add_option("--x", x)->required();
  auto* universal = verb("universal-dominator", "pi1 = Z manifold dominating every pi1 = Z manifold with beta2 <= bound");
  universal->add_option("--bound", bound)->required();
  auto* z2_form = verb("z2-form", "Intersection form with Z/2 coefficients");
  z2_form->add_option("--x", x)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    fourdom_context* raw = nullptr;
    check(fourdom_context_create(&raw));
    Context ctx(raw);
    check(fourdom_context_set_z2_extrapolation(ctx.get(), z2 == "on"));
    check(fourdom_context_set_definite_cap(ctx.get(), definite_cap));

    auto decide = [&](fourdom_status (*fn)(const fourdom_context*, const fourdom_manifold*, const fourdom_manifold*,
                                           fourdom_decision**),
                      bool pair_report) {
      auto mx = load_manifold(ctx.get(), x);
      auto my = load_manifold(ctx.get(), y);
      fourdom_decision* d = nullptr;
      check(fn(ctx.get(), mx.get(), my.get(), &d));
      DecisionHandle decision(d);
      char* s = nullptr;
      check(fourdom_decision_to_json(decision.get(), &s));
      Json j = Json::parse(take(s));
      if (pair_report) {
        check(fourdom_pair_report_json(mx.get(), my.get(), decision.get(), &s));
        Json report = Json::parse(take(s));
        if (!report.is_null()) j["euler"] = report;
      }
      out.print(j);
      return outcome_exit(fourdom_decision_outcome(decision.get()));
    };

    char* s = nullptr;
    if (classify_form->parsed()) {
      auto f = load_form(x);
      check(fourdom_form_classify_json(ctx.get(), f.get(), &s));
      out.print(Json::parse(take(s)));
      return 0;
    }
    if (split->parsed()) {
      auto fx = load_form(x);
      auto fy = load_form(y);
      check(fourdom_form_split_json(ctx.get(), fx.get(), fy.get(), &s));
      Json j = Json::parse(take(s));
      out.print(j);
      const std::string outcome = j.at("outcome");
      return outcome == "yes" ? 0 : outcome == "no" ? 1 : 2;
    }
    if (classify_manifold->parsed()) {
      auto m = load_manifold(ctx.get(), x);
      check(fourdom_manifold_report_json(ctx.get(), m.get(), &s));
      out.print(Json::parse(take(s)));
      return 0;
    }
    if (validate->parsed()) {
      int valid = 0;
      check(fourdom_manifold_check_json(ctx.get(), resolve_input(x).c_str(), &s, &valid));
      out.print(Json::parse(take(s)));
      return valid ? 0 : kUsageError;
    }
    if (decompose->parsed()) {
      auto m = load_manifold(ctx.get(), x);
      check(fourdom_manifold_decompose_json(m.get(), &s));
      out.print(Json::parse(take(s)));
      return 0;
    }
    if (dominates->parsed()) return decide(fourdom_dominates, true);
    if (stably->parsed()) return decide(fourdom_stably_dominates, false);
    if (chi4->parsed()) {
      check(fourdom_chi4_json(group.c_str(), &s));
      out.print(Json::parse(take(s)));
      return 0;
    }
    if (minimal->parsed()) {
      auto m = load_manifold(ctx.get(), x);
      fourdom_manifold* t = nullptr;
      fourdom_decision* d = nullptr;
      check(fourdom_minimal_target(ctx.get(), m.get(), &t, &d));
      Manifold target(t);
      DecisionHandle decision(d);
      check(fourdom_manifold_report_json(ctx.get(), target.get(), &s));
      Json j = {{"target", Json::parse(take(s))}};
      check(fourdom_decision_to_json(decision.get(), &s));
      j["decision"] = Json::parse(take(s));
      out.print(j);
      return outcome_exit(fourdom_decision_outcome(decision.get()));
    }
    if (enum_sc->parsed()) {
      check(fourdom_enumerate_simply_connected_json(bound, &s));
      out.print(Json::parse(take(s)));
      return 0;
    }
    if (enum_stable->parsed()) {
      auto m = load_manifold(ctx.get(), x);
      check(fourdom_enumerate_stable_json(ctx.get(), m.get(), &s));
      out.print(Json::parse(take(s)));
      return 0;
    }
    if (enum_zn->parsed()) {
      auto m = load_manifold(ctx.get(), x);
      check(fourdom_enumerate_zn_json(ctx.get(), m.get(), &s));
      out.print(Json::parse(take(s)));
      return 0;
    }
    if (universal->parsed()) {
      fourdom_manifold* m = nullptr;
      check(fourdom_universal_dominator(bound, &m));
      Manifold u(m);
      check(fourdom_manifold_report_json(ctx.get(), u.get(), &s));
      Json report = Json::parse(take(s));
      report.erase("descriptor");
      out.print(report);
      return 0;
    }
    if (z2_form->parsed()) {
      auto m = load_manifold(ctx.get(), x);
      check(fourdom_manifold_z2_form_json(ctx.get(), m.get(), &s));
      out.print(Json::parse(take(s)));
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
