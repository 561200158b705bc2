#include "sgconj/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "sgconj/families.hpp"
#include "sgconj/io.hpp"

namespace sgconj {

using nlohmann::json;

namespace {

int closure_cap_from_env() {
  const char* env = std::getenv("SG_CLOSURE_CAP");
  if (!env) return kDefaultClosureCap;
  try {
    int cap = std::stoi(env);
    if (cap < 1) throw std::invalid_argument("");
    return cap;
  } catch (const std::exception&) {
    throw_format("SG_CLOSURE_CAP must be a positive integer");
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_format("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw_format("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void emit(std::ostream& out, const json& j, bool pretty) {
  if (pretty)
    out << j.dump(2) << "\n";
  else
    out << j.dump() << "\n";
}

struct OracleReport {
  json body;
  bool agree;
};

OracleReport run_oracle_verify(const Semigroup& S, const FieldSpec& field) {
  if (!S.provenance())
    throw_unsupported(
        "oracle-verify needs transformations, partial injections or matrices "
        "(table-only input carries no faithful representation)");

  const Provenance& prov = *S.provenance();
  std::vector<ExactMatrix> reps;
  reps.reserve(S.size());

  auto gf_q = [&]() -> long {
    if (field.kind != FieldSpec::Kind::Finite)
      throw_unsupported(
          "oracle-verify over this input supports fields C, R, Q or F<q>");
    return field.q;
  };

  if (const auto* tr = std::get_if<std::vector<Transformation>>(&prov.elements)) {
    bool char0 = field.kind == FieldSpec::Kind::Complex ||
                 field.kind == FieldSpec::Kind::Reals ||
                 field.kind == FieldSpec::Kind::Rationals;
    for (const auto& t : *tr)
      reps.push_back(char0 ? standard_representation(t)
                           : standard_representation_gf(t, gf_q()));
  } else if (const auto* pi =
                 std::get_if<std::vector<PartialInjection>>(&prov.elements)) {
    bool char0 = field.kind == FieldSpec::Kind::Complex ||
                 field.kind == FieldSpec::Kind::Reals ||
                 field.kind == FieldSpec::Kind::Rationals;
    for (const auto& t : *pi)
      reps.push_back(char0 ? standard_representation(t)
                           : standard_representation_gf(t, gf_q()));
  } else {
    const auto& mats = std::get<std::vector<GfMat>>(prov.elements);
    if (field.kind != FieldSpec::Kind::Finite || field.q != mats[0].f->q())
      throw_unsupported(
          "oracle-verify on a matrix monoid uses the identity representation; "
          "the field must be F_q of the entries");
    for (const auto& m : mats) reps.push_back(ExactMatrix{m});
  }

  Partition decider = conjugacy_partition(S, field);
  Partition oracle = similarity_partition(reps);

  json body;
  body["pairs_checked"] = static_cast<long>(S.size()) * S.size();
  body["n_classes_decider"] = decider.classes.size();
  body["n_classes_oracle"] = oracle.classes.size();
  json disagreements = json::array();
  for (int i = 0; i < S.size() && disagreements.size() < 20; ++i)
    for (int j2 = i + 1; j2 < S.size() && disagreements.size() < 20; ++j2)
      if (decider.same_class(i, j2) != oracle.same_class(i, j2))
        disagreements.push_back(json::array({i, j2}));
  bool agree = disagreements.empty() && decider == oracle;
  body["agree"] = agree;
  body["disagreements"] = std::move(disagreements);
  return OracleReport{std::move(body), agree};
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"exact linear-conjugacy decider for finite semigroups"};
  app.require_subcommand(1);

  std::string file, field_text = "C";
  int s_id = 0, t_id = 0;
  bool pretty = false, paper_bound = false, no_prune = false;

  auto* info = app.add_subcommand("info", "egg-box summary of a semigroup");
  info->add_option("file", file)->required();
  info->add_flag("--pretty", pretty);

  auto* conj = app.add_subcommand("conj", "decide linear conjugacy of s and t");
  conj->add_option("file", file)->required();
  conj->add_option("--s", s_id)->required();
  conj->add_option("--t", t_id)->required();
  conj->add_option("--field", field_text)->required();
  conj->add_flag("--paper-bound", paper_bound);
  conj->add_flag("--no-prune", no_prune);
  conj->add_flag("--pretty", pretty);

  auto* classes = app.add_subcommand("classes", "conjugacy classes over a field");
  classes->add_option("file", file)->required();
  classes->add_option("--field", field_text)->required();
  classes->add_flag("--pretty", pretty);

  auto* gen = app.add_subcommand("gen", "emit a built-in family as JSON");
  std::vector<std::string> gen_args;
  gen->add_option("family", gen_args,
                  "tn <n> | in <n> | mat <n> <q> | group <name>")
      ->required();
  gen->add_flag("--pretty", pretty);

  auto* oracle =
      app.add_subcommand("oracle-verify",
                         "compare the decider against exact matrix similarity");
  oracle->add_option("file", file)->required();
  oracle->add_option("--field", field_text)->required();
  oracle->add_flag("--pretty", pretty);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    json err{{"code", "usage"}, {"message", e.what()}};
    out << err.dump() << "\n";
    return 2;
  }

  int cap = closure_cap_from_env();

  if (info->parsed()) {
    Semigroup S = semigroup_from_json(load_json(file), cap);
    emit(out, info_to_json(S, pretty), pretty);
    return 0;
  }

  if (conj->parsed()) {
    Semigroup S = semigroup_from_json(load_json(file), cap);
    if (s_id < 0 || s_id >= S.size() || t_id < 0 || t_id >= S.size())
      throw_domain("--s/--t must be element ids in [0, " +
                   std::to_string(S.size()) + ")");
    FieldSpec field = FieldSpec::parse(field_text);
    SearchOptions opts;
    opts.prune = !no_prune;
    opts.paper_bound = paper_bound;
    ConjugacyVerdict v = linear_conjugate(S, s_id, t_id, field, opts);
    json body = verdict_to_json(v);
    body["field"] = field.to_string();
    if (pretty) {
      if (auto sp = element_pretty(S, s_id)) body["s_pretty"] = *sp;
      if (auto tp = element_pretty(S, t_id)) body["t_pretty"] = *tp;
      if (v.witness) {
        if (auto xp = element_pretty(S, v.witness->x))
          body["witness"]["x_pretty"] = *xp;
        if (auto xpp = element_pretty(S, v.witness->x_prime))
          body["witness"]["x_prime_pretty"] = *xpp;
      }
    }
    emit(out, body, pretty);
    return v.result ? 0 : 1;
  }

  if (classes->parsed()) {
    Semigroup S = semigroup_from_json(load_json(file), cap);
    FieldSpec field = FieldSpec::parse(field_text);
    Partition p = conjugacy_partition(S, field);
    json body = partition_to_json(p);
    body["field"] = field.to_string();
    if (pretty && S.provenance() && element_pretty(S, 0)) {
      json rendered = json::array();
      for (const auto& cls : p.classes) {
        json row = json::array();
        for (int e : cls) row.push_back(*element_pretty(S, e));
        rendered.push_back(std::move(row));
      }
      body["classes_pretty"] = std::move(rendered);
    }
    emit(out, body, pretty);
    return 0;
  }

  if (gen->parsed()) {
    if (gen_args.empty()) throw_format("gen needs a family name");
    const std::string& kind = gen_args[0];
    auto int_arg = [&](std::size_t i) -> int {
      if (i >= gen_args.size()) throw_format("gen " + kind + ": missing argument");
      try {
        return std::stoi(gen_args[i]);
      } catch (const std::exception&) {
        throw_format("gen " + kind + ": bad integer argument");
      }
    };
    Semigroup S = [&] {
      if (kind == "tn") return full_transformation_monoid(int_arg(1), cap);
      if (kind == "in") return symmetric_inverse_monoid(int_arg(1), cap);
      if (kind == "mat") return full_matrix_monoid(int_arg(1), int_arg(2), cap);
      if (kind == "group") {
        if (gen_args.size() < 2) throw_format("gen group: missing name");
        return group_table(gen_args[1]);
      }
      throw_format("unknown family: " + kind + " (want tn, in, mat, group)");
    }();
    emit(out, semigroup_to_json(S), pretty);
    return 0;
  }

  // oracle-verify
  Semigroup S = semigroup_from_json(load_json(file), cap);
  FieldSpec field = FieldSpec::parse(field_text);
  OracleReport report = run_oracle_verify(S, field);
  report.body["field"] = field.to_string();
  emit(out, report.body, pretty);
  return report.agree ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  try {
    return run_parsed(args, out);
  } catch (const SgError& e) {
    json err{{"code", e.code_name()}, {"message", e.what()}};
    out << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"code", "internal"}, {"message", e.what()}};
    out << err.dump() << "\n";
    return 2;
  }
}

}  // namespace sgconj
