// Command-line front end.  Every invocation runs exactly one verb and prints
// a single JSON document on stdout.  Exit codes: 0 verified success, 1
// definitive negative (obstruction found, property refuted), 2 malformed
// input or usage error, 3 undecided within the configured budgets.  Usage
// errors go to stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "vinberg/json_io.hpp"
#include "vinberg/vinberg.hpp"

namespace {

using vinberg::Json;

// Exit codes are a function of the verdict alone.  Codes that refute the
// queried property map to 1, malformed or inconsistent input maps to 2, and
// exhausted budgets (the question stays open) map to 3.
int error_exit_code(vinberg::ErrorCode c) {
  using E = vinberg::ErrorCode;
  switch (c) {
    case E::NonSymmetric:
    case E::BadDiagonal:
    case E::BadOffDiagonal:
    case E::PositiveOffDiagonal:
    case E::ZeroAsymmetry:
    case E::NotLarge:
    case E::NotTree:
    case E::NotRightAngled:
    case E::RankTooSmall:
    case E::DegreeTooSmall:
    case E::IsTree:
    case E::NotIrreducible:
    case E::NotLargeIrreducible:
    case E::Incompatible:
    case E::RankGapTooSmall:
    case E::NoInfinitePairInK:
    case E::BadLabels:
    case E::NoSuitableCycle:
    case E::ComplementNotAdmissible:
    case E::CyclicProductObstruction:
    case E::RelationViolation:
    case E::NotAReflection:
      return 1;
    case E::NoConvergence:
    case E::CycleBudgetExceeded:
      return 3;
    case E::InvalidArgument:
    case E::RankMismatch:
    case E::UnsupportedLabel:
    case E::UnsupportedPairing:
    case E::ZeroPatternMismatch:
    case E::Decomposable:
    case E::PreconditionViolated:
      return 2;
  }
  return 2;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    vinberg::fail(vinberg::ErrorCode::InvalidArgument, "cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    vinberg::fail(vinberg::ErrorCode::InvalidArgument, path + ": " + e.what());
  }
}

struct Options {
  std::string cartan, coxeter, rep;
  int target_dim = 0;
  int order_cap = 64;      // relation checks give up past this product order
  int word_cap = 0;        // 0: library default (2 dim^2 words)
  int max_iters = 64;      // lattice saturation rounds
  long cycle_budget = 1000000;
  int max_len = 0;         // cycle length bound; 0: full rank
  std::string pairs;       // general forge: pairs to scale, "1,2;3,4" (1-based)
  std::string method;      // forge: spanning-tree | rank-bump | general
  bool list = false;
  std::string name;
  bool pretty = false;
};

vinberg::CartanMatrix load_cartan(const Options& o) {
  if (o.cartan.empty())
    vinberg::fail(vinberg::ErrorCode::InvalidArgument, "this verb needs --cartan");
  return vinberg::cartan_from_json(load_json(o.cartan));
}

vinberg::CoxeterMatrix load_coxeter(const Options& o) {
  if (o.coxeter.empty())
    vinberg::fail(vinberg::ErrorCode::InvalidArgument, "this verb needs --coxeter");
  return vinberg::coxeter_from_json(load_json(o.coxeter));
}

// Verbs that act on a representation accept either a rep document or a
// Cartan/Coxeter pair; the pair builds the geometric representation.
vinberg::ReflectionRep load_rep(const Options& o, bool reduce) {
  if (!o.rep.empty()) return vinberg::rep_from_json(load_json(o.rep));
  if (o.cartan.empty() || o.coxeter.empty())
    vinberg::fail(vinberg::ErrorCode::InvalidArgument,
                  "this verb needs --rep, or --cartan together with --coxeter");
  auto rep = vinberg::rep_from_cartan(load_cartan(o), load_coxeter(o));
  return reduce ? vinberg::reduce_irreducible(rep) : std::move(rep);
}

Json certificates_to_json(const vinberg::Certificates& c) {
  Json j;
  j["compatible"] = c.compatible;
  j["non_symmetrizable"] = c.non_symmetrizable;
  j["rank"] = c.rank;
  j["integer_cyclic_products"] = c.integer_cyclic_products;
  return j;
}

Json forge_to_json(const vinberg::ForgeOutput& f) {
  Json j;
  j["parameter"] = vinberg::to_string(f.parameter);
  j["cartan"] = vinberg::cartan_to_json(f.cartan);
  j["coxeter"] = vinberg::coxeter_to_json(f.coxeter);
  j["certificates"] = certificates_to_json(f.certificates);
  if (!f.cycle.empty()) j["cycle"] = vinberg::detail::cycle_to_json(f.cycle);
  return j;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    int i = 0, j = 0;
    char comma = 0;
    std::stringstream ps(item);
    if (!(ps >> i >> comma >> j) || comma != ',' || i < 1 || j < 1)
      vinberg::fail(vinberg::ErrorCode::InvalidArgument,
                    "--pairs expects 1-based pairs like \"1,2;3,4\"");
    out.emplace_back(i - 1, j - 1);
  }
  return out;
}

int verb_validate(const Options& o, Json& out) {
  const int given = !o.cartan.empty() + !o.coxeter.empty() + !o.rep.empty();
  if (given != 1)
    vinberg::fail(vinberg::ErrorCode::InvalidArgument,
                  "validate needs exactly one of --cartan, --coxeter, --rep");
  if (!o.coxeter.empty()) {
    auto m = load_coxeter(o);
    out["object"] = "coxeter";
    out["valid"] = true;
    out["rank"] = m.rank();
    out["irreducible"] = vinberg::is_irreducible(m);
    out["right_angled"] = m.is_right_angled();
    out["m"] = vinberg::coxeter_to_json(m)["m"];
  } else if (!o.cartan.empty()) {
    auto a = load_cartan(o);
    out["object"] = "cartan";
    out["valid"] = true;
    out["rank"] = a.size();
    out["matrix_rank"] = vinberg::rank_of(a);
    out["a"] = vinberg::cartan_to_json(a)["a"];
  } else {
    auto rep = vinberg::rep_from_json(load_json(o.rep));
    out["object"] = "rep";
    out["valid"] = true;
    out["dim"] = rep.dim;
    out["generators"] = rep.generator_count();
    out["irreducible"] = vinberg::is_irreducible(rep);
    out["cartan"] = vinberg::cartan_to_json(rep.cartan);
    out["coxeter"] = vinberg::coxeter_to_json(rep.coxeter);
  }
  return 0;
}

int verb_classify(const Options& o, Json& out) {
  auto m = load_coxeter(o);
  auto gc = vinberg::classify(m);
  out["kind"] = vinberg::diagram_kind_name(gc.kind);
  Json comps = Json::array();
  for (const auto& c : gc.component_classes) {
    Json e;
    e["indices"] = vinberg::detail::word_to_json(c.indices);
    e["kind"] = vinberg::diagram_kind_name(c.kind);
    comps.push_back(std::move(e));
  }
  out["components"] = std::move(comps);
  return 0;
}

int verb_compatible(const Options& o, Json& out) {
  auto report = vinberg::is_compatible(load_cartan(o), load_coxeter(o));
  out["compatible"] = report.compatible;
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    Json e;
    e["pair"] = Json::array({p.i + 1, p.j + 1});
    e["label"] = p.label;
    e["product"] = vinberg::to_string(p.product);
    e["ok"] = p.ok;
    if (!p.reason.empty()) e["reason"] = p.reason;
    pairs.push_back(std::move(e));
  }
  out["pairs"] = std::move(pairs);
  return report.compatible ? 0 : 1;
}

int verb_symmetrizable(const Options& o, Json& out) {
  auto r = vinberg::is_symmetrizable(load_cartan(o));
  out["symmetrizable"] = r.symmetrizable;
  if (r.symmetrizable) {
    out["weights"] = vinberg::detail::rat_vector_to_json(r.weights);
    return 0;
  }
  out["witness_cycle"] = vinberg::detail::cycle_to_json(r.witness_cycle);
  out["forward"] = vinberg::to_string(r.forward);
  out["reverse"] = vinberg::to_string(r.reverse);
  return 1;
}

int verb_type(const Options& o, Json& out) {
  auto a = load_cartan(o);
  out["type"] = vinberg::cartan_type_name(vinberg::cartan_type(a));
  out["rank"] = a.size();
  out["matrix_rank"] = vinberg::rank_of(a);
  return 0;
}

int verb_cycles(const Options& o, Json& out) {
  auto a = load_cartan(o);
  const int max_len = o.max_len > 0 ? o.max_len : a.size();
  auto r = vinberg::cyclic_products(a, max_len, o.cycle_budget);
  out["all_integer"] = r.all_integer;
  out["checked"] = r.checked_cycles.size();
  Json arr = Json::array();
  for (const auto& c : r.checked_cycles) {
    Json e;
    e["cycle"] = vinberg::detail::cycle_to_json(c);
    e["forward"] = vinberg::to_string(vinberg::detail::cycle_product(a, c, true));
    e["reverse"] = vinberg::to_string(vinberg::detail::cycle_product(a, c, false));
    arr.push_back(std::move(e));
  }
  out["cycles"] = std::move(arr);
  if (r.witness) {
    out["witness"] = Json{{"cycle", vinberg::detail::cycle_to_json(r.witness->first)},
                          {"product", vinberg::to_string(r.witness->second)}};
  }
  return r.all_integer ? 0 : 1;
}

int verb_build_rep(const Options& o, Json& out) {
  out = vinberg::rep_to_json(vinberg::rep_from_cartan(load_cartan(o), load_coxeter(o)));
  return 0;
}

int verb_reduce(const Options& o, Json& out) {
  out = vinberg::rep_to_json(vinberg::reduce_irreducible(load_rep(o, /*reduce=*/false)));
  return 0;
}

int verb_relations(const Options& o, Json& out) {
  auto rep = load_rep(o, /*reduce=*/false);
  auto r = vinberg::verify_relations(rep, o.order_cap);
  out["ok"] = true;
  out["order_cap"] = r.order_cap;
  out["orders"] = r.orders;
  return 0;
}

int verb_closure(const Options& o, Json& out) {
  auto rep = load_rep(o, /*reduce=*/true);
  auto v = vinberg::closure_verdict(rep, o.word_cap);
  out["verdict"] = vinberg::closure_kind_name(v.kind);
  out["dim"] = rep.dim;
  out["reason"] = v.reason;
  if (v.form) out["form"] = vinberg::detail::rat_matrix_to_json(*v.form);
  return v.kind == vinberg::ClosureKind::Indeterminate ? 3 : 0;
}

int verb_integralize(const Options& o, Json& out) {
  auto rep = load_rep(o, /*reduce=*/true);
  auto r = vinberg::conjugate_to_integers(rep, o.max_iters, o.order_cap);
  out["dim"] = rep.dim;
  out["iterations"] = r.iterations;
  out["change_of_basis"] = vinberg::detail::rat_matrix_to_json(r.change_of_basis);
  Json gens = Json::array();
  for (const auto& g : r.integer_generators)
    gens.push_back(vinberg::detail::int_matrix_to_json(g));
  out["integer_generators"] = std::move(gens);
  return 0;
}

int verb_forge(const Options& o, Json& out) {
  auto m = load_coxeter(o);
  std::string method = o.method;
  if (method.empty()) {
    if (!o.rep.empty()) method = "rank-bump";
    else if (m.is_right_angled()) method = "spanning-tree";
    else method = "general";
  }
  vinberg::ForgeOutput f = [&] {
    if (method == "spanning-tree") return vinberg::forge_racg_spanning_tree(m);
    if (method == "rank-bump") {
      if (o.rep.empty())
        vinberg::fail(vinberg::ErrorCode::InvalidArgument, "rank-bump needs --rep");
      return vinberg::forge_rank_bump(m, vinberg::rep_from_json(load_json(o.rep)));
    }
    if (method == "general") return vinberg::forge_general(m, parse_pairs(o.pairs));
    vinberg::fail(vinberg::ErrorCode::InvalidArgument,
                  "--method must be spanning-tree, rank-bump, or general");
  }();
  out["input"] = vinberg::coxeter_to_json(m);
  out["method"] = method;
  Json bundle = forge_to_json(f);
  for (auto& [key, value] : bundle.items()) out[key] = std::move(value);
  return 0;
}

int verb_pipeline(const Options& o, Json& out) {
  auto m = load_coxeter(o);
  if (o.target_dim <= 0)
    vinberg::fail(vinberg::ErrorCode::InvalidArgument, "pipeline needs --target-dim");
  auto stages = vinberg::pipeline_thin_embedding(m, o.target_dim, o.max_iters, o.order_cap);
  out["input"] = vinberg::coxeter_to_json(m);
  out["target_dim"] = o.target_dim;
  Json arr = Json::array();
  for (const auto& st : stages) {
    Json s;
    s["index"] = st.embedding.index;
    Json words = Json::array();
    for (const auto& w : st.embedding.generator_words)
      words.push_back(vinberg::detail::word_to_json(w));
    s["generator_words"] = std::move(words);
    Json bundle = forge_to_json(st.forge);
    for (auto& [key, value] : bundle.items()) s[key] = std::move(value);
    s["dim"] = st.integralization.integer_generators.front().rows();
    s["iterations"] = st.integralization.iterations;
    s["change_of_basis"] = vinberg::detail::rat_matrix_to_json(st.integralization.change_of_basis);
    Json gens = Json::array();
    for (const auto& g : st.integralization.integer_generators)
      gens.push_back(vinberg::detail::int_matrix_to_json(g));
    s["integer_generators"] = std::move(gens);
    arr.push_back(std::move(s));
  }
  out["stages"] = std::move(arr);
  out["final_dim"] = stages.back().integralization.integer_generators.front().rows();
  out["total_index"] = stages.back().embedding.index;
  return 0;
}

int verb_corpus(const Options& o, Json& out) {
  if (o.list) {
    Json names = Json::array();
    for (const auto& e : vinberg::corpus()) names.push_back(e.name);
    out["entries"] = std::move(names);
    return 0;
  }
  if (o.name.empty())
    vinberg::fail(vinberg::ErrorCode::InvalidArgument, "corpus needs --list or --name");
  const auto& e = vinberg::corpus_entry(o.name);
  out["name"] = e.name;
  out["coxeter"] = vinberg::coxeter_to_json(e.coxeter);
  if (e.cartan) out["cartan"] = vinberg::cartan_to_json(*e.cartan);
  Json exp;
  exp["kind"] = vinberg::diagram_kind_name(e.expected.kind);
  if (e.expected.cartan_rank) exp["cartan_rank"] = *e.expected.cartan_rank;
  if (e.expected.non_symmetrizable) exp["non_symmetrizable"] = *e.expected.non_symmetrizable;
  if (e.expected.integer_cyclic_products)
    exp["integer_cyclic_products"] = *e.expected.integer_cyclic_products;
  if (e.expected.closure) exp["closure"] = vinberg::closure_kind_name(*e.expected.closure);
  out["expected"] = std::move(exp);
  return 0;
}

void emit(const Json& doc, bool pretty) {
  std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"rational Cartan matrices, reflection representations, and integral forms"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--pretty", o.pretty, "indent the JSON output");
  };
  auto add_cartan = [&](CLI::App* sub) {
    sub->add_option("--cartan", o.cartan, "Cartan matrix file {\"rank\", \"a\"}");
  };
  auto add_coxeter = [&](CLI::App* sub) {
    sub->add_option("--coxeter", o.coxeter, "Coxeter matrix file {\"rank\", \"m\"}, 0 = infinity");
  };
  auto add_rep = [&](CLI::App* sub) {
    sub->add_option("--rep", o.rep, "representation file (generators, alphas, vs)");
  };

  auto* validate = app.add_subcommand("validate", "check a matrix or representation file");
  add_cartan(validate), add_coxeter(validate), add_rep(validate), add_common(validate);

  auto* classify = app.add_subcommand("classify", "spherical/affine/large, per component");
  add_coxeter(classify), add_common(classify);

  auto* compatible = app.add_subcommand("compatible", "entrywise Cartan-vs-Coxeter check");
  add_cartan(compatible), add_coxeter(compatible), add_common(compatible);

  auto* symmetrizable =
      app.add_subcommand("symmetrizable", "symmetrizability with weights or a witness cycle");
  add_cartan(symmetrizable), add_common(symmetrizable);

  auto* type = app.add_subcommand("type", "sign type of the symmetric part");
  add_cartan(type), add_common(type);

  auto* cycles = app.add_subcommand("cycles", "enumerate simple cycles and their products");
  add_cartan(cycles), add_common(cycles);
  cycles->add_option("--max-len", o.max_len, "cycle length bound (default: rank)");
  cycles->add_option("--cycle-budget", o.cycle_budget, "cycle enumeration budget (default 1000000)");

  auto* build_rep = app.add_subcommand("build-rep", "geometric representation from a Cartan matrix");
  add_cartan(build_rep), add_coxeter(build_rep), add_common(build_rep);

  auto* reduce = app.add_subcommand("reduce", "pass to the irreducible subquotient");
  add_rep(reduce), add_cartan(reduce), add_coxeter(reduce), add_common(reduce);

  auto* relations = app.add_subcommand("relations", "verify Coxeter relations by exact orders");
  add_rep(relations), add_cartan(relations), add_coxeter(relations), add_common(relations);
  relations->add_option("--order-cap", o.order_cap, "give up past this product order (default 64)");

  auto* closure = app.add_subcommand("closure", "Zariski closure: orthogonal or SL±");
  add_rep(closure), add_cartan(closure), add_coxeter(closure), add_common(closure);
  closure->add_option("--word-cap", o.word_cap, "word budget for the spanning certificate");

  auto* integralize = app.add_subcommand("integralize", "conjugate into GL(n, Z) or refute");
  add_rep(integralize), add_cartan(integralize), add_coxeter(integralize), add_common(integralize);
  integralize->add_option("--max-iters", o.max_iters, "lattice saturation rounds (default 64)");
  integralize->add_option("--order-cap", o.order_cap, "relation check order cap (default 64)");

  auto* forge = app.add_subcommand("forge", "non-symmetrizable compatible Cartan matrices");
  add_coxeter(forge), add_rep(forge), add_common(forge);
  forge->add_option("--method", o.method, "spanning-tree | rank-bump | general");
  forge->add_option("--pairs", o.pairs, "general method: pairs to scale, e.g. \"1,2;3,4\"");

  auto* pipeline = app.add_subcommand("pipeline", "doubling/bump tower to a target dimension");
  add_coxeter(pipeline), add_common(pipeline);
  pipeline->add_option("--target-dim", o.target_dim, "stop once the representation dimension reaches this");
  pipeline->add_option("--max-iters", o.max_iters, "lattice saturation rounds (default 64)");
  pipeline->add_option("--order-cap", o.order_cap, "relation check order cap (default 64)");

  auto* corpus = app.add_subcommand("corpus", "built-in worked examples");
  add_common(corpus);
  corpus->add_flag("--list", o.list, "print the entry names");
  corpus->add_option("--name", o.name, "print one entry in full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    Json out;
    int code = 0;
    if (app.got_subcommand(validate)) code = verb_validate(o, out);
    else if (app.got_subcommand(classify)) code = verb_classify(o, out);
    else if (app.got_subcommand(compatible)) code = verb_compatible(o, out);
    else if (app.got_subcommand(symmetrizable)) code = verb_symmetrizable(o, out);
    else if (app.got_subcommand(type)) code = verb_type(o, out);
    else if (app.got_subcommand(cycles)) code = verb_cycles(o, out);
    else if (app.got_subcommand(build_rep)) code = verb_build_rep(o, out);
    else if (app.got_subcommand(reduce)) code = verb_reduce(o, out);
    else if (app.got_subcommand(relations)) code = verb_relations(o, out);
    else if (app.got_subcommand(closure)) code = verb_closure(o, out);
    else if (app.got_subcommand(integralize)) code = verb_integralize(o, out);
    else if (app.got_subcommand(forge)) code = verb_forge(o, out);
    else if (app.got_subcommand(pipeline)) code = verb_pipeline(o, out);
    else if (app.got_subcommand(corpus)) code = verb_corpus(o, out);
    emit(out, o.pretty);
    return code;
  } catch (const vinberg::Error& e) {
    std::string message = e.what();
    const std::string prefix = std::string(vinberg::error_name(e.code())) + ": ";
    if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
    Json err;
    err["error"] = Json{{"code", vinberg::error_name(e.code())}, {"message", message}};
    emit(err, o.pretty);
    return error_exit_code(e.code());
  } catch (const std::exception& e) {
    Json err;
    err["error"] = Json{{"code", "InvalidArgument"}, {"message", e.what()}};
    emit(err, o.pretty);
    return 2;
  }
}

int main(int argc, char** argv) { return run(argc, argv); }
