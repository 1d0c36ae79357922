#include "mono/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <limits>

#include "mono/cover.hpp"
#include "mono/induction.hpp"
#include "mono/io.hpp"
#include "mono/van_kampen.hpp"

namespace mono {

namespace {

long long effective_budget(const CommandRequest& req) {
  if (req.max_nodes) return *req.max_nodes;
  if (const char* env = std::getenv("MONODROMY_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw precondition_error("MONODROMY_BUDGET must be a positive integer");
  }
  return 100000;
}

void emit(const CommandRequest& req, std::ostream& out, const Json& j, const std::string& text) {
  if (req.format == "json")
    out << j.dump(2) << '\n';
  else
    out << text;
}

int report_exit(const ValidationReport& rep) { return rep.pass() ? kOk : kCheckFailed; }

int cmd_validate(const CommandRequest& req, std::ostream& out) {
  bool have_fact = !req.fact_path.empty();
  bool have_theta = !req.theta_path.empty();
  if (!have_fact && !have_theta)
    throw precondition_error("validate needs a factorization file and/or --theta");

  ValidationReport rep;
  std::optional<BraidFactorization> f;
  std::optional<MonodromyRep> theta;
  if (have_fact) {
    f = factorization_from_json(load_json_file(req.fact_path));
    ValidationReport fv = validate(*f);
    for (auto& c : fv.checks) rep.checks.push_back(std::move(c));
    rep.census = fv.census;
    rep.has_census = fv.has_census;
  }
  if (have_theta) {
    theta = rep_from_json(load_json_file(req.theta_path));
    ValidationReport tv = validate_rep(*theta);
    for (auto& c : tv.checks) rep.add("rep_" + c.name, c.pass, c.detail);
  }
  if (have_fact && have_theta) {
    ValidationReport cv = check_compatibility(*theta, *f);
    for (auto& c : cv.checks) rep.add("compat_" + c.name, c.pass, c.detail);
    bool lift = liftability_of_factorization(*theta, *f);
    rep.add("liftability", lift, lift ? "" : "some factor is not liftable");
  }
  emit(req, out, report_to_json(rep), report_to_text(rep));
  return report_exit(rep);
}

int cmd_normalize(const CommandRequest& req, std::ostream& out) {
  if (!req.braid_text.empty()) {
    if (req.at < 2) throw precondition_error("normalize --braid needs --strands d >= 2");
    BraidWord w = parse_braid_text(req.braid_text, req.at);
    BraidWord c = canonical_form(w);
    emit(req, out, braid_to_json(c), braid_to_text(c) + "\n");
    return kOk;
  }
  if (req.fact_path.empty()) throw precondition_error("normalize needs a file or --braid");
  BraidFactorization f = factorization_from_json(load_json_file(req.fact_path));
  BraidFactorization n = normalize_factorization(f);
  Json j = factorization_to_json(n);
  emit(req, out, j, j.dump(2) + "\n");
  return kOk;
}

int cmd_move(const CommandRequest& req, std::ostream& out) {
  BraidFactorization f = factorization_from_json(load_json_file(req.fact_path));
  HurwitzDirection dir =
      req.direction == "backward" ? HurwitzDirection::Backward : HurwitzDirection::Forward;
  BraidFactorization r = hurwitz_move(f, req.at, dir);
  Json j = factorization_to_json(r);
  emit(req, out, j, j.dump(2) + "\n");
  return kOk;
}

int cmd_conjugate(const CommandRequest& req, std::ostream& out) {
  BraidFactorization f = factorization_from_json(load_json_file(req.fact_path));
  BraidWord q = parse_braid_text(req.braid_text, f.strand_count);
  BraidFactorization r = global_conjugate(f, q);
  Json j;
  j["factorization"] = factorization_to_json(r);
  if (!req.theta_path.empty()) {
    MonodromyRep theta = rep_from_json(load_json_file(req.theta_path));
    j["theta"] = rep_to_json(conjugate_rep(theta, q));
  }
  emit(req, out, j, j.dump(2) + "\n");
  return kOk;
}

int cmd_cancel(const CommandRequest& req, std::ostream& out) {
  BraidFactorization f = factorization_from_json(load_json_file(req.fact_path));
  BraidFactorization r = cancel_pair(f, req.at);
  Json j = factorization_to_json(r);
  emit(req, out, j, j.dump(2) + "\n");
  return kOk;
}

int cmd_create(const CommandRequest& req, std::ostream& out) {
  BraidFactorization f = factorization_from_json(load_json_file(req.fact_path));
  if (req.theta_path.empty()) throw precondition_error("create needs --theta");
  MonodromyRep theta = rep_from_json(load_json_file(req.theta_path));
  BraidWord q = parse_braid_text(req.braid_text, f.strand_count);
  BraidFactorization r = create_pair(f, req.at, q, theta);
  Json j = factorization_to_json(r);
  emit(req, out, j, j.dump(2) + "\n");
  return kOk;
}

int cmd_equiv(const CommandRequest& req, std::ostream& out) {
  BraidFactorization a = factorization_from_json(load_json_file(req.fact_path));
  BraidFactorization b = factorization_from_json(load_json_file(req.fact2_path));
  std::optional<MonodromyRep> theta;
  if (!req.theta_path.empty()) theta = rep_from_json(load_json_file(req.theta_path));
  SearchBudget budget;
  budget.max_states = effective_budget(req);
  budget.max_depth = req.max_depth;
  SearchOutcome res = equivalence_search(a, b, theta ? &*theta : nullptr, budget);
  Json j;
  j["result"] = res.equivalent ? "equivalent" : "unknown";
  j["states_explored"] = res.states_explored;
  if (res.equivalent) j["script"] = script_to_json(res.script);
  std::string text = res.equivalent ? "equivalent\n" : "unknown\n";
  if (res.equivalent && req.format != "json") text += script_to_json(res.script).dump(2) + "\n";
  emit(req, out, j, text);
  return res.equivalent ? kOk : kUnknown;
}

int cmd_pi1(const CommandRequest& req, std::ostream& out) {
  BraidFactorization f = factorization_from_json(load_json_file(req.fact_path));
  PresentationMode mode =
      req.mode == "affine" ? PresentationMode::Affine : PresentationMode::Projective;
  GroupPresentation p = presentation_from_factorization(f, mode);
  if (req.simplify) p = tietze_simplify(p);
  emit(req, out, presentation_to_json(p), presentation_to_text(p));
  return kOk;
}

int cmd_h1(const CommandRequest& req, std::ostream& out) {
  BraidFactorization f = factorization_from_json(load_json_file(req.fact_path));
  PresentationMode mode =
      req.mode == "affine" ? PresentationMode::Affine : PresentationMode::Projective;
  AbelianInvariants inv = abelianization(presentation_from_factorization(f, mode));
  emit(req, out, abelian_to_json(inv), inv.to_string() + "\n");
  return kOk;
}

int cmd_census(const CommandRequest& req, std::ostream& out) {
  BraidFactorization f = factorization_from_json(load_json_file(req.fact_path));
  ValidationReport rep = validate(f);
  Json j;
  for (const auto& [k, v] : rep.census) j[k] = v;
  std::string text;
  for (const auto& [k, v] : rep.census) text += k + " " + std::to_string(v) + "\n";
  emit(req, out, j, text);
  return kOk;
}

int cmd_cover(const CommandRequest& req, std::ostream& out) {
  MonodromyRep theta = rep_from_json(load_json_file(req.theta_path));
  CoverModel c = build_cover(theta);
  Json j;
  j["g"] = c.genus();
  j["boundary_count"] = c.boundary_count();
  j["rank"] = c.h1_rank();
  emit(req, out, j,
       "g " + std::to_string(c.genus()) + "\nboundary_count " +
           std::to_string(c.boundary_count()) + "\nrank " + std::to_string(c.h1_rank()) + "\n");
  return kOk;
}

int cmd_lift(const CommandRequest& req, std::ostream& out) {
  MonodromyRep theta = rep_from_json(load_json_file(req.theta_path));
  CoverModel c = build_cover(theta);
  BraidWord q = parse_braid_text(req.braid_text, theta.d);
  if (!is_liftable(theta, q)) throw precondition_error("braid is not liftable");
  SymplecticAction a = lift_action(c, q);
  Json rows = Json::array();
  for (int i = 0; i < a.m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < a.m.cols(); ++k) {
      if (a.m.at(i, k) > std::numeric_limits<long long>::max() ||
          a.m.at(i, k) < std::numeric_limits<long long>::min())
        throw error("matrix entry does not fit a 64-bit integer");
      row.push_back(static_cast<long long>(a.m.at(i, k)));
    }
    rows.push_back(std::move(row));
  }
  Json j;
  j["size"] = a.m.rows();
  j["matrix"] = std::move(rows);
  emit(req, out, j, a.m.to_string() + "\n");
  return kOk;
}

int cmd_pencil_check(const CommandRequest& req, std::ostream& out) {
  MonodromyRep theta = rep_from_json(load_json_file(req.theta_path));
  BraidFactorization f = factorization_from_json(load_json_file(req.fact_path));
  CoverModel c = build_cover(theta);
  ValidationReport rep = pencil_monodromy_check(c, f);
  emit(req, out, report_to_json(rep), report_to_text(rep));
  return report_exit(rep);
}

int cmd_induct_validate(const CommandRequest& req, std::ostream& out) {
  LinearSystemData data = system_from_json(load_json_file(req.system_path));
  ValidationReport rep = validate_chain(data, !req.no_chain_check);
  emit(req, out, report_to_json(rep), report_to_text(rep));
  if (!rep.pass()) return kCheckFailed;
  return has_unverified_levels(data) ? kUnknown : kOk;
}

}  // namespace

int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.command == "validate") return cmd_validate(req, out);
    if (req.command == "normalize") return cmd_normalize(req, out);
    if (req.command == "move") return cmd_move(req, out);
    if (req.command == "conjugate") return cmd_conjugate(req, out);
    if (req.command == "cancel") return cmd_cancel(req, out);
    if (req.command == "create") return cmd_create(req, out);
    if (req.command == "equiv") return cmd_equiv(req, out);
    if (req.command == "pi1") return cmd_pi1(req, out);
    if (req.command == "h1") return cmd_h1(req, out);
    if (req.command == "census") return cmd_census(req, out);
    if (req.command == "cover") return cmd_cover(req, out);
    if (req.command == "lift") return cmd_lift(req, out);
    if (req.command == "pencil-check") return cmd_pencil_check(req, out);
    if (req.command == "induct-validate") return cmd_induct_validate(req, out);
    err << "unknown command: " << req.command << '\n';
    return kInputError;
  } catch (const parse_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const mismatch_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"braid monodromy factorization toolkit"};
  app.require_subcommand(1);
  CommandRequest req;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "validate a factorization and/or representation");
  validate->add_option("file", req.fact_path, "factorization JSON file");
  validate->add_option("--fact", req.fact_path);
  validate->add_option("--theta", req.theta_path, "representation JSON file");
  add_common(validate);

  auto* normalize = app.add_subcommand("normalize", "canonical form of a braid or factorization");
  normalize->add_option("file", req.fact_path);
  normalize->add_option("--fact", req.fact_path);
  normalize->add_option("--braid", req.braid_text);
  normalize->add_option("--strands", req.at, "strand count for --braid");
  add_common(normalize);

  auto* mv = app.add_subcommand("move", "apply a Hurwitz move");
  mv->add_option("file", req.fact_path);
  mv->add_option("--fact", req.fact_path);
  mv->add_option("--at", req.at)->required();
  mv->add_option("--dir", req.direction)->check(CLI::IsMember({"forward", "backward"}));
  add_common(mv);

  auto* conj = app.add_subcommand("conjugate", "global conjugation of all factors");
  conj->add_option("file", req.fact_path);
  conj->add_option("--fact", req.fact_path);
  conj->add_option("--braid", req.braid_text)->required();
  conj->add_option("--theta", req.theta_path, "also emit theta o Q_*");
  add_common(conj);

  auto* cancel = app.add_subcommand("cancel", "cancel a node pair");
  cancel->add_option("file", req.fact_path);
  cancel->add_option("--fact", req.fact_path);
  cancel->add_option("--at", req.at)->required();
  add_common(cancel);

  auto* create = app.add_subcommand("create", "create an admissible node pair");
  create->add_option("file", req.fact_path);
  create->add_option("--fact", req.fact_path);
  create->add_option("--at", req.at)->required();
  create->add_option("--braid", req.braid_text)->required();
  create->add_option("--theta", req.theta_path)->required();
  add_common(create);

  auto* equiv = app.add_subcommand("equiv", "bounded m-equivalence search");
  equiv->add_option("a", req.fact_path)->required();
  equiv->add_option("b", req.fact2_path)->required();
  equiv->add_option("--theta", req.theta_path, "enables pair creation moves");
  long long max_nodes = -1;
  equiv->add_option("--max-nodes", max_nodes, "search state budget");
  equiv->add_option("--max-depth", req.max_depth);
  add_common(equiv);

  auto* pi1 = app.add_subcommand("pi1", "van Kampen presentation");
  pi1->add_option("file", req.fact_path);
  pi1->add_option("--fact", req.fact_path);
  pi1->add_option("--mode", req.mode)->check(CLI::IsMember({"affine", "projective"}));
  pi1->add_flag("--simplify", req.simplify, "apply Tietze simplification");
  add_common(pi1);

  auto* h1 = app.add_subcommand("h1", "abelianization of the van Kampen presentation");
  h1->add_option("file", req.fact_path);
  h1->add_option("--fact", req.fact_path);
  h1->add_option("--mode", req.mode)->check(CLI::IsMember({"affine", "projective"}));
  add_common(h1);

  auto* census = app.add_subcommand("census", "factor-type census");
  census->add_option("file", req.fact_path);
  census->add_option("--fact", req.fact_path);
  add_common(census);

  auto* cover = app.add_subcommand("cover", "branched-cover surface invariants");
  cover->add_option("--theta", req.theta_path)->required();
  add_common(cover);

  auto* lift = app.add_subcommand("lift", "homological action of a liftable braid");
  lift->add_option("--theta", req.theta_path)->required();
  lift->add_option("--braid", req.braid_text)->required();
  add_common(lift);

  auto* pencil = app.add_subcommand("pencil-check", "homological pencil-monodromy check");
  pencil->add_option("--theta", req.theta_path)->required();
  pencil->add_option("--fact", req.fact_path)->required();
  add_common(pencil);

  auto* induct = app.add_subcommand("induct-validate", "validate dimensional-induction data");
  induct->add_option("file", req.system_path)->required();
  induct->add_flag("--no-chain-check", req.no_chain_check);
  add_common(induct);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kInputError;
  }
  if (max_nodes >= 0) req.max_nodes = max_nodes;
  req.command = app.get_subcommands().front()->get_name();
  return run_command(req, out, err);
}

}  // namespace mono
