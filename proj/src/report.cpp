#include "pst/report.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "pst/commutant.hpp"
#include "pst/sample.hpp"
#include "pst/verdict.hpp"

namespace pst {

std::string to_string(Command c) {
  switch (c) {
    case Command::Commutant: return "commutant";
    case Command::Dirac: return "dirac";
    case Command::Beta: return "beta";
    case Command::Verify: return "verify";
    case Command::Report: return "report";
  }
  return "";
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

RunSpec parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Exact workbench for Pati-Salam finite spectral triples", "pst"};
  app.require_subcommand(1, 1);

  std::string case_name, grading_name, beta_name, format_name = "json", out_path, scope = "all";
  bool self_adjoint = false, basis = false;
  const std::vector<std::string> cases{"unreduced", "reduced", "sm", "standard-model"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path, "Write the report to this path");
  };
  auto* commutant = app.add_subcommand("commutant", "Commutant of a represented algebra");
  commutant->add_option("--case", case_name, "Algebra case")->required()->check(CLI::IsMember(cases));
  commutant->add_flag("--basis", basis, "Emit the canonical basis");
  common(commutant);

  auto* dirac = app.add_subcommand("dirac", "Solution space of a constrained Dirac family");
  dirac->add_option("--case", case_name, "Algebra case")->required()->check(CLI::IsMember(cases));
  dirac->add_option("--grading", grading_name, "Grading to anticommute with")
      ->check(CLI::IsMember({"gamma", "gamma-star"}));
  dirac->add_option("--beta", beta_name, "Beta name or sign pattern");
  dirac->add_flag("--self-adjoint", self_adjoint, "Also impose self-adjointness");
  dirac->add_flag("--basis", basis, "Emit the canonical basis");
  common(dirac);

  auto* beta = app.add_subcommand("beta", "Enumerate and classify beta candidates");
  beta->add_option("--case", case_name, "Algebra case")->required()->check(CLI::IsMember(cases));
  common(beta);

  auto* verify = app.add_subcommand("verify", "Run classification checks");
  verify->add_option("scope", scope, "Check name or 'all'");
  common(verify);

  auto* report = app.add_subcommand("report", "Verdict table");
  report->add_option("--case", case_name, "Restrict to one algebra case")->check(CLI::IsMember(cases));
  common(report);

  RunSpec spec;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    spec.help = app.help();
    return spec;
  } catch (const CLI::CallForAllHelp&) {
    spec.help = app.help("", CLI::AppFormatMode::All);
    return spec;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (commutant->parsed()) spec.command = Command::Commutant;
  else if (dirac->parsed()) spec.command = Command::Dirac;
  else if (beta->parsed()) spec.command = Command::Beta;
  else if (verify->parsed()) spec.command = Command::Verify;
  else spec.command = Command::Report;

  if (!case_name.empty()) spec.case_tag = parse_case(case_name);
  if (grading_name == "gamma") spec.grading = GradingTag::Gamma;
  else if (grading_name == "gamma-star") spec.grading = GradingTag::GammaStar;
  if (!beta_name.empty()) {
    beta_by_name(*spec.case_tag, beta_name);  // validates the name for the case
    spec.beta = beta_name;
  }
  spec.self_adjoint = self_adjoint;
  spec.basis = basis;
  spec.format = format_name == "text" ? Format::Text : Format::Json;
  if (!out_path.empty()) spec.out = out_path;
  if (spec.command == Command::Verify) {
    const auto scopes = verify_scopes();
    if (scope != "all" && std::find(scopes.begin(), scopes.end(), scope) == scopes.end()) {
      throw UsageError("unknown verify scope '" + scope + "'");
    }
    spec.scope = scope;
  }
  return spec;
}

RunSpec parse_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return parse_args(args);
}

// ---------------------------------------------------------------------------
// Serialization helpers
// ---------------------------------------------------------------------------

namespace {

Json basis_json(const SubspaceBasis& s) {
  Json out = Json::array();
  for (const auto& v : s.basis()) {
    const Op x = unrealify(v);
    Json entries = Json::array();
    for (std::size_t r = 0; r < kHilbertDim; ++r) {
      for (std::size_t c = 0; c < kHilbertDim; ++c) {
        if (!x(r, c).is_zero()) entries.push_back({{"row", r + 1}, {"col", c + 1}, {"value", to_string(x(r, c))}});
      }
    }
    out.push_back(std::move(entries));
  }
  return out;
}

Json candidate_json(const BetaCandidate& b) {
  Json j;
  j["name"] = b.name;
  j["kind"] = b.kind == BetaCandidate::Kind::Eta ? "eta" : "one-term";
  j["signs"] = sign_string(b.signs);
  j["trivial"] = b.flags.is_trivial;
  j["involution"] = b.flags.is_involution;
  j["self_adjoint"] = b.flags.is_self_adjoint;
  j["commutes_with_J"] = b.flags.commutes_with_j;
  j["commutes_with_gamma"] = b.flags.commutes_with_gamma;
  j["commutes_with_gamma_star"] = b.flags.commutes_with_gamma_star;
  j["zero_cycle"] = b.flags.is_zero_cycle;
  j["one_term_expressible"] = b.flags.is_one_term_expressible;
  j["witness"] = b.witness ? Json(sign_string(*b.witness)) : Json(nullptr);
  return j;
}

Json physics_json(const PhysicalReport& p) {
  return {{"lepton_group", p.lepton_group}, {"quark_group", p.quark_group}, {"lepton_each", p.lepton_each},
          {"quark_each", p.quark_each},     {"physical", p.physical},       {"reasons", p.reasons}};
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["case"] = to_string(v.case_tag);
  j["grading"] = to_string(v.grading);
  j["beta"] = v.beta_name;
  j["eta"] = sign_string(v.eta);
  j["real_dim"] = v.family.real_dim();
  j["self_adjoint_real_dim"] = v.self_adjoint_dim;
  j["zero_cycle"] = v.beta_flags.is_zero_cycle;
  j["one_term_expressible"] = v.beta_flags.is_one_term_expressible;
  j["trivial"] = v.beta_flags.is_trivial;
  const Json phys = physics_json(v.physics);
  for (const auto& [k, val] : phys.items()) j[k] = val;
  return j;
}

// ---------------------------------------------------------------------------
// Verification checks
// ---------------------------------------------------------------------------

// Lazily shared results so that "all" computes each expensive object once.
struct Context {
  std::map<CaseTag, std::vector<BetaCandidate>> generic, one_term;
  std::map<CaseTag, std::vector<Verdict>> verdicts;

  const std::vector<BetaCandidate>& gen(CaseTag c) {
    if (!generic.count(c)) generic[c] = enumerate_generic(c);
    return generic[c];
  }
  const std::vector<BetaCandidate>& one(CaseTag c) {
    if (!one_term.count(c)) one_term[c] = enumerate_one_term(c);
    return one_term[c];
  }
  const std::vector<Verdict>& table(CaseTag c) {
    if (!verdicts.count(c)) {
      std::vector<Verdict> rows;
      const auto& betas = gen(c);
      for (GradingTag g : {GradingTag::Gamma, GradingTag::GammaStar}) {
        for (const auto& b : betas) rows.push_back(make_verdict(c, g, b));
      }
      verdicts[c] = std::move(rows);
    }
    return verdicts[c];
  }
};

struct CheckResult {
  bool pass = false;
  Json dims = Json::object();
};

struct CheckDef {
  std::string name;
  std::string anchor;
  std::function<CheckResult(Context&)> run;
};

bool contains_op(const std::vector<BetaCandidate>& list, const Op& op) {
  return std::any_of(list.begin(), list.end(), [&](const BetaCandidate& b) { return b.op == op; });
}

std::size_t count_nontrivial(const std::vector<BetaCandidate>& list) {
  return static_cast<std::size_t>(
      std::count_if(list.begin(), list.end(), [](const BetaCandidate& b) { return !b.flags.is_trivial; }));
}

CheckResult commutant_check(CaseTag c, const ParametricForm& form, const ParametricForm* other) {
  const auto r = commutant(algebra_case(c).real_generators);
  CheckResult out;
  out.dims = {{"complex_dim", r.complex_dim},
              {"real_dim", r.space.dim()},
              {"form_parameters", form.free_complex_parameters()}};
  out.pass = r.complex_dim == form.free_complex_parameters() && matches_parametric_form(r.space, form);
  if (other) out.pass = out.pass && !matches_parametric_form(r.space, *other);
  return out;
}

CheckResult dirac_check(const std::vector<Constraint>& cs, const ParametricForm& form) {
  const auto fam = solve(cs);
  CheckResult out;
  out.dims = {{"real_dim", fam.real_dim()}, {"form_parameters", form.free_complex_parameters()}};
  out.pass = fam.real_dim() == 2 * form.free_complex_parameters() && matches_parametric_form(fam.space, form);
  return out;
}

std::vector<CheckDef> check_defs() {
  const CaseTag U = CaseTag::Unreduced, R = CaseTag::Reduced, SM = CaseTag::StandardModel;
  std::vector<CheckDef> defs;

  defs.push_back({"commutant-unreduced", "commutant of the unreduced algebra: A1 in C1 on e11, identity on e22",
                  [](Context&) {
                    const auto other = commutant_form_reduced();
                    return commutant_check(CaseTag::Unreduced, commutant_form_unreduced(), &other);
                  }});
  defs.push_back({"commutant-reduced", "commutant of the reduced algebra: A1 in C1, A2 in C2",
                  [](Context&) { return commutant_check(CaseTag::Reduced, commutant_form_reduced(), nullptr); }});
  defs.push_back({"commutant-complexification", "commutant of the algebra equals that of its complexification",
                  [](Context&) {
                    CheckResult out{true, Json::object()};
                    for (CaseTag c : {CaseTag::Unreduced, CaseTag::Reduced, CaseTag::StandardModel}) {
                      const auto ac = algebra_case(c);
                      const auto a = commutant(ac.real_generators), b = commutant(ac.complexified_generators);
                      out.dims[to_string(c)] = a.complex_dim;
                      out.pass = out.pass && subspace_equal(a.space, b.space);
                    }
                    return out;
                  }});
  defs.push_back({"order-zero", "algebra commutes with the opposite algebra", [](Context&) {
                    CheckResult out{true, Json::object()};
                    for (CaseTag c : {CaseTag::Unreduced, CaseTag::Reduced, CaseTag::StandardModel}) {
                      const auto gens = algebra_case(c).real_generators;
                      std::size_t pairs = 0;
                      for (const auto& a : gens) {
                        for (const auto& b : gens) {
                          out.pass = out.pass && commutator(a, opposite(b)).is_zero();
                          ++pairs;
                        }
                      }
                      out.dims[to_string(c)] = pairs;
                    }
                    return out;
                  }});
  defs.push_back({"gamma-star-representation",
                  "gamma-star commutes with the reduced algebra but not with the unreduced one", [](Context&) {
                    auto all_commute = [](CaseTag c, const Op& g) {
                      const auto gens = algebra_case(c).real_generators;
                      return std::all_of(gens.begin(), gens.end(),
                                         [&](const Op& x) { return commutator(g, x).is_zero(); });
                    };
                    CheckResult out;
                    out.pass = all_commute(CaseTag::Reduced, gamma_star()) &&
                               !all_commute(CaseTag::Unreduced, gamma_star()) &&
                               all_commute(CaseTag::StandardModel, gamma_star());
                    for (CaseTag c : {CaseTag::Unreduced, CaseTag::Reduced, CaseTag::StandardModel}) {
                      out.pass = out.pass && all_commute(c, gamma());
                    }
                    return out;
                  }});
  defs.push_back({"structure-signs", "J squares to one and anticommutes with both gradings; betas commute with J and gamma",
                  [](Context& ctx) {
                    CheckResult out{true, Json::object()};
                    for (std::size_t k = 0; k < kHilbertDim; ++k) {
                      for (const GaussianRational& s : {GaussianRational(1), GaussianRational::i()}) {
                        std::vector<GaussianRational> e(kHilbertDim);
                        e[k] = s;
                        out.pass = out.pass && apply_J(apply_J(e)) == e;
                      }
                    }
                    const Op id = Op::identity();
                    for (const Op& g : {gamma(), gamma_star()}) {
                      out.pass = out.pass && j_conjugate(g) == -g && g * g == id && dagger(g) == g;
                    }
                    std::size_t n = 0;
                    for (CaseTag c : {CaseTag::Unreduced, CaseTag::Reduced, CaseTag::StandardModel}) {
                      for (const auto& b : ctx.gen(c)) {
                        out.pass = out.pass && j_conjugate(b.op) == b.op && commutator(b.op, gamma()).is_zero();
                        ++n;
                      }
                    }
                    out.dims["candidates"] = n;
                    return out;
                  }});
  defs.push_back({"coefficient-selfadjoint", "self-adjointness in tensor coefficients", [](Context&) {
                    std::mt19937_64 rng(20240611);
                    CheckResult out{true, Json::object()};
                    std::size_t agree = 0, positive = 0;
                    for (int k = 0; k < 1000; ++k) {
                      const Op x = random_mixed_op(rng, k % 5);
                      const bool expected = dagger(x) == x;
                      agree += selfadjoint_coefficient_check(x) == expected;
                      positive += expected;
                    }
                    out.dims = {{"samples", 1000}, {"agree", agree}, {"self_adjoint", positive}};
                    out.pass = agree == 1000 && positive > 0 && positive < 1000;
                    return out;
                  }});
  defs.push_back({"coefficient-j-commute", "J-commutation in tensor coefficients", [](Context&) {
                    std::mt19937_64 rng(20240612);
                    CheckResult out{true, Json::object()};
                    std::size_t agree = 0, positive = 0;
                    for (int k = 0; k < 1000; ++k) {
                      const Op x = random_mixed_op(rng, k % 5);
                      const bool expected = j_conjugate(x) == x;
                      agree += j_commute_coefficient_check(x) == expected;
                      positive += expected;
                    }
                    out.dims = {{"samples", 1000}, {"agree", agree}, {"j_fixed", positive}};
                    out.pass = agree == 1000 && positive > 0 && positive < 1000;
                    return out;
                  }});
  defs.push_back({"lemma", "a sector-diagonal A with AJ = +-JA commutes with D iff it commutes with D0", [](Context&) {
                    std::mt19937_64 rng(20240613);
                    CheckResult out{true, Json::object()};
                    std::size_t holds = 0, samples = 0;
                    for (int k = 0; k < 200; ++k) {
                      const int alpha = k % 2 == 0 ? 1 : -1;
                      const Op a = random_sector_diagonal(rng, alpha);
                      Op d0 = random_d0(rng, 6);
                      const bool anti = (k / 2) % 2 == 1;
                      if ((k / 4) % 2 == 1) {
                        // Keep only entries compatible with (anti)commutation.
                        for (std::size_t r = 0; r < kHilbertDim; ++r)
                          for (std::size_t c = 0; c < kHilbertDim; ++c) {
                            const bool ok = anti ? a(r, r) == -a(c, c) : a(r, r) == a(c, c);
                            if (!ok) d0(r, c) = 0;
                          }
                      }
                      const Op d = d0 + j_conjugate(d0);
                      const Op split = split_D0(d).d0;
                      const bool lhs = (anti ? anticommutator(a, d) : commutator(a, d)).is_zero();
                      const bool rhs = (anti ? anticommutator(a, split) : commutator(a, split)).is_zero();
                      out.pass = out.pass && lhs == rhs && split == d0;
                      holds += lhs;
                      ++samples;
                    }
                    out.dims = {{"samples", samples}, {"vanishing", holds}};
                    out.pass = out.pass && holds > 0 && holds < samples;
                    return out;
                  }});
  defs.push_back({"dirac-anti-gamma", "Dirac operators commuting with J and anticommuting with gamma", [](Context&) {
                    return dirac_check({CommuteWithJ{}, AnticommuteWith{gamma(), "gamma"}}, dirac_form_anti_gamma());
                  }});
  defs.push_back({"dirac-anti-gamma-star", "Dirac operators commuting with J and anticommuting with gamma-star",
                  [](Context&) {
                    return dirac_check({CommuteWithJ{}, AnticommuteWith{gamma_star(), "gamma-star"}},
                                       dirac_form_anti_gamma_star());
                  }});
  defs.push_back({"dirac-beta-nontrivial", "Dirac operators commuting with the nontrivial unreduced beta",
                  [U](Context&) {
                    return dirac_check({CommuteWithJ{}, CommuteWith{beta_by_name(U, "nontrivial"), "beta"}},
                                       dirac_form_beta_nontrivial());
                  }});
  defs.push_back({"dirac-beta-case2", "Dirac operators commuting with the reduced beta pi(-1,1,1,-1)", [R](Context&) {
                    return dirac_check({CommuteWithJ{}, CommuteWith{beta_by_name(R, "case2"), "beta"}},
                                       dirac_form_beta_case2());
                  }});
  defs.push_back({"dirac-beta-final", "Dirac operators commuting with the reduced beta pi(1,1,1,-1)", [R](Context&) {
                    return dirac_check({CommuteWithJ{}, CommuteWith{beta_by_name(R, "final"), "beta"}},
                                       dirac_form_beta_final());
                  }});
  defs.push_back({"dirac-gamma-final", "physically allowed family: gamma-star with the final beta", [R](Context&) {
                    const std::vector<Constraint> cs{CommuteWithJ{}, AnticommuteWith{gamma_star(), "gamma-star"},
                                                     CommuteWith{beta_by_name(R, "final"), "beta"}};
                    auto out = dirac_check(cs, dirac_form_gamma_final());
                    out.pass = out.pass && is_physical(solve(cs));
                    return out;
                  }});
  defs.push_back({"dirac-gamma-final-same-form", "with the final beta, gamma and gamma-star give the same family",
                  [R](Context&) {
                    const Op b = beta_by_name(R, "final");
                    const auto a = solve({CommuteWithJ{}, AnticommuteWith{gamma(), "gamma"}, CommuteWith{b, "beta"}});
                    const auto s =
                        solve({CommuteWithJ{}, AnticommuteWith{gamma_star(), "gamma-star"}, CommuteWith{b, "beta"}});
                    return CheckResult{subspace_equal(a.space, s.space), {{"real_dim", a.real_dim()}}};
                  }});
  defs.push_back({"beta-unreduced-count", "unreduced: two betas up to sign, one nontrivial", [U](Context& ctx) {
                    const auto& one = ctx.one(U);
                    const auto& gen = ctx.gen(U);
                    CheckResult out;
                    out.dims = {{"one_term", one.size()}, {"generic", gen.size()}};
                    out.pass = one.size() == 2 && count_nontrivial(one) == 1 && gen.size() == 2;
                    for (const auto& b : one) out.pass = out.pass && contains_op(gen, b.op);
                    return out;
                  }});
  defs.push_back({"beta-reduced-count", "reduced: eight betas up to sign, four of one-term type", [R](Context& ctx) {
                    const auto& one = ctx.one(R);
                    const auto& gen = ctx.gen(R);
                    const auto refs = reduced_reference_betas();
                    std::set<std::string> expressible;
                    bool all_zero_cycle = true, named = true;
                    for (std::size_t k = 0; k < gen.size(); ++k) {
                      if (gen[k].flags.is_one_term_expressible) expressible.insert(gen[k].name);
                      all_zero_cycle = all_zero_cycle && gen[k].flags.is_zero_cycle;
                    }
                    for (const auto& r : refs) named = named && contains_op(gen, r);
                    CheckResult out;
                    out.dims = {{"one_term", one.size()},
                                {"generic", gen.size()},
                                {"one_term_expressible", expressible.size()}};
                    out.pass = one.size() == 4 && count_nontrivial(one) == 3 && gen.size() == 8 && named &&
                               all_zero_cycle && expressible == std::set<std::string>{"b1", "b3", "b6", "b7"};
                    for (const auto& b : one) out.pass = out.pass && contains_op(gen, b.op);
                    return out;
                  }});
  defs.push_back({"beta-sm-count", "standard model: 32 sign candidates up to global sign", [SM](Context& ctx) {
                    const auto& gen = ctx.gen(SM);
                    std::size_t zc = 0, ot = 0;
                    for (const auto& b : gen) {
                      zc += b.flags.is_zero_cycle;
                      ot += b.flags.is_one_term_expressible;
                    }
                    CheckResult out;
                    out.dims = {{"generic", gen.size()}, {"zero_cycle", zc}, {"one_term_expressible", ot}};
                    out.pass = gen.size() == 32;
                    return out;
                  }});
  defs.push_back({"verdict-unreduced", "unreduced with gamma: no nontrivial beta leaves Yukawa terms",
                  [U](Context& ctx) {
                    CheckResult out{true, Json::object()};
                    std::size_t rows = 0;
                    for (const auto& v : ctx.table(U)) {
                      if (v.grading != GradingTag::Gamma || v.beta_flags.is_trivial) continue;
                      out.pass = out.pass && !v.physical && !v.physics.lepton_group && !v.physics.quark_group;
                      ++rows;
                    }
                    out.dims = {{"nontrivial_rows", rows}};
                    out.pass = out.pass && rows > 0;
                    return out;
                  }});
  defs.push_back({"verdict-reduced", "reduced: the final beta is the only physical nontrivial choice for both gradings",
                  [R](Context& ctx) {
                    CheckResult out{true, Json::object()};
                    const Op fin = beta_by_name(R, "final");
                    std::map<GradingTag, const Verdict*> unique;
                    std::map<GradingTag, std::size_t> count;
                    for (const auto& v : ctx.table(R)) {
                      if (v.beta_flags.is_trivial || !v.physical) continue;
                      ++count[v.grading];
                      unique[v.grading] = &v;
                    }
                    out.pass = count[GradingTag::Gamma] == 1 && count[GradingTag::GammaStar] == 1;
                    if (out.pass) {
                      const auto* a = unique[GradingTag::Gamma];
                      const auto* b = unique[GradingTag::GammaStar];
                      out.pass = a->beta_name == "b7" && b->beta_name == "b7" && eta_op(R, a->eta) == fin &&
                                 subspace_equal(a->family.space, b->family.space) &&
                                 matches_parametric_form(b->family.space, dirac_form_gamma_final());
                      out.dims = {{"physical_beta", b->beta_name}, {"real_dim", b->family.real_dim()}};
                    }
                    return out;
                  }});
  defs.push_back({"verdict-sm", "standard model: exactly one nontrivial physical zero-cycle beta, of one-term type",
                  [SM](Context& ctx) {
                    CheckResult out{true, Json::object()};
                    std::vector<const Verdict*> hits;
                    for (const auto& v : ctx.table(SM)) {
                      if (v.grading == GradingTag::Gamma && !v.beta_flags.is_trivial && v.beta_flags.is_zero_cycle &&
                          v.physical) {
                        hits.push_back(&v);
                      }
                    }
                    out.pass = hits.size() == 1 && hits[0]->beta_flags.is_one_term_expressible &&
                               eta_op(SM, hits[0]->eta) == beta_by_name(SM, "final");
                    out.dims = {{"physical_nontrivial", hits.size()}};
                    if (!hits.empty()) out.dims["eta"] = sign_string(hits[0]->eta);
                    return out;
                  }});
  return defs;
}

}  // namespace

std::vector<std::string> verify_scopes() {
  std::vector<std::string> out;
  for (const auto& d : check_defs()) out.push_back(d.name);
  return out;
}

Report run_verify(const std::string& scope) {
  Report r;
  r.inputs = {{"command", "verify"}, {"scope", scope}};
  Context ctx;
  bool found = false;
  for (const auto& d : check_defs()) {
    if (scope != "all" && scope != d.name) continue;
    found = true;
    CheckResult res;
    try {
      res = d.run(ctx);
    } catch (const std::exception& e) {
      res.pass = false;
      res.dims = {{"error", e.what()}};
    }
    r.dimensions[d.name] = res.dims;
    r.checks.push_back({d.name, d.anchor, res.pass});
  }
  if (!found) throw UsageError("unknown verify scope '" + scope + "'");
  return r;
}

namespace {

std::optional<ParametricForm> preset_form(CaseTag c, std::optional<GradingTag> g, const std::optional<Op>& beta) {
  auto same = [&](CaseTag k, const char* name) {
    try {
      const Op b = beta_by_name(k, name);
      return *beta == b || *beta == -b;
    } catch (const UsageError&) {
      return false;
    }
  };
  (void)c;
  if (!beta) {
    if (!g) return std::nullopt;
    return *g == GradingTag::Gamma ? dirac_form_anti_gamma() : dirac_form_anti_gamma_star();
  }
  if (same(CaseTag::Reduced, "final")) {
    if (g) return dirac_form_gamma_final();
    return dirac_form_beta_final();
  }
  if (g) return std::nullopt;
  if (same(CaseTag::Unreduced, "nontrivial")) return dirac_form_beta_nontrivial();
  if (same(CaseTag::Reduced, "case2")) return dirac_form_beta_case2();
  return std::nullopt;
}

Report run_commutant(const RunSpec& spec) {
  Report r;
  const CaseTag c = *spec.case_tag;
  const auto res = commutant(algebra_case(c).real_generators);
  r.dimensions = {{"real_dim", res.space.dim()}, {"complex_dim", res.complex_dim}};
  Json sectors = Json::object();
  for (const auto& s : res.structure) {
    sectors["e" + std::to_string(s.i) + std::to_string(s.j)] = s.real_dim;
  }
  r.dimensions["sector_real_dims"] = sectors;
  if (c == CaseTag::Unreduced) {
    r.checks.push_back({"form-match", "commutant of the unreduced algebra: A1 in C1 on e11, identity on e22",
                        matches_parametric_form(res.space, commutant_form_unreduced())});
  } else if (c == CaseTag::Reduced) {
    r.checks.push_back({"form-match", "commutant of the reduced algebra: A1 in C1, A2 in C2",
                        matches_parametric_form(res.space, commutant_form_reduced())});
  }
  r.checks.push_back({"contains-identity", "commutant is unital", res.space.contains_vector(realify(Op::identity()))});
  if (spec.basis) r.basis = basis_json(res.space);
  return r;
}

Report run_dirac(const RunSpec& spec) {
  Report r;
  const CaseTag c = *spec.case_tag;
  std::optional<Op> beta;
  if (spec.beta) beta = beta_by_name(c, *spec.beta);
  const auto fam =
      solve(dirac_constraints(spec.grading, beta, spec.beta.value_or(""), spec.self_adjoint), LoweringOrder::Canonical, c);
  r.dimensions = {{"real_dim", fam.real_dim()}};
  if (!spec.self_adjoint) {
    if (const auto form = preset_form(c, spec.grading, beta)) {
      r.checks.push_back({"form-match", "displayed family " + form->name, matches_parametric_form(fam.space, *form)});
      r.checks.push_back({"parameter-count", "free parameters of " + form->name,
                          fam.real_dim() == 2 * form->free_complex_parameters()});
    }
  }
  r.verdicts = Json::array({physics_json(physical_report(fam))});
  if (spec.basis) r.basis = basis_json(fam.space);
  return r;
}

Report run_beta(const RunSpec& spec) {
  Report r;
  const CaseTag c = *spec.case_tag;
  const auto gen = enumerate_generic(c);
  const auto one = enumerate_one_term(c);
  std::size_t expressible = 0;
  for (const auto& b : gen) expressible += b.flags.is_one_term_expressible;
  r.dimensions = {{"generic", gen.size()}, {"one_term", one.size()}, {"one_term_expressible", expressible}};
  Json list = Json::array();
  for (const auto& b : gen) list.push_back(candidate_json(b));
  for (const auto& b : one) list.push_back(candidate_json(b));
  bool axioms = true;
  for (const auto* l : {&gen, &one}) {
    for (const auto& b : *l) {
      axioms = axioms && b.flags.is_involution && b.flags.is_self_adjoint && b.flags.commutes_with_j &&
               b.flags.commutes_with_gamma;
    }
  }
  r.checks.push_back({"beta-axioms", "self-adjoint involutions commuting with J and gamma", axioms});
  bool subset = true;
  if (c != CaseTag::StandardModel) {
    for (const auto& b : one) subset = subset && contains_op(gen, b.op);
    r.checks.push_back({"one-term-in-generic", "one-term betas appear in the generic family", subset});
  }
  r.verdicts = std::move(list);
  return r;
}

Report run_report(const RunSpec& spec) {
  Report r;
  std::vector<Verdict> rows = spec.case_tag ? verdict_table(*spec.case_tag) : verdict_table();
  Json list = Json::array();
  std::size_t physical = 0;
  for (const auto& v : rows) {
    list.push_back(verdict_json(v));
    physical += v.physical && !v.beta_flags.is_trivial;
  }
  r.dimensions = {{"rows", rows.size()}, {"physical_nontrivial", physical}};
  r.verdicts = std::move(list);
  return r;
}

void render_text(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out += pad + k + ":\n";
        render_text(v, indent + 2, out);
      } else {
        out += pad + k + ": " + (v.is_structured() ? v.dump() : scalar(v)) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !v.empty()) {
        out += pad + "-\n";
        render_text(v, indent + 2, out);
      } else {
        out += pad + "- " + (v.is_structured() ? v.dump() : scalar(v)) + "\n";
      }
    }
  } else {
    out += pad + scalar(j) + "\n";
  }
}

}  // namespace

Report run(const RunSpec& spec) {
  Report r;
  switch (spec.command) {
    case Command::Commutant: r = run_commutant(spec); break;
    case Command::Dirac: r = run_dirac(spec); break;
    case Command::Beta: r = run_beta(spec); break;
    case Command::Verify: r = run_verify(spec.scope); break;
    case Command::Report: r = run_report(spec); break;
  }
  Json inputs{{"command", to_string(spec.command)}};
  if (spec.case_tag) inputs["case"] = to_string(*spec.case_tag);
  if (spec.grading) inputs["grading"] = to_string(*spec.grading);
  if (spec.beta) inputs["beta"] = *spec.beta;
  if (spec.command == Command::Dirac) inputs["self_adjoint"] = spec.self_adjoint;
  if (spec.command == Command::Verify) inputs["scope"] = spec.scope;
  r.inputs = std::move(inputs);
  return r;
}

std::string emit_report(const Report& r, const RunSpec& spec) {
  Json j;
  j["meta"] = {{"tool", "pst"}, {"schema", 1}, {"arithmetic", "exact gaussian rationals"}};
  j["inputs"] = r.inputs;
  j["dimensions"] = r.dimensions;
  if (r.basis) j["basis"] = *r.basis;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"paper_anchor", c.anchor}, {"pass", c.pass}});
  j["checks"] = std::move(checks);
  if (r.verdicts) j["verdicts"] = *r.verdicts;
  if (spec.format == Format::Json) return j.dump(2) + "\n";
  std::string out;
  render_text(j, 0, out);
  return out;
}

void write_output(const std::string& bytes, const RunSpec& spec) {
  if (!spec.out) {
    std::cout << bytes;
    std::cout.flush();
    return;
  }
  std::ofstream f(*spec.out, std::ios::binary);
  if (!f) throw Error("cannot open output file '" + *spec.out + "'");
  f << bytes;
  f.close();
  if (!f) throw Error("failed writing output file '" + *spec.out + "'");
}

}  // namespace pst
