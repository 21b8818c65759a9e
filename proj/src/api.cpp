#include "iscp/api.hpp"

#include <fstream>

#include "iscp/corpus.hpp"

namespace iscp::api {

using io::json;

namespace {

json predicate_json(const isg::InverseSemigroup& s,
                    const isg::InverseSemigroup::PredicateResult& r) {
  json out;
  out["value"] = r.value;
  if (r.witness) {
    out["witness"] = {r.witness->first, r.witness->second};
    out["witness_labels"] = {s.labels()[r.witness->first], s.labels()[r.witness->second]};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

std::vector<int> order_of(const isg::InverseSemigroup& s, const std::string& name) {
  if (name == "lex") return s.lex_order();
  if (name == "index") return s.index_order();
  throw structural_error("unknown order: " + name);
}

json cmd_validate_isg(const json& input, const Options& opt) {
  json out;
  if (input.contains("points") && input.contains("generators")) {
    auto S = io::semigroup_from_json(input, opt.cap);
    out["valid"] = true;
    out["violations"] = json::array();
    out["size"] = S->size();
    out["labels"] = S->labels();
    json idem = json::array();
    for (int e : S->idempotents()) idem.push_back(e);
    out["idempotents"] = idem;
    return out;
  }
  int n = input.at("size").get<int>();
  std::vector<int> mul;
  for (auto& row : input.at("mul"))
    for (auto& v : row) mul.push_back(v.get<int>());
  std::vector<int> inv = input.at("inv").get<std::vector<int>>();
  std::optional<int> unit, zero;
  if (input.contains("unit") && !input.at("unit").is_null()) unit = input.at("unit").get<int>();
  if (input.contains("zero") && !input.at("zero").is_null()) zero = input.at("zero").get<int>();
  auto rep = isg::InverseSemigroup::validate(n, mul, inv, unit, zero);
  out = io::report_to_json(rep);
  out["size"] = n;
  if (rep.valid) {
    isg::InverseSemigroup s(n, mul, inv, unit, zero);
    json idem = json::array();
    for (int e : s.idempotents()) idem.push_back(e);
    out["idempotents"] = idem;
  }
  return out;
}

json cmd_e_unitary(const json& input, const Options& opt) {
  auto S = io::semigroup_from_json(input, opt.cap);
  json out;
  out["e_unitary"] = predicate_json(*S, S->is_e_unitary());
  if (S->zero())
    out["e_star_unitary"] = predicate_json(*S, S->is_e_star_unitary());
  else
    out["e_star_unitary"] = nullptr;
  return out;
}

json cmd_spectrum(const json& input, const Options& opt) {
  auto S = io::semigroup_from_json(input, opt.cap);
  auto [E, idx] = S->idempotent_semilattice();
  if (!E.zero()) throw precondition_error("spectrum needs a zero idempotent");
  auto spec = topo::semilattice_spectrum(E);
  auto ultra = topo::ultracharacters(spec);
  json out;
  out["idempotents"] = (int)idx.size();
  out["characters"] = spec.characters();
  out["opens"] = (int)spec.space.opens().size();
  out["ideal_open_bijection"] = topo::ideal_open_bijection_check(spec);
  out["space"] = io::space_to_json(spec.space);
  out["ultracharacters"] = ultra.ultra.elements();
  out["ultra_closure"] = ultra.closure_in_spectrum.elements();
  // at finite scale the alternative totally disconnected topology is
  // discrete, so the tight spectrum is the ultracharacter set itself
  out["tight_closed_in_paterson"] =
      (spec.paterson_space().closure(ultra.ultra) == ultra.ultra);
  out["hausdorff"] = spec.space.is_hausdorff();
  return out;
}

json cmd_germ_groupoid(const json& input, const Options& opt) {
  auto a = io::action_from_json(input, opt.cap);
  act::GermGroupoid g(a);
  json out = io::groupoid_to_json(g);
  out["arrow_count"] = g.arrows();
  out["units_closed"] = act::units_closed(g);
  return out;
}

json cmd_hausdorff(const json& input, const Options& opt) {
  json out;
  if (input.contains("semigroup") && input.contains("maps")) {
    auto a = io::action_from_json(input, opt.cap);
    act::GermGroupoid g(a);
    out["space_hausdorff"] = a.X().is_hausdorff();
    out["groupoid_hausdorff"] = act::groupoid_is_hausdorff(g);
    out["units_closed"] = act::units_closed(g);
  } else {
    auto x = io::space_from_json(input);
    out["space_hausdorff"] = x.is_hausdorff();
    out["discrete"] = x.is_discrete();
  }
  return out;
}

json cmd_units_closed(const json& input, const Options& opt) {
  auto a = io::action_from_json(input, opt.cap);
  act::GermGroupoid g(a);
  json out;
  out["units_closed"] = act::units_closed(g);
  auto per = act::criterion_d1t_closed(a);
  json table = json::object();
  for (auto& [t, ok] : per.per_t) table[a.S().labels()[t]] = ok;
  out["per_element"] = table;
  out["criterion_all"] = per.all;
  return out;
}

json cmd_cross_check_69(const json& input, const Options& opt) {
  auto S = io::semigroup_from_json(input, opt.cap);
  // zero-preserving corpus: the universal action plus the defining-style
  // trivial action on the one-point space when available
  std::vector<act::SpaceAction> corpus;
  auto rep = act::e_unitary_cross_check(S, corpus);
  json out;
  out["e_star_unitary"] = rep.e_star_unitary;
  out["order_condition"] = rep.order_condition;
  out["units_closed_universal"] = rep.units_closed_universal;
  if (rep.witness)
    out["witness"] = {{"pair", {rep.witness->first, rep.witness->second}},
                      {"labels",
                       {S->labels()[rep.witness->first], S->labels()[rep.witness->second]}}};
  else
    out["witness"] = nullptr;
  out["chain_agrees"] = rep.chain_agrees;
  out["assertions_hold"] = rep.chain_agrees && rep.implication_holds;
  return out;
}

json cmd_expectation(const json& input, const Options& opt) {
  auto a = io::fd_action_from_json(input.at("action"), opt.cap);
  auto x = io::crossed_from_json(a, input.at("element"));
  auto ord = order_of(a.S(), opt.order);
  json out;
  out["expectation"] = io::element_to_json(xp::expectation(x));
  out["normal_form"] = io::crossed_to_json(xp::normal_form(x, ord));
  auto pos = xp::positivity_check(x, opt.tol_spec, opt.tol);
  out["min_eigenvalue"] = pos.min_eigenvalue;
  out["expectation_zero"] = pos.expectation_zero;
  out["normal_form_zero"] = pos.normal_form_zero;
  out["assertions_hold"] = pos.equivalent;
  return out;
}

json cmd_crossed_product(const json& input, const Options& opt) {
  auto a = io::fd_action_from_json(input.at("action"), opt.cap);
  auto reg = xp::regular_representation(a);
  auto dims = xp::dimension_report(a, reg);
  std::vector<la::Mat> image;
  for (auto& [t, xi] : xp::slot_basis(a)) image.push_back(reg.pi(t, xi));
  auto efr = xp::e_faithful_check(a, std::vector<int>(a.A().num_blocks(), 1));
  json out;
  out["dim_crossed"] = dims.algebraic_dim;
  out["blocks"] = la::block_structure(image, opt.seed);
  out["E_faithful"] = efr.faithful_on_coefficients && efr.induced_faithful;
  out["free_dim"] = dims.free_dim;
  out["relation_rank"] = dims.relation_rank;
  out["relation_rank_restricted"] = dims.relation_rank_restricted;
  out["representation_faithful"] = dims.representation_faithful;
  out["isometry_defect"] = xp::grading_isometry_defect(reg, 2, opt.seed);
  out["witness"] = nullptr;
  out["assertions_hold"] = dims.representation_faithful;
  return out;
}

json cmd_induce(const json& input, const Options& opt) {
  auto a = io::fd_action_from_json(input.at("action"), opt.cap);
  auto mult = input.at("multiplicities").get<std::vector<int>>();
  auto rep = xp::e_faithful_check(a, mult);
  json out;
  out["faithful_on_coefficients"] = rep.faithful_on_coefficients;
  out["induced_faithful"] = rep.induced_faithful;
  out["induced_dim"] = rep.induced_dim;
  out["algebraic_dim"] = rep.algebraic_dim;
  // a faithful coefficient family always induces a faithful representation
  out["assertions_hold"] = !rep.faithful_on_coefficients || rep.induced_faithful;
  return out;
}

json cmd_verify_01m1(const json& input, const Options& opt) {
  fd::FdAlgebra A{input.at("blocks").get<std::vector<int>>()};
  int k = A.num_blocks();
  fd::Ideal I(k);
  for (auto& b : input.at("ideal")) I.set(b.get<int>());
  xp::BlockAutomorphism alpha;
  alpha.beta.assign(k, -1);
  alpha.u.assign(k, fd::Mat());
  for (auto& [bs, target] : input.at("alpha").at("block_map").items())
    alpha.beta[std::stoi(bs)] = target.get<int>();
  for (auto& [bs, rows] : input.at("alpha").at("unitaries").items()) {
    int b = std::stoi(bs);
    fd::Mat u(A.blocks[b], A.blocks[b]);
    for (int i = 0; i < A.blocks[b]; ++i)
      for (int c = 0; c < A.blocks[b]; ++c)
        u(i, c) = fd::cd(rows.at(i).at(c).at(0).get<double>(),
                         rows.at(i).at(c).at(1).get<double>());
    alpha.u[b] = u;
  }
  auto u = io::element_from_json(A, input.at("u"));
  auto rep = xp::crossed_01m1(A, I, alpha, u, opt.seed);
  json out;
  out["dim_coefficients"] = rep.dim_coefficients;
  out["dim_ideal"] = rep.dim_ideal;
  out["dim_crossed_group"] = rep.dim_crossed_group;
  out["dim_relation_ideal"] = rep.dim_relation_ideal;
  out["dim_crossed"] = rep.dim_crossed;
  out["dimension_law"] = rep.dimension_law;
  out["relation_ideal_verified"] = rep.relation_ideal_verified;
  out["quotient_hom_verified"] = rep.quotient_hom_verified;
  out["blocks"] = rep.blocks;
  out["trivial_case"] = rep.trivial_case;
  if (rep.trivial_case) {
    out["direct_sum_verified"] = rep.direct_sum_verified;
    out["partial_iso_route_agrees"] = rep.partial_iso_route_agrees;
  }
  bool ok = rep.dimension_law && rep.relation_ideal_verified && rep.quotient_hom_verified;
  if (rep.trivial_case) ok = ok && rep.direct_sum_verified && rep.partial_iso_route_agrees;
  out["assertions_hold"] = ok;
  return out;
}

json cmd_verify_iterated(const json& input, const Options& opt) {
  auto a = io::action_from_json(input, opt.cap);
  auto rep = gpd::verify_iterated_iso(a, opt.seed);
  json out;
  out["iso"] = rep.iso;
  out["dim"] = rep.dim_crossed;
  out["dim_convolution"] = rep.dim_convolution;
  out["rep_axiom_defect"] = rep.rep_axiom_defect;
  out["expectation_defect"] = rep.expectation_defect;
  out["bijective"] = rep.bijective;
  out["assertions_hold"] = rep.iso;
  return out;
}

json cmd_corpus_run(const json& input, const Options& opt) {
  (void)input;
  json out;
  bool all_ok = true;

  // the equivalence suite over the bundled semigroups
  {
    json suite = json::object();
    std::vector<std::pair<std::string, std::shared_ptr<const isg::InverseSemigroup>>> semis = {
        {"01m1", corpus::z2_with_zero()},
        {"z2-with-zero", corpus::z2_with_zero()},
        {"i2", corpus::symmetric_inverse_monoid(2).S},
        {"i3", corpus::symmetric_inverse_monoid(3).S}};
    for (auto& [name, S] : semis) {
      auto rep = act::e_unitary_cross_check(S, {});
      suite[name] = {{"e_star_unitary", rep.e_star_unitary},
                     {"chain_agrees", rep.chain_agrees}};
      all_ok = all_ok && rep.chain_agrees;
    }
    out["equivalence_suite"] = suite;
  }

  // closed units versus the per-element criterion on the space corpus
  {
    int count = 0, closed = 0;
    bool agree = true;
    for (auto& na : corpus::space_action_corpus()) {
      act::GermGroupoid g(na.action);
      bool uc = act::units_closed(g);
      bool gh = act::groupoid_is_hausdorff(g);
      agree = agree && (gh == (uc && na.action.X().is_hausdorff()));
      ++count;
      if (uc) ++closed;
    }
    out["space_corpus"] = {{"actions", count}, {"units_closed", closed}, {"laws_agree", agree}};
    all_ok = all_ok && agree;
  }

  // expectation sanity over the fd corpus
  {
    auto fdc = corpus::fd_action_corpus(20, opt.seed);
    std::mt19937_64 rng(opt.seed);
    double min_eig = 0, bimod = 0;
    bool equiv = true;
    for (auto& na : fdc) {
      for (int i = 0; i < 3; ++i) {
        auto x = corpus::random_crossed(na.action, rng);
        auto pos = xp::positivity_check(x, opt.tol_spec, opt.tol);
        min_eig = std::min(min_eig, pos.min_eigenvalue);
        equiv = equiv && pos.equivalent;
        auto e1 = xp::expectation(xp::star(x));
        auto e2 = xp::expectation(x).star();
        bimod = std::max(bimod, (e1 - e2).max_abs());
      }
    }
    out["fd_corpus"] = {{"actions", (int)fdc.size()},
                        {"min_eigenvalue", min_eig},
                        {"star_defect", bimod},
                        {"zero_iff_normal_form_zero", equiv}};
    all_ok = all_ok && equiv && (min_eig >= -opt.tol_spec) && (bimod <= opt.tol);
  }

  // iterated isomorphism over the discrete corpus
  {
    int count = 0;
    bool iso = true;
    for (auto& na : corpus::discrete_action_corpus()) {
      auto rep = gpd::verify_iterated_iso(na.action, opt.seed);
      iso = iso && rep.iso;
      ++count;
    }
    out["iterated"] = {{"actions", count}, {"all_iso", iso}};
    all_ok = all_ok && iso;
  }

  // the two-block family and its dimension law
  {
    bool law = true;
    auto check = [&](const corpus::Triple01m1& t, std::uint64_t s) {
      auto rep = xp::crossed_01m1(t.A, t.I, t.alpha, t.u, s);
      law = law && rep.dimension_law && rep.relation_ideal_verified &&
            rep.quotient_hom_verified;
    };
    check(corpus::trivial_triple_c2(), opt.seed);
    check(corpus::matrix_block_triple(), opt.seed + 1);
    for (int i = 1; i <= 3; ++i) check(corpus::random_triple(opt.seed + i), opt.seed + 10 + i);
    out["triple_family"] = {{"instances", 5}, {"dimension_law", law}};
    all_ok = all_ok && law;
  }

  out["assertions_hold"] = all_ok;
  return out;
}

json cmd_corpus_dump(const json& input, const Options& opt) {
  std::string dir = input.at("dir").get<std::string>();
  json written = json::array();
  auto dump = [&](const std::string& name, const json& j) {
    std::ofstream f(dir + "/" + name);
    if (!f) throw structural_error("cannot write " + dir + "/" + name);
    f << j.dump(2) << "\n";
    written.push_back(name);
  };

  dump("semigroup_01m1.json", io::semigroup_to_json(*corpus::z2_with_zero()));
  dump("semigroup_z2.json", io::semigroup_to_json(*corpus::z2()));
  dump("semigroup_i2.json", io::semigroup_to_json(*corpus::symmetric_inverse_monoid(2).S));
  dump("semigroup_i3.json", io::semigroup_to_json(*corpus::symmetric_inverse_monoid(3).S));

  dump("space_sierpinski.json", io::space_to_json(corpus::sierpinski()));
  dump("space_chain3.json", io::space_to_json(corpus::chain3()));
  dump("space_discrete2.json", io::space_to_json(topo::FiniteSpace::discrete(2)));

  dump("action_01m1_sierpinski.json",
       io::action_to_json(corpus::action_01m1(corpus::sierpinski(), SubSet::of(2, {0}))));
  dump("action_01m1_discrete2.json",
       io::action_to_json(
           corpus::action_01m1(topo::FiniteSpace::discrete(2), SubSet::of(2, {0}))));
  dump("action_i2_defining.json",
       io::action_to_json(corpus::defining_action(corpus::symmetric_inverse_monoid(2))));

  dump("fdaction_01m1_cc.json",
       io::fd_action_to_json(corpus::trivial_01m1_fd(fd::FdAlgebra{{1, 1}}, SubSet::of(2, {0}))));
  dump("fdaction_01m1_m2c.json",
       io::fd_action_to_json(corpus::trivial_01m1_fd(fd::FdAlgebra{{2, 1}}, SubSet::of(2, {0}))));
  dump("fdaction_z2_swap.json", io::fd_action_to_json(corpus::z2_swap_cc()));
  dump("fdaction_z2_ad_m2.json", io::fd_action_to_json(corpus::z2_ad_m2()));

  {
    auto act = corpus::trivial_01m1_fd(fd::FdAlgebra{{1, 1}}, SubSet::of(2, {0}));
    xp::CrossedElement x(act);
    auto xi = fd::AlgElement::unit_matrix(act.A(), 0, 0, 0);
    x.set_coeff(1, xi);
    x.add_coeff(2, xi);
    json doc;
    doc["action"] = io::fd_action_to_json(act);
    doc["element"] = io::crossed_to_json(x);
    dump("expectation_sample.json", doc);
  }
  {
    auto t = corpus::trivial_triple_c2();
    json doc;
    doc["blocks"] = t.A.blocks;
    doc["ideal"] = t.I.elements();
    json bm = json::object(), us = json::object();
    for (int b = 0; b < t.A.num_blocks(); ++b) {
      bm[std::to_string(b)] = t.alpha.beta[b];
      json rows = json::array();
      for (int i = 0; i < t.A.blocks[b]; ++i) {
        json row = json::array();
        for (int c = 0; c < t.A.blocks[b]; ++c)
          row.push_back({t.alpha.u[b](i, c).real(), t.alpha.u[b](i, c).imag()});
        rows.push_back(row);
      }
      us[std::to_string(b)] = rows;
    }
    doc["alpha"] = {{"block_map", bm}, {"unitaries", us}};
    doc["u"] = io::element_to_json(t.u);
    dump("triple_trivial_c2.json", doc);
  }
  (void)opt;
  return {{"written", written}};
}

}  // namespace

std::vector<std::string> commands() {
  return {"validate-isg", "e-unitary",       "spectrum",      "germ-groupoid",
          "hausdorff",    "units-closed",    "cross-check-69", "expectation",
          "crossed-product", "induce",       "verify-01m1",   "verify-iterated",
          "corpus-run",   "corpus-dump"};
}

io::json run(const std::string& command, const io::json& input, const Options& opt) {
  if (command == "validate-isg") return cmd_validate_isg(input, opt);
  if (command == "e-unitary") return cmd_e_unitary(input, opt);
  if (command == "spectrum") return cmd_spectrum(input, opt);
  if (command == "germ-groupoid") return cmd_germ_groupoid(input, opt);
  if (command == "hausdorff") return cmd_hausdorff(input, opt);
  if (command == "units-closed") return cmd_units_closed(input, opt);
  if (command == "cross-check-69") return cmd_cross_check_69(input, opt);
  if (command == "expectation") return cmd_expectation(input, opt);
  if (command == "crossed-product") return cmd_crossed_product(input, opt);
  if (command == "induce") return cmd_induce(input, opt);
  if (command == "verify-01m1") return cmd_verify_01m1(input, opt);
  if (command == "verify-iterated") return cmd_verify_iterated(input, opt);
  if (command == "corpus-run") return cmd_corpus_run(input, opt);
  if (command == "corpus-dump") return cmd_corpus_dump(input, opt);
  throw structural_error("unknown command: " + command);
}

}  // namespace iscp::api
