#include "smashkit/commands.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "smashkit/bismash.hpp"
#include "smashkit/check.hpp"
#include "smashkit/error.hpp"
#include "smashkit/families.hpp"
#include "smashkit/lingrp.hpp"
#include "smashkit/numth.hpp"
#include "smashkit/screen.hpp"
#include "smashkit/wedderburn.hpp"

namespace smashkit::commands {

using Json = nlohmann::ordered_json;
using perm::Group;
using perm::Permutation;

namespace {

class Report {
 public:
  Report(std::string command, Json inputs) {
    j_["schema"] = 1;
    j_["command"] = std::move(command);
    j_["inputs"] = std::move(inputs);
    j_["dims"] = Json::array();
  }

  void dims(const DegreeMultiset& d) {
    j_["dims"] = d.values();
    details_["dims_summary"] = d.to_string();
  }
  void check(std::string name, bool pass, std::string detail) {
    mismatch_ = mismatch_ || !pass;
    checks_.push_back({{"name", std::move(name)}, {"pass", pass}, {"detail", std::move(detail)}});
  }
  void warn(std::string text) { warnings_.push_back(std::move(text)); }
  Json& detail(const std::string& key) { return details_[key]; }

  CommandResult finish() {
    j_["checks"] = std::move(checks_);
    j_["verdict"] = mismatch_ ? "mismatch" : "match";
    j_["warnings"] = std::move(warnings_);
    for (auto& [k, v] : details_.items()) j_[k] = std::move(v);
    return {j_.dump(2) + "\n", mismatch_};
  }

 private:
  Json j_;
  Json checks_ = Json::array();
  Json warnings_ = Json::array();
  Json details_ = Json::object();
  bool mismatch_ = false;
};

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

Group parse_group(const Json& spec, const std::string& key, std::size_t degree, const perm::Caps& caps) {
  if (!spec.contains(key)) throw Error(ErrorCode::Parse, "spec is missing \"" + key + "\"");
  const auto& arr = spec.at(key);
  if (!arr.is_array()) throw Error(ErrorCode::Parse, "spec field \"" + key + "\" must be an array of cycle strings");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) {
      throw Error(ErrorCode::Parse, "spec field \"" + key + "\"[" + std::to_string(i) + "] must be a string");
    }
    try {
      gens.push_back(Permutation::parse_cycles(arr[i].get<std::string>(), degree));
    } catch (const ParseError& e) {
      throw Error(ErrorCode::Parse, "spec field \"" + key + "\"[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return Group::from_generators(degree, gens, caps);
}

std::size_t parse_degree(const Json& spec) {
  if (!spec.is_object()) throw Error(ErrorCode::Parse, "spec must be a JSON object");
  if (!spec.contains("degree")) throw Error(ErrorCode::Parse, "spec is missing \"degree\"");
  const auto& d = spec.at("degree");
  if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0) {
    throw Error(ErrorCode::Parse, "spec field \"degree\" must be a positive integer");
  }
  return d.get<std::size_t>();
}

Json orbits_json(const bismash::FactorizedGroup& fg, const bismash::KmmResult& kmm) {
  Json out = Json::array();
  for (const auto& o : kmm.orbits) {
    out.push_back({{"representative", fg.l_element(o.representative).to_cycles()},
                   {"size", o.size},
                   {"stabilizer_order", o.stabilizer_order},
                   {"stabilizer_degrees", o.stabilizer_degrees.values()}});
  }
  return out;
}

void add_oracle(Report& rep, const bismash::FactorizedGroup& fg, const bismash::MutualActions& act,
                const DegreeMultiset& kmm, std::uint32_t prime, const RunConfig& cfg) {
  const std::size_t dim = fg.l_count() * fg.f_count();
  if (dim > cfg.oracle_dim_cap) {
    rep.warn("oracle skipped: dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cfg.oracle_dim_cap));
    return;
  }
  const auto res = wedderburn::decompose(bismash::build_algebra(fg, act, prime, cfg.algebra_dim_cap), cfg.seed);
  rep.detail("oracle") = {{"prime", prime}, {"center_dim", res.center_dim}, {"dims", res.degrees.values()}};
  rep.check("oracle_match", res.degrees == kmm, "Wedderburn over GF(" + std::to_string(prime) + "): " +
                                                    res.degrees.to_string());
}

void add_hopf(Report& rep, const bismash::FactorizedGroup& fg, const bismash::MutualActions& act, std::uint32_t prime,
              const RunConfig& cfg, bool cocommutativity) {
  const std::size_t dim = fg.l_count() * fg.f_count();
  const bool normal = fg.L().is_abelian() && fg.L().is_normal_in(fg.G());
  if (dim > cfg.hopf_dim_cap) {
    rep.warn("Hopf axiom suite skipped: dimension " + std::to_string(dim) + " exceeds cap " +
             std::to_string(cfg.hopf_dim_cap));
    if (cocommutativity) rep.detail("l_abelian_normal") = normal;
    return;
  }
  const bismash::HopfMaps h(fg, act, cfg.hopf_dim_cap);
  const auto a = bismash::build_algebra(fg, act, prime, cfg.algebra_dim_cap);
  const auto r = bismash::check_hopf_axioms(a, h);
  std::ostringstream os;
  os << r.checks << " identities; failures: multiplicative " << r.coproduct_multiplicative_failures << ", unit "
     << r.coproduct_unit_failures << ", coassociative " << r.coassociativity_failures << ", counit "
     << r.counit_failures << ", antipode " << r.antipode_failures;
  rep.check("hopf_axioms", r.all(), os.str());
  if (cocommutativity) {
    const auto c = bismash::cocommutativity_check(fg, h);
    rep.detail("cocommutative") = c.cocommutative;
    rep.detail("l_abelian_normal") = c.l_abelian_normal;
    rep.check("cocommutativity_criterion", c.agrees(),
              std::string("cocommutative ") + (c.cocommutative ? "true" : "false") + ", L abelian and normal " +
                  (c.l_abelian_normal ? "true" : "false"));
  }
}

std::string poly_string(const gf::QuadraticPoly& p) {
  const auto& f = *p.mu.field();
  return "X^2 + (" + f.to_string(p.mu.value()) + ")X + (" + f.to_string(p.lambda.value()) + ")";
}

}  // namespace

CommandResult run_pgl(std::uint64_t q, const RunConfig& cfg) {
  const auto pkg = lin::build_pgl2(q, cfg.caps);
  const auto fg = bismash::FactorizedGroup::create(pkg.G, pkg.C, pkg.S);
  const bismash::MutualActions act(fg);

  Report rep("pgl", {{"q", q}, {"seed", cfg.seed}});
  rep.detail("package") = {{"G_order", pkg.G.order()},
                           {"C_order", pkg.C.order()},
                           {"S_order", pkg.S.order()},
                           {"primitive_polynomial", poly_string(pkg.poly)},
                           {"xbar", pkg.xbar.to_cycles()}};

  const auto ax = act.check_axioms(fg);
  rep.check("action_axioms", ax.all(), std::to_string(ax.pairs_checked) + " pairs");
  const auto prime = bismash::oracle_prime(fg);
  const auto kmm = bismash::kmm_dimensions(fg, act, bismash::wedderburn_oracle(prime, cfg.seed));
  rep.dims(kmm.dims);
  rep.detail("orbits") = orbits_json(fg, kmm);
  rep.check("sum_of_squares", kmm.dims.sum_of_squares() == pkg.G.order(),
            std::to_string(kmm.dims.sum_of_squares()) + " = |G| = " + std::to_string(pkg.G.order()));
  const auto expected = bismash::pgl2_formula(q);
  rep.check("formula_match", kmm.dims == expected, "expected " + expected.to_string());

  const auto sl = bismash::singer_lemmas(pkg, fg, act);
  rep.check("singer_orbit_transitive", sl.transitive_on_c_sharp,
            "orbit of xbar under S has size " + std::to_string(sl.orbit_size) + " of " + std::to_string(q));
  rep.check("singer_u_images_distinct", sl.u_images_distinct, "images of xbar under U");
  rep.check("singer_stabilizer_order", sl.stabilizer_order == q - 1,
            "|Stab_S(xbar)| = " + std::to_string(sl.stabilizer_order));
  rep.check("singer_stabilizer_cyclic", sl.stabilizer_cyclic, "an element of order |Stab_S(xbar)| exists");

  add_oracle(rep, fg, act, kmm.dims, prime, cfg);
  add_hopf(rep, fg, act, prime, cfg, false);
  return rep.finish();
}

CommandResult run_bismash(std::string_view spec_text, const RunConfig& cfg) {
  const auto spec = parse_json(spec_text);
  const auto degree = parse_degree(spec);
  auto g = parse_group(spec, "G", degree, cfg.caps);
  auto l = parse_group(spec, "L", degree, cfg.caps);
  auto f = parse_group(spec, "F", degree, cfg.caps);
  const auto fg = bismash::FactorizedGroup::create(std::move(g), std::move(l), std::move(f));
  const bismash::MutualActions act(fg);

  Report rep("bismash", {{"degree", degree},
                         {"G", spec.at("G")},
                         {"L", spec.at("L")},
                         {"F", spec.at("F")},
                         {"seed", cfg.seed}});
  rep.detail("orders") = {{"G", fg.G().order()}, {"L", fg.L().order()}, {"F", fg.F().order()}};
  const auto ax = act.check_axioms(fg);
  rep.check("action_axioms", ax.all(), std::to_string(ax.pairs_checked) + " pairs");
  const auto prime = bismash::oracle_prime(fg);
  const auto kmm = bismash::kmm_dimensions(fg, act, bismash::wedderburn_oracle(prime, cfg.seed));
  rep.dims(kmm.dims);
  rep.detail("orbits") = orbits_json(fg, kmm);
  rep.check("sum_of_squares", kmm.dims.sum_of_squares() == fg.G().order(),
            std::to_string(kmm.dims.sum_of_squares()) + " = |G| = " + std::to_string(fg.G().order()));
  add_oracle(rep, fg, act, kmm.dims, prime, cfg);
  add_hopf(rep, fg, act, prime, cfg, true);
  return rep.finish();
}

namespace {

CommandResult frobenius_common(Report& rep, const Group& g, const Group& n, const Group& h, const RunConfig& cfg) {
  const auto prime = wedderburn::select_prime(perm::exponent(g), g.order());
  const auto r = bismash::frobenius_bismash_report(g, n, h, bismash::wedderburn_oracle(prime, cfg.seed));
  rep.detail("orders") = {{"G", g.order()}, {"N", n.order()}, {"H", h.order()}};
  rep.dims(r.kmm.dims);
  rep.detail("predicted") = r.predicted.values();
  rep.detail("lower_central_orders") = r.lower_central_orders;
  rep.detail("n_star_factors") = r.n_star_factors;
  Json flat = Json::array();
  for (const auto& f : r.n_star_factors)
    for (auto x : f) flat.push_back(x);
  rep.detail("n_star_invariants") = std::move(flat);

  rep.check("frobenius_property", true, "H acts fixed-point-freely on N#");
  rep.check("sum_of_squares", r.kmm.dims.sum_of_squares() == g.order(),
            std::to_string(r.kmm.dims.sum_of_squares()) + " = |G| = " + std::to_string(g.order()));
  rep.check("multiset_identity", r.multiset_match, "predicted " + r.predicted.to_string());
  rep.check("n_star_order", r.n_star_order_match,
            "|N*| = " + std::to_string(r.n_star_order) + ", |N| = " + std::to_string(n.order()));

  const auto fg = bismash::FactorizedGroup::create(g, n, h);
  const bismash::MutualActions act(fg);
  add_oracle(rep, fg, act, r.kmm.dims, prime, cfg);
  return rep.finish();
}

}  // namespace

CommandResult run_frobenius(std::string_view name, const RunConfig& cfg) {
  families::FrobeniusGroup fam;
  if (name == "heis7-z3") {
    fam = families::heis7_z3();
  } else if (name.rfind("agl1-", 0) == 0 && name.size() > 5 &&
             name.substr(5).find_first_not_of("0123456789") == std::string_view::npos && name.size() <= 14) {
    fam = families::agl1(std::stoull(std::string(name.substr(5))));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown Frobenius family \"" + std::string(name) +
                                                "\"; expected agl1-<q> or heis7-z3");
  }
  Report rep("frobenius", {{"name", name}, {"seed", cfg.seed}});
  return frobenius_common(rep, fam.G, fam.N, fam.H, cfg);
}

CommandResult run_frobenius_spec(std::string_view spec_text, const RunConfig& cfg) {
  const auto spec = parse_json(spec_text);
  const auto degree = parse_degree(spec);
  const std::string nk = spec.contains("N") ? "N" : "L";
  const std::string hk = spec.contains("H") ? "H" : "F";
  const auto g = parse_group(spec, "G", degree, cfg.caps);
  const auto n = parse_group(spec, nk, degree, cfg.caps);
  const auto h = parse_group(spec, hk, degree, cfg.caps);
  Report rep("frobenius",
             {{"degree", degree}, {"G", spec.at("G")}, {"N", spec.at(nk)}, {"H", spec.at(hk)}, {"seed", cfg.seed}});
  return frobenius_common(rep, g, n, h, cfg);
}

CommandResult run_screen(std::uint64_t lo, std::uint64_t hi, const RunConfig& cfg) {
  Report rep("screen", {{"from", lo}, {"to", hi}, {"seed", cfg.seed}});
  Json results = Json::array();
  Json realizable = Json::array(), obstructed = Json::array(), undecided = Json::array();
  for (std::uint64_t q = std::max<std::uint64_t>(lo, 2); q <= hi; ++q) {
    if (!numth::prime_power(q)) continue;
    const auto r = screen::screen_pattern(q);
    Json conds = Json::array();
    for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"survives", c.survives}, {"detail", c.detail}});
    Json sols = Json::array();
    for (const auto& s : r.quotient.solutions) sols.push_back({{"m", s.m}, {"r", s.r}, {"a", s.a}, {"s", s.s}});
    Json entry = {{"q", q},
                  {"verdict", screen::verdict_name(r.verdict)},
                  {"degrees", r.pattern.degrees.to_string()},
                  {"conditions", std::move(conds)},
                  {"quotient_solutions", std::move(sols)},
                  {"quotient_degenerate", r.quotient.degenerate}};
    if (!r.witness.empty()) {
      entry["witness"] = r.witness;
      entry["witness_degrees"] = r.witness_degrees.values();
    }
    for (const auto& c : r.checks) rep.check("q=" + std::to_string(q) + " " + c.name, c.pass, c.detail);
    switch (r.verdict) {
      case screen::Verdict::Realizable: realizable.push_back(q); break;
      case screen::Verdict::Obstructed: obstructed.push_back(q); break;
      case screen::Verdict::Undecided: undecided.push_back(q); break;
    }
    results.push_back(std::move(entry));
  }
  rep.detail("results") = std::move(results);
  rep.detail("summary") = {{"realizable", realizable}, {"obstructed", obstructed}, {"undecided", undecided}};
  rep.detail("quotient_domain") =
      "divisors m of q^3-q with 1<m<q^3-q; r+a(q-1)^2+sq^2=m; 1<=r<=q-1, r|m; a in {0,1}; 0<=s<=q-1; a+s>=1; "
      "(q-1)|m if a=1; q|m if s>=1";
  return rep.finish();
}

CommandResult run_singer(unsigned n, const RunConfig& cfg) {
  const auto pkg = lin::build_gln2(n, cfg.caps);
  const auto normalizer = lin::singer_normalizer_order(n, cfg.caps);
  const std::uint64_t p = (std::uint64_t{1} << n) - 1;
  const std::uint64_t formula = n * p;
  Report rep("singer", {{"n", n}, {"seed", cfg.seed}});
  rep.detail("GL_order") = pkg.G.order();
  rep.detail("singer_order") = pkg.singer.order();
  rep.detail("normalizer_order") = normalizer;
  rep.check("normalizer_order", normalizer == formula,
            "|N(S)| = " + std::to_string(normalizer) + ", n(2^n - 1) = " + std::to_string(formula));
  if (n >= 3) {
    rep.check("normalizer_bound", normalizer < p * (p - 1),
              std::to_string(normalizer) + " < p(p - 1) = " + std::to_string(p * (p - 1)));
  }
  return rep.finish();
}

CommandResult run_decompose(std::string_view algebra_json, const RunConfig& cfg) {
  const auto a = wedderburn::algebra_from_json(algebra_json);
  if (a.dim() > cfg.oracle_dim_cap) {
    throw Error(ErrorCode::CapExceeded,
                "algebra dimension " + std::to_string(a.dim()) + " exceeds cap " + std::to_string(cfg.oracle_dim_cap));
  }
  const auto r = wedderburn::decompose(a, cfg.seed);
  Report rep("decompose", {{"dim", a.dim()}, {"prime", a.prime()}, {"seed", cfg.seed}});
  rep.dims(r.degrees);
  rep.detail("center_dim") = r.center_dim;
  rep.detail("idempotent_count") = r.idempotent_count;
  rep.check("sum_of_squares", r.degrees.sum_of_squares() == a.dim(),
            std::to_string(r.degrees.sum_of_squares()) + " = dim = " + std::to_string(a.dim()));
  rep.check("components_match_center", r.degrees.size() == r.center_dim,
            std::to_string(r.degrees.size()) + " components, center dimension " + std::to_string(r.center_dim));
  return rep.finish();
}

std::string export_pgl_algebra(std::uint64_t q, const RunConfig& cfg) {
  const auto pkg = lin::build_pgl2(q, cfg.caps);
  const auto fg = bismash::FactorizedGroup::create(pkg.G, pkg.C, pkg.S);
  return wedderburn::to_json(
             bismash::build_algebra(fg, bismash::MutualActions(fg), bismash::oracle_prime(fg), cfg.algebra_dim_cap)) +
         "\n";
}

std::string export_spec_algebra(std::string_view spec_text, const RunConfig& cfg) {
  const auto spec = parse_json(spec_text);
  const auto degree = parse_degree(spec);
  const auto fg = bismash::FactorizedGroup::create(
      parse_group(spec, "G", degree, cfg.caps), parse_group(spec, "L", degree, cfg.caps),
      parse_group(spec, "F", degree, cfg.caps));
  return wedderburn::to_json(
             bismash::build_algebra(fg, bismash::MutualActions(fg), bismash::oracle_prime(fg), cfg.algebra_dim_cap)) +
         "\n";
}

std::string render_table(std::string_view report_json) {
  const auto j = parse_json(report_json);
  std::ostringstream os;
  os << "command  " << j.value("command", "?") << "\n";
  if (j.contains("inputs")) {
    os << "inputs  ";
    for (const auto& [k, v] : j.at("inputs").items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
  }
  if (j.contains("dims_summary")) os << "dims     " << j.at("dims_summary").get<std::string>() << "\n";
  if (j.contains("predicted")) {
    os << "predicted " << DegreeMultiset(j.at("predicted").get<std::vector<std::uint64_t>>()).to_string() << "\n";
  }
  if (j.contains("n_star_invariants")) os << "N*       " << j.at("n_star_invariants").dump() << "\n";
  if (j.contains("orbits")) {
    os << "orbits\n";
    for (const auto& o : j.at("orbits")) {
      os << "  rep " << o.at("representative").get<std::string>() << "  size " << o.at("size").dump()
         << "  |stab| " << o.at("stabilizer_order").dump() << "  degrees "
         << DegreeMultiset(o.at("stabilizer_degrees").get<std::vector<std::uint64_t>>()).to_string() << "\n";
    }
  }
  if (j.contains("results")) {
    os << "    q  verdict\n";
    for (const auto& r : j.at("results")) {
      std::string failed;
      for (const auto& c : r.at("conditions"))
        if (!c.at("survives").get<bool>()) failed += (failed.empty() ? "" : ", ") + c.at("name").get<std::string>();
      char qbuf[16];
      std::snprintf(qbuf, sizeof qbuf, "%5llu", static_cast<unsigned long long>(r.at("q").get<std::uint64_t>()));
      os << qbuf << "  " << r.at("verdict").get<std::string>();
      if (r.contains("witness")) os << " (witness " << r.at("witness").get<std::string>() << ")";
      if (!failed.empty()) os << " [" << failed << "]";
      os << "\n";
    }
  }
  if (j.contains("normalizer_order")) {
    os << "|GL|     " << j.at("GL_order").dump() << "\n|S|      " << j.at("singer_order").dump() << "\n|N(S)|   "
       << j.at("normalizer_order").dump() << "\n";
  }
  if (j.contains("checks") && !j.at("checks").empty()) {
    os << "checks\n";
    for (const auto& c : j.at("checks")) {
      os << "  " << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "  " << c.at("name").get<std::string>() << "  "
         << c.at("detail").get<std::string>() << "\n";
    }
  }
  if (j.contains("warnings")) {
    for (const auto& w : j.at("warnings")) os << "warning  " << w.get<std::string>() << "\n";
  }
  os << "verdict  " << j.value("verdict", "?") << "\n";
  return os.str();
}

}  // namespace smashkit::commands
