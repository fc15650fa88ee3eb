#include "toric/cli.hpp"

#include "toric/census.hpp"
#include "toric/equiv.hpp"
#include "toric/errors.hpp"
#include "toric/families.hpp"
#include "toric/moves.hpp"
#include "toric/polytope.hpp"
#include "toric/polytope_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace toric::cli {

namespace {

using Json = nlohmann::json;
using toric::json::integer_to_json;
namespace pj = toric::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Comma-separated non-negative integers; unsorted input is sorted with a notice.
ExponentVector parse_vector(const std::string& name, const std::string& text, std::ostream& err) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer x;
    try {
      x = parse_integer(item);
    } catch (const std::invalid_argument&) {
      throw UsageError("--" + name + ": '" + item + "' is not an integer");
    }
    if (x < 0) throw UsageError("--" + name + ": entries must be non-negative");
    v.push_back(x);
  }
  if (v.empty() || text.back() == ',') throw UsageError("--" + name + ": expected e.g. 1,4,4");
  if (!std::is_sorted(v.begin(), v.end())) {
    std::sort(v.begin(), v.end());
    err << "notice: sorted --" << name << " to " << to_string(v) << '\n';
  }
  return ExponentVector(std::move(v));
}

Rational parse_kappa(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--kappa: ") + e.what());
  }
}

Integer parse_int_flag(const std::string& name, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": '" + text + "' is not an integer");
  }
}

Json vec_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

Json rational_vec_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

std::string point_str(const RationalVector& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + pretty_rational(p[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------

struct CensusArgs {
  std::string a, kappa, cap;
  std::size_t s = 0;
  bool infinity = false, as_json = false, no_prune = false;
};

int do_census(const CensusArgs& args, std::ostream& out, std::ostream& err) {
  ExponentVector a = parse_vector("a", args.a, err);
  std::optional<Integer> cap;
  if (!args.cap.empty()) cap = parse_int_flag("cap", args.cap);
  std::optional<Rational> kappa;
  if (!args.kappa.empty()) kappa = parse_kappa(args.kappa);
  if (args.s == 1 && cap && kappa && Rational(*cap) < *kappa + Rational(args.s)) {
    throw DomainError(ErrorCode::CapRequired, "cap must be at least kappa + s");
  }

  equiv::ClassOptions opts;
  opts.sigma2_pruning = !args.no_prune;
  census::CensusResult res = census::census(a, args.s, cap, opts);
  census::StepReport step = census::verify_step_structure(res);
  const Integer K_a = equiv::k_min(a, args.s);
  const bool fano = census::is_fano(a, args.s);

  if (args.as_json) {
    Json j;
    j["r"] = res.r;
    j["s"] = res.s;
    j["a"] = vec_json(a.entries());
    j["K_a"] = integer_to_json(K_a);
    j["fano"] = fano;
    j["complete"] = res.cls.complete;
    j["bound"] = res.cls.bound_used;
    Json members = Json::array();
    for (const auto& m : res.cls.members) {
      members.push_back({{"b", vec_json(m.b.entries())},
                         {"C", integer_to_json(m.C)},
                         {"K", integer_to_json(equiv::k_min(m.b, args.s))}});
    }
    j["members"] = members;
    Json bps = Json::array();
    std::size_t running = 0;
    for (const auto& bp : res.breakpoints) {
      Json nm = Json::array();
      for (const auto& b : bp.new_members) nm.push_back(vec_json(b.entries()));
      running += bp.new_members.size();
      bps.push_back({{"K", integer_to_json(bp.K)}, {"new_members", nm}, {"N_above", running}});
    }
    j["breakpoints"] = bps;
    j["stable_count"] = std::holds_alternative<census::Infinite>(res.stable_count)
                            ? Json("infinity")
                            : Json(std::get<std::size_t>(res.stable_count));
    if (res.stabilization_threshold) {
      j["stabilization_threshold"] = format_rational(*res.stabilization_threshold);
    }
    j["step_structure"] = {{"pass", step.pass},
                           {"K_M", integer_to_json(step.k_m)},
                           {"violations", step.violations}};
    if (kappa) {
      j["kappa"] = format_rational(*kappa);
      j["N"] = res.count(*kappa);
      j["monotone"] = census::is_monotone(*kappa);
    }
    out << j.dump(2) << '\n';
    return 0;
  }

  out << "a = " << a.str() << "   r = " << res.r << ", s = " << res.s << "   K_a(s) = " << K_a
      << "   Fano: " << (fano ? "yes" : "no") << '\n';
  out << "deformation class (" << (res.cls.complete ? "complete" : "capped") << "; "
      << res.cls.bound_used << "):\n";
  for (const auto& m : res.cls.members) {
    out << "  " << m.b.str() << "  C = " << m.C << "  K = " << equiv::k_min(m.b, args.s) << '\n';
  }
  out << "N(a; kappa) =\n";
  std::size_t running = 0;
  std::string prev;
  for (const auto& bp : res.breakpoints) {
    out << "  " << running << "  if " << (prev.empty() ? "" : prev + " < ") << "kappa <= " << bp.K
        << '\n';
    running += bp.new_members.size();
    prev = bp.K.str();
  }
  out << "  " << running << "  if " << prev << " < kappa" << (res.cls.complete ? "" : " (up to cap)")
      << '\n';
  out << "N(a; infinity) = " << census::to_string(res.stable_count);
  if (res.stabilization_threshold) {
    out << "  (reached for kappa > " << pretty_rational(*res.stabilization_threshold) << ")";
  }
  out << '\n';
  out << "step structure: " << (step.pass ? "pass" : "FAIL") << " (K_M = " << step.k_m
      << ", jumps on K_M + l*" << res.r + 1 << ")\n";
  for (const auto& v : step.violations) out << "  " << v << '\n';
  if (kappa) {
    out << "N(a; " << pretty_rational(*kappa) << ") = " << res.count(*kappa)
        << "   monotone: " << (census::is_monotone(*kappa) ? "yes" : "no") << '\n';
  }
  return 0;
}

struct EquivArgs {
  std::string a, b;
  std::size_t s = 0;
  bool as_json = false;
};

int do_equiv(const EquivArgs& args, std::ostream& out, std::ostream& err) {
  ExponentVector a = parse_vector("a", args.a, err);
  ExponentVector b = parse_vector("b", args.b, err);
  auto C = equiv::find_shift(a, b, args.s);
  if (args.as_json) {
    Json j{{"a", vec_json(a.entries())}, {"b", vec_json(b.entries())}, {"s", args.s},
           {"equivalent", C.has_value()}};
    if (C) j["C"] = integer_to_json(*C);
    out << j.dump(2) << '\n';
  } else if (C) {
    out << "C = " << *C << '\n';
  } else {
    out << "inequivalent\n";
  }
  return 0;
}

struct PolytopeArgs {
  std::string a, kappa, out_path;
  std::size_t s = 0;
  bool as_json = false;
};

int do_polytope(const PolytopeArgs& args, std::ostream& out, std::ostream& err) {
  ExponentVector a = parse_vector("a", args.a, err);
  BundleTuple t(a, args.s, parse_kappa(args.kappa));
  DelzantPolytope p = polytope::build(t);
  VertexSet vs = polytope::vertices(p);
  DelzantCheck check = polytope::is_delzant(p);
  Rational exact = polytope::exact_volume(t);
  Rational nominal = polytope::nominal_volume(t.r(), t.s(), t.kappa());
  RationalVector fp = polytope::fiber_fingerprint(t);
  if (!args.out_path.empty()) pj::write_polytope(args.out_path, p);

  if (args.as_json) {
    Json j = pj::to_json(p);
    Json verts = Json::array();
    for (const auto& v : vs) verts.push_back({{"point", rational_vec_json(v.point)}, {"active", v.active}});
    j["vertices"] = verts;
    j["is_delzant"] = check.ok;
    j["diagnostic"] = check.diagnostic;
    j["exact_volume"] = format_rational(exact);
    j["nominal_volume"] = format_rational(nominal);
    j["fiber_fingerprint"] = rational_vec_json(fp);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "polytope of " << t.str() << "\n";
  out << "facets (<x, eta> <= kappa_i):\n";
  for (const auto& f : p.facets) out << "  " << to_string(f.conormal) << " <= " << pretty_rational(f.constant) << '\n';
  out << "vertices (" << vs.size() << "):\n";
  for (const auto& v : vs) out << "  " << point_str(v.point) << '\n';
  out << "Delzant: " << (check.ok ? "yes" : "no") << " (" << check.diagnostic << ")\n";
  out << "exact volume:   " << pretty_rational(exact) << '\n';
  out << "nominal volume: " << pretty_rational(nominal) << '\n';
  out << "fiber fingerprint: " << point_str(fp) << '\n';
  if (!args.out_path.empty()) out << "wrote " << args.out_path << '\n';
  return 0;
}

int do_recognize(const std::string& path, bool as_json, std::ostream& out) {
  DelzantPolytope p;
  try {
    p = pj::read_polytope(path);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  std::vector<Presentation> found = polytope::recognize(p);
  if (as_json) {
    Json arr = Json::array();
    for (const auto& pr : found) {
      Json rows = Json::array();
      for (const auto& row : pr.map.matrix) rows.push_back(vec_json(row));
      arr.push_back({{"r", pr.tuple.r()},
                     {"s", pr.tuple.s()},
                     {"a", vec_json(pr.tuple.a().entries())},
                     {"kappa", format_rational(pr.tuple.kappa())},
                     {"map",
                      {{"matrix", rows},
                       {"translation", rational_vec_json(pr.map.translation)},
                       {"scale", format_rational(pr.map.scale)}}}});
    }
    out << Json{{"presentations", arr}}.dump(2) << '\n';
    return 0;
  }
  for (const auto& pr : found) {
    out << pr.tuple.str();
    if (pr.map.scale != 1) out << "  (after rescaling by " << pretty_rational(pr.map.scale) << ")";
    out << '\n';
  }
  return 0;
}

int do_moves(const std::string& a_text, const std::string& b_text, bool as_json, std::ostream& out,
             std::ostream& err) {
  ExponentVector a = parse_vector("a", a_text, err);
  ExponentVector b = parse_vector("b", b_text, err);
  moves::MovePath path = moves::move_path(a, b);
  std::vector<std::string> names;
  for (const auto& m : path.steps) names.push_back(moves::to_string(m));
  if (as_json) {
    Json j{{"start", vec_json(path.start)},
           {"end", vec_json(path.end)},
           {"steps", names},
           {"stage_threshold", integer_to_json(path.stage_threshold)}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << to_string(path.start) << " -> " << to_string(path.end) << " in " << names.size()
      << " moves:\n ";
  for (const auto& n : names) out << ' ' << n;
  out << "\nevery stage is realizable for kappa > " << path.stage_threshold << '\n';
  return 0;
}

int do_hirzebruch(const std::string& a_text, const std::string& b_text, bool as_json,
                  std::ostream& out) {
  Integer a = parse_int_flag("a", a_text);
  Integer b = parse_int_flag("b", b_text);
  if (a < 0 || b < 0) throw UsageError("Hirzebruch indices must be non-negative");
  bool eq = moves::hirzebruch_equiv(a, b);
  if (as_json) {
    out << Json{{"a", integer_to_json(a)}, {"b", integer_to_json(b)}, {"equivalent", eq}}.dump(2)
        << '\n';
  } else {
    out << "H_" << a << (eq ? " ~ " : " !~ ") << "H_" << b << "  (b - a " << (eq ? "even" : "odd")
        << ")\n";
  }
  return 0;
}

struct FamilyArgs {
  std::size_t k = 0;
  std::string c = "2";
  std::string strategy = "greedy";
  std::size_t lift = 0;
};

int do_family(const FamilyArgs& args, std::ostream& out) {
  families::Strategy strategy;
  try {
    strategy = families::parse_strategy(args.strategy);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  families::FamilyCertificate cert = families::generate_family(args.k, parse_int_flag("c", args.c), strategy);
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) {
    witnesses.push_back({{"n", integer_to_json(w.n)},
                         {"N", integer_to_json(w.N)},
                         {"x", integer_to_json(w.x)},
                         {"C", integer_to_json(w.C)},
                         {"b", vec_json(w.b.entries())}});
  }
  Json j{{"k", cert.k},
         {"c", integer_to_json(cert.c)},
         {"strategy", families::to_string(cert.strategy)},
         {"n_seq", vec_json(cert.n_seq)},
         {"moduli", vec_json(cert.moduli)},
         {"K", integer_to_json(cert.K)},
         {"residue_steps", integer_to_json(cert.residue_steps)},
         {"a", vec_json(cert.a.entries())},
         {"witnesses", witnesses}};
  if (args.lift > 0) {
    Json vs = Json::array();
    for (const auto& v : families::lift_class(cert, args.lift)) vs.push_back(vec_json(v.entries()));
    j["lift"] = {{"l", args.lift}, {"r", args.lift + 2}, {"vectors", vs}};
  }
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric CP^r bundles over CP^s: equivalence, census, polytopes, moves, families",
               "toric-bundles"};
  app.require_subcommand(1);

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "deformation class and counting function N(a; kappa)");
  census_cmd->add_option("--a", census_args.a, "exponent vector, e.g. 1,4,4")->required();
  census_cmd->add_option("--s", census_args.s, "base dimension s")->required()->check(CLI::PositiveNumber);
  auto* kappa_opt = census_cmd->add_option("--kappa", census_args.kappa, "evaluate N at kappa (p/q)");
  auto* inf_flag = census_cmd->add_flag("--infinity", census_args.infinity, "report N(a; infinity)");
  kappa_opt->excludes(inf_flag);
  census_cmd->add_option("--cap", census_args.cap, "cap on sigma_1(b), required for s = 1");
  census_cmd->add_flag("--json", census_args.as_json, "machine-readable output");
  census_cmd->add_flag("--no-prune", census_args.no_prune, "disable the sigma_2 cut-off");

  EquivArgs equiv_args;
  auto* equiv_cmd = app.add_subcommand("equiv", "decide deformation equivalence of two tuples");
  equiv_cmd->add_option("--a", equiv_args.a)->required();
  equiv_cmd->add_option("--b", equiv_args.b)->required();
  equiv_cmd->add_option("--s", equiv_args.s)->required()->check(CLI::PositiveNumber);
  equiv_cmd->add_flag("--json", equiv_args.as_json);

  PolytopeArgs poly_args;
  auto* poly_cmd = app.add_subcommand("polytope", "build and measure the bundle polytope");
  poly_cmd->add_option("--a", poly_args.a)->required();
  poly_cmd->add_option("--s", poly_args.s)->required()->check(CLI::PositiveNumber);
  poly_cmd->add_option("--kappa", poly_args.kappa)->required();
  poly_cmd->add_option("--out", poly_args.out_path, "write the polytope as JSON");
  poly_cmd->add_flag("--json", poly_args.as_json);

  std::string in_path;
  bool recognize_json = false;
  auto* rec_cmd = app.add_subcommand("recognize", "read a polytope JSON file and find its bundle tuples");
  rec_cmd->add_option("--in", in_path)->required();
  rec_cmd->add_flag("--json", recognize_json);

  std::string moves_a, moves_b;
  bool moves_json = false;
  auto* moves_cmd = app.add_subcommand("moves", "elementary move path over CP^1");
  moves_cmd->add_option("--a", moves_a)->required();
  moves_cmd->add_option("--b", moves_b)->required();
  moves_cmd->add_flag("--json", moves_json);

  std::string hz_a, hz_b;
  bool hz_json = false;
  auto* hz_cmd = app.add_subcommand("hirzebruch", "parity test for Hirzebruch surfaces");
  hz_cmd->add_option("--a", hz_a)->required();
  hz_cmd->add_option("--b", hz_b)->required();
  hz_cmd->add_flag("--json", hz_json);

  FamilyArgs fam_args;
  bool fam_json = false;
  auto* fam_cmd = app.add_subcommand("family", "certified r = s = 2 family with k toric structures");
  fam_cmd->add_option("--k", fam_args.k)->required()->check(CLI::Range(2, 64));
  fam_cmd->add_option("--c", fam_args.c, "difference c >= 2 (default 2)");
  fam_cmd->add_option("--strategy", fam_args.strategy, "greedy|factorial");
  fam_cmd->add_option("--lift", fam_args.lift, "also lift the class to r = 2 + L");
  fam_cmd->add_flag("--json", fam_json, "accepted for symmetry; output is always JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (census_cmd->parsed()) return do_census(census_args, out, err);
    if (equiv_cmd->parsed()) return do_equiv(equiv_args, out, err);
    if (poly_cmd->parsed()) return do_polytope(poly_args, out, err);
    if (rec_cmd->parsed()) return do_recognize(in_path, recognize_json, out);
    if (moves_cmd->parsed()) return do_moves(moves_a, moves_b, moves_json, out, err);
    if (hz_cmd->parsed()) return do_hirzebruch(hz_a, hz_b, hz_json, out);
    if (fam_cmd->parsed()) return do_family(fam_args, out);
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"toric-bundles"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace toric::cli
