#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "monalg/closure.hpp"
#include "monalg/codes.hpp"
#include "monalg/errors.hpp"
#include "monalg/graphs.hpp"
#include "monalg/invariants.hpp"
#include "monalg/io.hpp"
#include "monalg/matrix.hpp"
#include "monalg/symbolic.hpp"

namespace monalg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::size_t budget_points = Budget{}.max_points;
  std::size_t budget_cycles = Budget{}.max_cycles;
  int degree_cap = Budget{}.degree_cap;
  std::string method = "both";
  std::string out;
  // command specific
  int n = 1;
  std::string r_range = "1";
  std::size_t degree = 1;
  std::size_t r = 1;
  bool loops = false;
  bool points = false;
  std::vector<std::size_t> veronese;
  std::int64_t canonical_cap = 0;

  Budget budget() const {
    Budget b;
    b.max_points = budget_points;
    b.max_cycles = budget_cycles;
    b.degree_cap = degree_cap;
    return b;
  }
};

json number(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

json rational(const Rational& q) { return to_string(q); }

json rationals(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational(x));
  return a;
}

json integers(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(number(x));
  return a;
}

json exponent_list(const std::vector<ExponentVector>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.to_string());
  return a;
}

json vertices_1based(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x + 1);
  return a;
}

std::string int_vector_text(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

// A report under construction. Sections that hit a precondition become null
// with a note; sections that hit the budget also mark the report partial.
struct Report {
  json results = json::object();
  json notes = json::object();
  bool partial = false;

  void attempt(const std::string& key, const std::function<json()>& compute) {
    try {
      results[key] = compute();
    } catch (const BudgetExceeded& e) {
      results[key] = nullptr;
      notes[key] = std::string("budget exceeded: ") + e.what();
      partial = true;
    } catch (const PreconditionError& e) {
      results[key] = nullptr;
      notes[key] = std::string("not applicable: ") + e.what();
    }
  }
};

json cycle_json(const CycleRecord& c) { return vertices_1based(c.vertices); }

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw PreconditionError("range must look like 3 or 1..6, got \"" + text + "\"");
  }
}

NormalityMethod method_of(const std::string& m) {
  if (m == "hilbert") return NormalityMethod::hilbert;
  if (m == "powers") return NormalityMethod::powers;
  return NormalityMethod::both;
}

json ideal_input(const MonomialIdeal& I) { return json{{"format", "ideal"}, {"text", I.to_text()}}; }

// ---- commands ----

void cmd_normality(const Options& o, json& input, Report& rep) {
  auto I = parse_ideal(read_file(o.input));
  input = ideal_input(I);
  auto v = is_normal(I, method_of(o.method), o.budget());
  auto& r = rep.results;
  r["normal"] = v.normal;
  r["method"] = v.method;
  r["hilbert_verdict"] = v.hilbert_verdict ? json(*v.hilbert_verdict) : json(nullptr);
  r["powers_verdict"] = v.powers_verdict ? json(*v.powers_verdict) : json(nullptr);
  json extra = json::array();
  for (const auto& h : v.hilbert_extra) extra.push_back(int_vector_text(h));
  r["hilbert_extra"] = extra;
  r["failing_power"] = v.failing_power ? json(*v.failing_power) : json(nullptr);
  r["witness"] = v.witness ? json(v.witness->to_string()) : json(nullptr);
  r["checked_powers"] = v.checked_powers;
  if (v.partial) {
    rep.partial = true;
    rep.notes["normality"] = v.budget_note;
  }
}

void cmd_closure(const Options& o, json& input, Report& rep) {
  auto I = parse_ideal(read_file(o.input));
  input = ideal_input(I);
  require(o.n >= 1, "--n must be at least 1");
  auto c = closure_of_power(I, o.n, o.budget());
  rep.results["n"] = o.n;
  rep.results["generators"] = exponent_list(c.generators());
  rep.results["equals_power"] = c == ideal_power(I, o.n);
}

void cmd_symbolic(const Options& o, json& input, Report& rep) {
  auto I = parse_ideal(read_file(o.input));
  input = ideal_input(I);
  require(o.n >= 1, "--n must be at least 1");
  auto p = symbolic_power(I, o.n, o.budget());
  rep.results["n"] = o.n;
  rep.results["generators"] = exponent_list(p.generators());
  rep.results["equals_power"] = p == ideal_power(I, o.n);
}

void cmd_resurgence(const Options& o, json& input, Report& rep) {
  auto I = parse_ideal(read_file(o.input));
  input = ideal_input(I);
  auto r = ic_resurgence(I);
  rep.results["rho_ic"] = rational(r.rho_ic);
  rep.results["u"] = rationals(r.u);
  rep.results["v"] = rationals(r.v);
  rep.results["ceiling"] = number(r.ceiling);
  rep.results["q_integral"] = r.q_integral;
  rep.results["dual_q_integral"] = r.dual_q_integral;
  rep.attempt("resurgence_one", [&] { return json(resurgence_one_test(I, o.budget())); });
}

void cmd_containment(const Options& o, json& input, Report& rep) {
  auto I = parse_ideal(read_file(o.input));
  input = ideal_input(I);
  auto [lo, hi] = parse_range(o.r_range);
  require(lo >= 1 && lo <= hi, "--r range must satisfy 1 <= a <= b");
  json table = json::array();
  rep.results["table"] = table;
  for (int r = lo; r <= hi; ++r) {
    rep.attempt("f", [&] { return json(containment_function(I, r, o.budget())); });
    if (rep.results["f"].is_null()) break;
    rep.results["table"].push_back(json{{"r", r}, {"f", rep.results["f"]}});
  }
  rep.results.erase("f");
  if (rep.notes.contains("f")) {
    rep.notes["table"] = rep.notes["f"];
    rep.notes.erase("f");
  }
}

void cmd_graph(const Options& o, json& input, Report& rep) {
  auto g = parse_graph(read_file(o.input), o.loops);
  input = json{{"format", "graph"}, {"text", graph_to_text(g)}};
  const auto b = o.budget();
  auto& r = rep.results;
  r["vertices"] = g.num_vertices();
  r["edges"] = g.edges().size();
  r["loops"] = g.has_loops();
  r["connected"] = g.is_connected();
  r["bipartite"] = g.is_bipartite();
  rep.attempt("odd_girth", [&] {
    auto v = odd_girth(g);
    return v ? json(*v) : json(nullptr);
  });
  rep.attempt("simis_failure_degree", [&] {
    auto v = simis_failure_degree(g);
    return v ? json(*v) : json(nullptr);
  });
  rep.attempt("induced_odd_cycles", [&] {
    json a = json::array();
    for (const auto& c : induced_odd_cycles(g, b)) a.push_back(cycle_json(c));
    return a;
  });
  rep.attempt("hochster_configurations", [&] {
    json a = json::array();
    for (const auto& h : hochster_configurations(g, b))
      a.push_back(json{{"first", cycle_json(h.first)},
                       {"second", cycle_json(h.second)},
                       {"monomial", h.monomial(g.num_vertices()).to_string()},
                       {"z_degree", h.z_degree()}});
    return a;
  });
  rep.attempt("edge_ideal_normal", [&] { return json(edge_ideal_normal(g, b)); });
  rep.attempt("odd_cycle_condition", [&] { return json(odd_cycle_condition(g, b)); });
  rep.attempt("bowties", [&] {
    json a = json::array();
    for (const auto& w : bowties(g, b))
      a.push_back(json{{"first", cycle_json(w.first)},
                       {"second", cycle_json(w.second)},
                       {"path", vertices_1based(w.path)},
                       {"monomial", w.monomial(g.num_vertices()).to_string()}});
    return a;
  });
  rep.attempt("edge_subring_normal", [&] { return json(edge_subring_normal(g, b)); });
  rep.attempt("edge_subring_dimension", [&] { return json(edge_subring_dimension(g)); });
  rep.attempt("ehrhart_criterion", [&] {
    auto d = ehrhart_normality_criterion(g, b);
    json extra = json::array();
    for (const auto& e : d.ehrhart_extra) extra.push_back(int_vector_text(e));
    return json{{"normal", d.normal},
                {"ehrhart_ring_equal", d.ehrhart_ring_equal},
                {"component_condition", d.component_condition},
                {"ideal_normal", d.ideal_normal},
                {"nonbipartite_components", d.nonbipartite_components},
                {"delta_r", number(d.delta_r)},
                {"delta_r_formula", number(d.delta_r_formula)},
                {"ehrhart_extra", extra}};
  });
  rep.attempt("unmixed", [&] { return json(is_unmixed(g.clutter())); });
  rep.attempt("cohen_macaulay_bipartite", [&] { return json(cm_bipartite(g)); });
  rep.attempt("cohen_macaulay_tree", [&] { return json(cm_tree(g)); });
  rep.attempt("w2", [&] {
    auto w = w2_test(g);
    return json{{"w2", w.w2},
                {"dimension", w.dimension},
                {"v_number", w.v_number ? json(*w.v_number) : json(nullptr)}};
  });
}

void cmd_invariants(const Options& o, json& input, Report& rep) {
  const auto b = o.budget();
  if (!o.veronese.empty()) {
    require(o.veronese.size() == 2, "--veronese takes s and k");
    const auto s = o.veronese[0], k = o.veronese[1];
    input = json{{"format", "veronese"}, {"s", s}, {"k", k}};
    auto v = veronese_invariants(s, k);
    rep.results["squarefree"] = json{{"a", v.a_squarefree}, {"reg", v.reg_squarefree}};
    rep.results["veronese"] = json{{"a", v.a_veronese}, {"reg", v.reg_veronese}};
    if (o.canonical_cap > 0)
      rep.attempt("canonical_generators", [&] {
        return exponent_list(veronese_canonical_generators(s, k, o.canonical_cap, b));
      });
    return;
  }
  auto I = parse_ideal(read_file(o.input));
  input = ideal_input(I);
  rep.attempt("multiplicity", [&] {
    auto region = multiplicity_region(I);
    return json{{"e", number(multiplicity(I, b))},
                {"pure_powers", integers(region.pure_powers)},
                {"delta_volume", rational(region.delta_volume)},
                {"p0_volume", rational(region.p0_volume)},
                {"region_volume", rational(region.region_volume)}};
  });
  rep.attempt("normalization_hilbert_function", [&] {
    json values = json::array();
    for (int n = 0; n <= 3; ++n) values.push_back(number(normalization_hilbert_function(I, n, b)));
    return json{{"values_n0_to_3", values}, {"polynomial", rationals(normalization_hilbert_polynomial(I, b))}};
  });
  rep.attempt("subring_regularity", [&] {
    auto s = subring_regularity(I, b);
    return json{{"h_vector", integers(s.h_vector)},
                {"reg", s.regularity},
                {"rank", s.rank},
                {"a_invariant", s.a_invariant}};
  });
}

void cmd_mfull(const Options& o, json& input, Report& rep) {
  auto I = parse_ideal(read_file(o.input));
  input = ideal_input(I);
  rep.results["m_full"] = is_m_full_2var(I);
  rep.results["mu"] = I.num_generators();
  rep.results["order"] = ideal_order(I);
}

void cmd_cremona(const Options& o, json& input, Report& rep) {
  auto rows = parse_exponent_rows(read_file(o.input));
  std::string text;
  for (const auto& r : rows) text += r.to_string() + "\n";
  input = json{{"format", "monomials"}, {"text", text}};
  const bool cremona = is_cremona_monomial(rows);
  IntMatrix a(rows.size(), IntVector(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i) a[i][j] = rows[j][i];
  rep.results["cremona"] = cremona;
  rep.results["degree"] = rows.front().degree();
  rep.results["determinant"] = number(determinant(a));
}

void cmd_code_weights(const Options& o, json& input, Report& rep) {
  auto x = parse_point_set(read_file(o.input));
  input = json{{"format", "points"}, {"text", point_set_to_text(x)}};
    if (x.rescaled() > 0) rep.notes["input"] = std::to_string(x.rescaled()) + " points rescaled to a first non-zero entry of 1";
  const auto b = o.budget();
  auto code = build_code(x, o.degree);
  rep.results["degree"] = o.degree;
  rep.results["length"] = code.length;
  rep.results["dimension"] = code.dimension();
  rep.attempt("regularity_threshold", [&] { return json(regularity_threshold(x)); });
  rep.attempt("v_number", [&] { return json(v_number_points(x)); });
  json weights = json::array();
  for (std::size_t r = 1; r <= std::min(o.r, code.dimension()); ++r) {
    Report one;
    one.attempt("delta", [&] { return json(generalized_weight(code, r, b)); });
    one.attempt("gmd", [&] {
      auto g = gmd_and_vasconcelos(x, o.degree, r, b);
      return json{{"delta_I", g.gmd}, {"theta_I", g.vasconcelos}, {"family_empty", g.family_empty}};
    });
    if (!one.results["delta"].is_null() && !one.results["gmd"].is_null())
      check_consistency(one.results["delta"] == one.results["gmd"]["delta_I"] &&
                            one.results["delta"] == one.results["gmd"]["theta_I"],
                        "generalized weight disagrees with the gmd and Vasconcelos functions");
    json entry{{"r", r}};
    entry.update(one.results);
    weights.push_back(entry);
    if (one.partial) {
      rep.partial = true;
      rep.notes["weights"] = one.notes;
      break;
    }
  }
  rep.results["weights"] = weights;
}

void cmd_vnumber(const Options& o, json& input, Report& rep) {
  if (o.points) {
    auto x = parse_point_set(read_file(o.input));
    input = json{{"format", "points"}, {"text", point_set_to_text(x)}};
    if (x.rescaled() > 0) rep.notes["input"] = std::to_string(x.rescaled()) + " points rescaled to a first non-zero entry of 1";
    rep.results["v_number"] = v_number_points(x);
    return;
  }
  auto I = parse_ideal(read_file(o.input));
  input = ideal_input(I);
  require(o.degree_cap >= 0, "--degree-cap must be non-negative");
  rep.attempt("v_number", [&] {
    auto w = v_number_monomial(I, static_cast<std::size_t>(o.degree_cap));
    return json{{"v", w.degree}, {"witness", w.monomial.to_string()}, {"prime", exponent_list(w.prime.generators())}};
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomial algebra computations"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_input = true) {
    auto* in = sub->add_option("input", o.input, "input file");
    if (needs_input) in->required();
    sub->add_option("--budget-points", o.budget_points, "lattice point / candidate budget")->capture_default_str();
    sub->add_option("--budget-cycles", o.budget_cycles, "induced cycle budget")->capture_default_str();
    sub->add_option("--degree-cap", o.degree_cap, "v-number witness degree cap")->capture_default_str();
    sub->add_option("--method", o.method, "normality method")
        ->check(CLI::IsMember({"hilbert", "powers", "both"}))
        ->capture_default_str();
    sub->add_option("--out", o.out, "write the report to this file");
  };

  using Handler = void (*)(const Options&, json&, Report&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h, bool needs_input = true) {
    auto* sub = app.add_subcommand(name, help);
    common(sub, needs_input);
    commands.emplace_back(sub, h);
    return sub;
  };
  add("normality", "normality of the Rees algebra of a monomial ideal", cmd_normality);
  add("closure", "integral closure of I^n", cmd_closure)->add_option("--n", o.n, "power")->capture_default_str();
  add("symbolic", "symbolic power I^(n) of a squarefree ideal", cmd_symbolic)
      ->add_option("--n", o.n, "power")
      ->capture_default_str();
  add("resurgence", "ic-resurgence of a squarefree ideal", cmd_resurgence);
  add("containment", "containment function f(r) = min{n : I^(n) in I^r}", cmd_containment)
      ->add_option("--r", o.r_range, "r or a..b")
      ->capture_default_str();
  add("graph-analyze", "graph normality, cycles and Cohen-Macaulay tests", cmd_graph)
      ->add_flag("--loops", o.loops, "allow loops (multigraph mode)");
  auto* inv = add("invariants", "multiplicity, Hilbert function, subring regularity", cmd_invariants, false);
  inv->add_option("--veronese", o.veronese, "s k for the Veronese invariants")->expected(2);
  inv->add_option("--canonical-cap", o.canonical_cap, "degree cap for canonical generators (0 skips)")
      ->capture_default_str();
  add("mfull", "m-fullness of a zero-dimensional ideal in two variables", cmd_mfull);
  add("cremona", "monomial Cremona test", cmd_cremona);
  auto* cw = add("code-weights", "evaluation code parameters of a projective point set", cmd_code_weights);
  cw->add_option("--degree", o.degree, "code degree d")->capture_default_str();
  cw->add_option("--r", o.r, "largest generalized weight index")->capture_default_str();
  add("vnumber", "v-number of a monomial ideal or a point set", cmd_vnumber)
      ->add_flag("--points", o.points, "input is a point set");

  try {
    std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Handler handler = nullptr;
  std::string name;
  for (auto& [sub, h] : commands)
    if (sub->parsed()) {
      handler = h;
      name = sub->get_name();
    }

  json options{{"budget_points", o.budget_points},
               {"budget_cycles", o.budget_cycles},
               {"degree_cap", o.degree_cap},
               {"method", o.method}};
  json input;
  Report rep;
  int code = 0;
  try {
    if (name != "invariants" || o.veronese.empty()) require(!o.input.empty(), "an input file is required");
    handler(o, input, rep);
  } catch (const BudgetExceeded& e) {
    rep.partial = true;
    rep.notes["error"] = std::string("budget exceeded: ") + e.what();
    err << "budget exceeded: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 4;
  }
  if (rep.partial) code = 3;

  json report{{"command", name}, {"options", options}, {"input", input}, {"results", rep.results},
              {"partial", rep.partial}};
  if (!rep.notes.empty()) report["notes"] = rep.notes;
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return code;
}

}  // namespace monalg::cli
