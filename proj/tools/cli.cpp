#include "cli.hpp"

#include "omx/cw.hpp"
#include "omx/nps.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <unordered_set>

namespace omx::cli {

using json = nlohmann::ordered_json;

namespace {

std::string element_id(const json& j) {
  if (j.is_string())
    return j.get<std::string>();
  if (j.is_number_integer())
    return std::to_string(j.get<long long>());
  throw InputError("element ids must be strings or integers");
}

std::vector<Integer> integer_row(const json& j, const std::string& what) {
  if (!j.is_array())
    throw InputError(what + " must be an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) {
    if (x.is_number_integer())
      out.emplace_back(x.get<long long>());
    else if (x.is_string())
      out.emplace_back(x.get<std::string>());  // arbitrary precision
    else
      throw InputError(what + " must contain integers");
  }
  return out;
}

const json& field_of(const json& j, const char* key) {
  if (!j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

LoadedInput parse_input(const json& j, const std::string& fallback_name) {
  if (!j.is_object())
    throw InputError("input must be a JSON object");
  LoadedInput in;
  in.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : fallback_name;
  if (j.contains("vectors")) {
    Arrangement a;
    a.name = in.name;
    const auto& dim = field_of(j, "dimension");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
      throw InputError("\"dimension\" must be a positive integer");
    a.dimension = dim.get<std::size_t>();
    const auto& vectors = field_of(j, "vectors");
    if (!vectors.is_array())
      throw InputError("\"vectors\" must be an array");
    for (const auto& v : vectors)
      a.vectors.push_back(integer_row(v, "each vector"));
    a.g = integer_row(field_of(j, "g"), "\"g\"");
    try {
      a.validate();
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    in.elements = a.element_names();
    in.g = a.vectors.size();
    in.arrangement = std::move(a);
    return in;
  }
  if (j.contains("cocircuits")) {
    const auto& elements = field_of(j, "elements");
    if (!elements.is_array() || elements.empty())
      throw InputError("\"elements\" must be a nonempty array");
    for (const auto& e : elements)
      in.elements.push_back(element_id(e));
    {
      std::unordered_set<std::string> unique(in.elements.begin(), in.elements.end());
      if (unique.size() != in.elements.size())
        throw InputError("element ids must be distinct");
    }
    if (in.elements.size() > SignVector::max_size)
      throw InputError("too many elements");
    if (j.contains("g")) {
      const std::string g = element_id(j["g"]);
      const auto it = std::find(in.elements.begin(), in.elements.end(), g);
      if (it == in.elements.end())
        throw InputError("g names no element");
      in.g = static_cast<std::size_t>(it - in.elements.begin());
    }
    const auto& cc = field_of(j, "cocircuits");
    if (!cc.is_array())
      throw InputError("\"cocircuits\" must be an array of sign strings");
    for (const auto& s : cc) {
      if (!s.is_string())
        throw InputError("\"cocircuits\" must be an array of sign strings");
      SignVector v;
      try {
        v = SignVector::parse(s.get<std::string>());
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      if (v.size() != in.elements.size())
        throw InputError("sign string '" + s.get<std::string>() + "' does not match the element count");
      in.cocircuits.push_back(v);
    }
    return in;
  }
  throw InputError("input is neither an arrangement (\"vectors\") nor an oriented matroid (\"cocircuits\")");
}

LoadedInput load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw InputError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.rfind(".json"));
  return parse_input(j, stem);
}

OrientedMatroid load_om(const LoadedInput& in) {
  try {
    if (in.arrangement)
      return om_from_vectors(*in.arrangement, true).om();
    return OrientedMatroid::from_cocircuits(in.elements, in.cocircuits, true);
  } catch (const InvalidOrientedMatroid& e) {
    throw InputError(std::string("not an oriented matroid: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

AffineOM load_affine(const LoadedInput& in, bool allow_loop_g) {
  if (!in.g)
    throw InputError("input declares no g");
  try {
    if (in.arrangement)
      return om_from_vectors(*in.arrangement, allow_loop_g);
    return AffineOM(load_om(in), *in.g, allow_loop_g);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json om_json(const std::string& name, const OrientedMatroid& m, std::optional<std::size_t> g) {
  json j;
  j["name"] = name;
  j["elements"] = m.names();
  if (g)
    j["g"] = m.names()[*g];
  json cc = json::array();
  for (const auto& c : m.cocircuits())
    cc.push_back(c.str());
  j["cocircuits"] = std::move(cc);
  return j;
}

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string field;
  bool allow_loop_g = false;
  std::uint64_t seed = 0;
  unsigned parallel = 1;
};

std::vector<Field> fields_of(const Options& o) {
  if (o.field.empty() || o.field == "all")
    return standard_fields();
  try {
    return {parse_field(o.field)};
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

json groups_json(const std::vector<AbelianGroup>& groups) {
  json out = json::array();
  for (const auto& g : groups)
    out.push_back(g.str());
  return out;
}

json face_json(const VariableSet& vars, Face f) { return vars.format(Monomial(f)); }

struct Result {
  json body;
  bool failed = false;
};

/// Random integer points of the ambient space; each sign vector must be a
/// covector.
json sampling_check(const Arrangement& a, const OrientedMatroid& m, std::uint64_t seed, bool& ok) {
  std::mt19937_64 rng(seed);
  constexpr int points = 64;
  int bad = 0;
  for (int k = 0; k < points; ++k) {
    std::vector<Rational> p;
    for (std::size_t j = 0; j < a.dimension; ++j)
      p.emplace_back(static_cast<long long>(rng() % 11) - 5);
    if (!m.contains(sign_vector_of_point(a, p)))
      ++bad;
  }
  ok = bad == 0;
  json j;
  j["seed"] = seed;
  j["points"] = points;
  j["ok"] = ok;
  return j;
}

Result cmd_build_om(const Options& o) {
  const auto in = load_input(o.input);
  if (in.arrangement && in.g && !o.allow_loop_g) {
    const auto& g = in.arrangement->g;
    if (std::all_of(g.begin(), g.end(), [](const Integer& x) { return x == 0; }))
      throw InputError("g is the zero vector (a loop); pass --allow-loop-g to allow it");
  }
  const auto m = load_om(in);
  return {om_json(in.name, m, in.g)};
}

Result cmd_check_axioms(const Options& o) {
  const auto in = load_input(o.input);
  std::vector<SignVector> cocircuit_list;
  if (in.arrangement)
    cocircuit_list = arrangement_cocircuits(*in.arrangement);
  else
    cocircuit_list = in.cocircuits;
  std::sort(cocircuit_list.begin(), cocircuit_list.end());
  cocircuit_list.erase(std::unique(cocircuit_list.begin(), cocircuit_list.end()), cocircuit_list.end());
  const auto covectors = span_from_cocircuits(cocircuit_list, false);
  const auto verdict = check_covector_axioms(covectors);
  auto again = cocircuits(covectors);
  std::sort(again.begin(), again.end());
  const bool round_trip = again == cocircuit_list;

  Result r;
  r.body["input"] = in.name;
  r.body["elements"] = in.elements;
  r.body["cocircuits"] = cocircuit_list.size();
  r.body["covectors"] = covectors.size();
  json ax;
  ax["ok"] = verdict.ok;
  if (!verdict.ok)
    ax["failure"] = verdict.describe();
  r.body["axioms"] = std::move(ax);
  r.body["cocircuit_round_trip"] = round_trip;
  r.failed = !verdict.ok || !round_trip;
  if (verdict.ok) {
    r.body["rank"] = chain_rank(covectors);
    if (in.arrangement) {
      bool ok = true;
      r.body["sampling"] = sampling_check(*in.arrangement, load_om(in), o.seed, ok);
      r.failed = r.failed || !ok;
    }
  }
  return r;
}

Result cmd_ideal(const Options& o) {
  const auto in = load_input(o.input);
  const auto m = load_affine(in, o.allow_loop_g);
  const auto ideal = matroid_ideal(m);
  const auto reg = regularity_precondition_check(ideal);
  Result r;
  r.body["input"] = in.name;
  r.body["ideal"] = ideal.formatted();
  r.body["specialized"] = specialize(ideal).formatted();
  json rj;
  rj["no_xy_generator"] = reg.no_xy_generator;
  rj["primes_avoid_pairs"] = reg.primes_avoid_pairs;
  if (reg.witness)
    rj["witness"] = ideal.vars.format(*reg.witness);
  r.body["regularity"] = std::move(rj);
  r.failed = !reg.ok();
  return r;
}

LabeledResolution resolution_or_input_error(const AffineOM& m) {
  if (bounded_complex(m).empty())
    throw InputError("the bounded complex is empty (g is a loop or a coloop)");
  return cellular_resolution(m);
}

Result cmd_resolution(const Options& o) {
  const auto in = load_input(o.input);
  const auto m = load_affine(in, o.allow_loop_g);
  const auto res = resolution_or_input_error(m);
  const auto st = strata(bounded_complex(m), m.om().covectors());
  const auto faithful = check_faithful(res.complex);
  Result r;
  r.body["input"] = in.name;
  r.body["ideal"] = res.ideal.formatted();
  r.body["betti"] = res.betti;
  r.body["faithful"] = faithful.faithful;
  json acyclic = json::object();
  bool all_acyclic = true;
  for (const auto& f : fields_of(o)) {
    const bool ok = check_acyclic(res.complex, f, o.parallel).ok;
    acyclic[f.name()] = ok;
    all_acyclic = all_acyclic && ok;
  }
  r.body["acyclic"] = std::move(acyclic);
  r.body["topes"] = st.topes.size();
  r.body["subtopes"] = st.subtopes.size();
  r.body["boundary_cells"] = st.boundary.size();
  r.failed = !faithful.faithful || !all_acyclic;
  return r;
}

Result cmd_cm(const Options& o) {
  const auto in = load_input(o.input);
  const auto m = load_affine(in, o.allow_loop_g);
  const auto res = resolution_or_input_error(m);
  const auto ideal = matroid_ideal(m);
  const auto delta = complex_from_ideal(ideal);
  const auto delta_bar = complex_from_ideal(specialize(ideal));
  std::optional<SimplicialComplex> subdivision;
  if (res.complex.size() - 1 <= 64)
    subdivision = barycentric_pair(res.complex, 1).whole;
  Result r;
  r.body["input"] = in.name;
  json rows = json::array();
  bool ring = true, bar = true;
  for (const auto& f : fields_of(o)) {
    json row;
    row["field"] = f.name();
    const bool cellular = is_cm_cellular(res.complex, f, o.parallel).ok;
    const bool reisner = is_cm_reisner(delta, f, o.parallel);
    const bool reisner_bar = is_cm_reisner(delta_bar, f, o.parallel);
    row["cellular"] = cellular;
    row["reisner"] = reisner;
    row["reisner_specialized"] = reisner_bar;
    if (subdivision)
      row["bounded_complex"] = is_cm_reisner(*subdivision, f, o.parallel);
    else
      row["bounded_complex"] = nullptr;
    if (cellular != reisner || reisner != reisner_bar)
      r.failed = true;
    ring = ring && cellular && reisner;
    bar = bar && reisner_bar;
    rows.push_back(std::move(row));
  }
  r.body["fields"] = std::move(rows);
  r.body["ring_cm"] = ring;
  r.body["specialized_cm"] = bar;
  return r;
}

json genpos_json(const GenposReport& g) {
  json j;
  j["c1"] = g.general_position;
  j["c2"] = g.ring_cm;
  j["c3"] = g.specialized_cm;
  j["c4"] = g.matroid_circuits;
  j["c5"] = g.circuit_equality;
  j["dims"] = {g.expected_dim, g.expected_dim_bar};
  j["krull_dims"] = {g.krull_dim, g.krull_dim_bar};
  return j;
}

// Elements outside every bounded support. Their x and y never occur in O_M,
// so the ring is a polynomial extension in them.
json free_elements(const AffineOM& m) {
  json j = json::array();
  for (std::size_t e : (full_rank_info(m).uncovered - ElementSet{m.g()}).elements())
    j.push_back(m.om().names()[e]);
  return j;
}

GenposReport genpos_or_input_error(const AffineOM& m, const Options& o) {
  if (m.g_is_loop() || m.g_is_coloop())
    throw InputError("general position needs g to be neither a loop nor a coloop");
  const auto fields = fields_of(o);
  return genpos_report(m, fields, o.parallel);
}

Result cmd_genpos(const Options& o) {
  const auto in = load_input(o.input);
  const auto m = load_affine(in, o.allow_loop_g);
  const auto g = genpos_or_input_error(m, o);
  Result r;
  r.body["input"] = in.name;
  r.body["rank"] = g.rank;
  r.body["full_rank"] = g.full_rank;
  r.body["free_elements"] = free_elements(m);
  r.body["genpos"] = genpos_json(g);
  r.body["witnesses"] = g.witnesses;
  r.body["findings"] = g.findings;
  r.failed = !g.findings.empty();
  return r;
}

json manifold_json(const AffineOM& m, const ManifoldReport& mr) {
  const auto vars = ring_variables(m);
  json cells = json::array();
  for (const auto& c : mr.cells) {
    json row;
    row["covector"] = c.covector.str();
    row["dim"] = c.dim;
    row["cohomology"] = groups_json(c.groups);
    row["interior"] = c.interior_pattern;
    row["boundary"] = c.combinatorial_boundary;
    cells.push_back(std::move(row));
  }
  json j;
  j["cells"] = std::move(cells);
  j["boundary_match"] = mr.boundary_match;
  j["delta_manifold"] = mr.delta_manifold;
  if (mr.delta_witness)
    j["delta_witness"] = face_json(vars, *mr.delta_witness);
  j["boundary_sphere"] = mr.delta_boundary_sphere;
  if (mr.sphere_witness)
    j["sphere_witness"] = face_json(vars, *mr.sphere_witness);
  j["boundary_x_manifold"] = mr.boundary_x_manifold;
  j["boundary_x_sphere"] = mr.boundary_x_sphere;
  j["asserted"] = mr.asserted;
  return j;
}

Result cmd_manifold(const Options& o) {
  const auto in = load_input(o.input);
  const auto m = load_affine(in, o.allow_loop_g);
  resolution_or_input_error(m);
  const auto mr = manifold_report(m, o.parallel);
  const Field field = fields_of(o).front();
  const auto table = canonical_degree_table(m, field, o.parallel);
  Result r;
  r.body["input"] = in.name;
  r.body["manifold"] = manifold_json(m, mr);
  json cj;
  cj["field"] = field.name();
  cj["ideal"] = canonical_ideal(m).formatted();
  cj["faces"] = table.rows.size();
  cj["degrees_match"] = table.degrees_match;
  cj["facets_member"] = table.facets_member;
  cj["boundary_in_ideal"] = table.boundary_in_ideal;
  cj["outside_in_ideal"] = table.outside_in_ideal;
  r.body["canonical"] = std::move(cj);
  std::vector<std::string> findings;
  if (mr.asserted) {
    findings = mr.findings;
    findings.insert(findings.end(), table.findings.begin(), table.findings.end());
  }
  r.body["findings"] = findings;
  r.failed = !findings.empty();
  return r;
}

Result cmd_report(const Options& o) {
  const auto in = load_input(o.input);
  const auto m = load_affine(in, o.allow_loop_g);
  const auto res = resolution_or_input_error(m);
  const auto g = genpos_or_input_error(m, o);
  const auto mr = manifold_report(m, o.parallel);
  std::vector<std::string> findings = g.findings;
  const auto faithful = check_faithful(res.complex);
  if (!faithful.faithful)
    findings.push_back("resolution is not faithful: " + faithful.reason);
  for (const auto& f : fields_of(o))
    if (!check_acyclic(res.complex, f, o.parallel).ok)
      findings.push_back("resolution is not acyclic over " + f.name());
  if (mr.asserted)
    findings.insert(findings.end(), mr.findings.begin(), mr.findings.end());
  Result r;
  r.body["input"] = in.name;
  r.body["rank"] = g.rank;
  r.body["full_rank"] = g.full_rank;
  r.body["free_elements"] = free_elements(m);
  r.body["ideal"] = res.ideal.formatted();
  r.body["betti"] = res.betti;
  r.body["genpos"] = genpos_json(g);
  json mj = manifold_json(m, mr);
  json manifold;
  manifold["cells"] = mj["cells"];
  manifold["delta_manifold"] = mj["delta_manifold"];
  manifold["boundary_sphere"] = mj["boundary_sphere"];
  r.body["manifold"] = std::move(manifold);
  r.body["findings"] = findings;
  r.failed = !findings.empty();
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oriented matroid ideals: build, resolve and test Cohen-Macaulayness", "omx"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, std::pair<std::string, std::function<Result(const Options&)>>> verbs{
      {"build-om", {"convert an arrangement into oriented matroid JSON", cmd_build_om}},
      {"check-axioms", {"verify the covector axioms and the cocircuit round trip", cmd_check_axioms}},
      {"ideal", {"matroid ideal and its specialization", cmd_ideal}},
      {"resolution", {"cellular resolution on the bounded complex", cmd_resolution}},
      {"cm", {"Cohen-Macaulay tests over the chosen fields", cmd_cm}},
      {"genpos", {"the five general position conditions", cmd_genpos}},
      {"manifold", {"local cohomology, manifold and canonical ideal diagnostics", cmd_manifold}},
      {"report", {"full report", cmd_report}},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [verb, entry] : verbs) {
    auto* sub = app.add_subcommand(verb, entry.first);
    sub->add_option("input", o.input, "arrangement or oriented matroid JSON file")->required();
    sub->add_option("-o,--output", o.output, "write JSON here instead of standard output");
    sub->add_option("--field", o.field, "Q, a prime p, or all (default: Q, F2, F3, F5)");
    sub->add_flag("--allow-loop-g", o.allow_loop_g, "accept g as a loop");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_option("--parallel", o.parallel, "worker threads")->check(CLI::Range(1u, 256u));
    subs[verb] = sub;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return success;
  } catch (const CLI::ParseError& e) {
    err << "omx: " << e.what() << "\n";
    return usage_error;
  }
  std::string verb;
  for (const auto& [name, sub] : subs)
    if (sub->parsed())
      verb = name;

  Result result;
  try {
    result = verbs.at(verb).second(o);
  } catch (const InputError& e) {
    err << "omx: " << e.what() << "\n";
    return usage_error;
  } catch (const NotRegularCW& e) {
    err << "omx: " << e.what() << "\n";
    return check_failed;
  } catch (const std::exception& e) {
    err << "omx: " << e.what() << "\n";
    return check_failed;
  }
  const std::string text = result.body.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "omx: cannot write '" << o.output << "'\n";
      return usage_error;
    }
    f << text;
  }
  return result.failed ? check_failed : success;
}

}  // namespace omx::cli
