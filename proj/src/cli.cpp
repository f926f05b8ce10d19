#include "omegalab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "omegalab/action.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/integers.hpp"
#include "omegalab/spec_io.hpp"
#include "omegalab/verify.hpp"

namespace omegalab {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Usage, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// "@path" reads the file, anything else is taken literally.
std::string inline_or_file(const std::string& arg) {
  return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::Usage, what + " must be a nonnegative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Usage, what + " is out of range: " + text);
  }
}

// Ideal literal: "zero", "all", or comma-separated generator indices.
Ideal parse_ideal(const RingPtr& ring, const std::string& literal) {
  const std::string text = trim(literal);
  if (text == "zero") return zero_ideal(ring);
  if (text == "all") return whole_ring(ring);
  std::vector<Elem> gens;
  for (const auto& item : split(text, ',')) {
    const auto g = parse_count(item, "generator");
    if (g >= ring->order())
      throw Error(ErrorKind::Usage, "generator " + item + " is not an element of " + ring->name());
    gens.push_back(static_cast<Elem>(g));
  }
  return generate(ring, gens);
}

json names(const Ring& r, const std::vector<Elem>& xs) {
  json out = json::array();
  for (Elem x : xs) out.push_back(r.element_name(x));
  return out;
}

json ideal_json(const Ideal& i) {
  return json{{"label", i.label()},
              {"size", i.size()},
              {"elements", names(i.ring(), i.elements().elements())}};
}

std::string join(const json& arr, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

std::string yes_no(const json& b) { return b.get<bool>() ? "yes" : "no"; }

// Options shared by the subcommands, filled by CLI11.
struct Options {
  std::string ring, gens, family = "prp", group = "aut", corpus = "default";
  std::optional<std::uint64_t> budget, subgroups, n;
  bool json_out = false, timing = false;
  std::vector<std::string> values;
};

Limits limits_from(const Options& o) {
  Limits limits;
  if (const char* env = std::getenv("OMEGALAB_BUDGET"))
    limits.search_budget = parse_count(env, "OMEGALAB_BUDGET");
  if (o.budget) limits.search_budget = *o.budget;
  if (o.subgroups) limits.subgroup_budget = *o.subgroups;
  return limits;
}

RingPtr load_ring(const Options& o, const Limits& limits) {
  if (o.ring.empty()) throw Error(ErrorKind::Usage, "--ring is required");
  return build_ring(parse_ring_spec(inline_or_file(o.ring)), limits.ideal_cap);
}

FamilyPtr load_family(const RingPtr& ring, const Options& o, const Limits& limits) {
  if (!o.family.empty() && o.family[0] == '@') {
    std::vector<Ideal> members;
    std::istringstream in(read_file(o.family.substr(1)));
    std::string line;
    while (std::getline(in, line))
      if (!trim(line).empty() && trim(line)[0] != '#') members.push_back(parse_ideal(ring, line));
    if (members.empty()) throw Error(ErrorKind::Usage, "family file lists no ideals");
    return std::make_shared<const IdealFamily>(ring, std::move(members), "custom");
  }
  const auto kind = parse_family_kind(o.family);
  if (!kind) throw Error(ErrorKind::Usage, "unknown family '" + o.family + "'");
  return std::make_shared<const IdealFamily>(family(ring, *kind, limits));
}

IdealPermGroup load_group(const FamilyPtr& fam, const Options& o, const Limits& limits) {
  if (o.group == "aut") return induced_group(fam, aut_group(fam->ring_ptr(), limits), limits);
  std::vector<Perm> gens;
  for (const auto& item : split(o.group, ';'))
    if (!item.empty()) gens.push_back(parse_cycles(item, fam->size()));
  return IdealPermGroup::abstract(fam, std::move(gens), limits);
}

json family_json(const IdealFamily& fam) {
  json members = json::array();
  for (const auto& m : fam.members()) members.push_back(m.label());
  return json{{"label", fam.label()}, {"members", members}};
}

json blocks_json(const IdealFamily& fam, const std::vector<std::vector<std::size_t>>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) {
    json block = json::array();
    for (auto i : b) block.push_back(fam[i].label());
    out.push_back(block);
  }
  return out;
}

json spectrum_json(const IdealFamily& fam, const OmegaPartition& p) {
  json spec = json::array(), classes = json::array();
  for (const auto& v : p.spectrum) spec.push_back(v.to_string());
  for (const auto& c : p.classes) {
    json members = json::array();
    for (auto i : c.members) members.push_back(fam[i].label());
    classes.push_back({{"omega", c.value.to_string()}, {"members", members}});
  }
  return json{{"family", family_json(fam)}, {"spectrum", spec}, {"classes", classes}};
}

json group_elements_json(const IdealPermGroup& h) {
  json out = json::array();
  for (const auto& e : h.elements()) out.push_back(format_cycles(e));
  return out;
}

// Each command returns its JSON result and a text renderer derived from it.
struct Result {
  json value;
  std::string text;
  int code = kExitOk;
};

Result cmd_ring_info(const Options& o) {
  const auto limits = limits_from(o);
  const auto ring = load_ring(o, limits);
  std::vector<Elem> units = ring->units().elements();
  std::vector<Elem> all(ring->order());
  for (Elem x = 0; x < all.size(); ++x) all[x] = x;
  json j{{"ring", ring->name()},
         {"order", ring->order()},
         {"one", ring->element_name(ring->one())},
         {"units", names(*ring, units)},
         {"field", is_field(*ring)},
         {"domain", is_domain(*ring)},
         {"elements", names(*ring, all)}};
  std::ostringstream t;
  t << "ring " << j["ring"].get<std::string>() << " of order " << j["order"] << "\n"
    << "units: " << join(j["units"], ", ") << "\n"
    << "field: " << yes_no(j["field"]) << ", domain: " << yes_no(j["domain"]) << "\n";
  return {j, t.str()};
}

Result cmd_ideals(const Options& o) {
  const auto limits = limits_from(o);
  const auto ring = load_ring(o, limits);
  json list = json::array();
  for (const auto& i : all_ideals(ring, limits)) {
    json e = ideal_json(i);
    e["proper"] = i.is_proper();
    if (i.is_proper()) {
      e["prime"] = is_prime(i);
      e["maximal"] = is_maximal(i);
      e["primary"] = is_primary(i);
      e["radical"] = is_radical(i);
    }
    list.push_back(e);
  }
  json j{{"ring", ring->name()}, {"ideals", list}};
  std::ostringstream t;
  for (const auto& e : list) {
    t << e["label"].get<std::string>() << " {" << join(e["elements"], ", ") << "}";
    if (e["proper"].get<bool>())
      t << " prime=" << yes_no(e["prime"]) << " maximal=" << yes_no(e["maximal"])
        << " primary=" << yes_no(e["primary"]) << " radical=" << yes_no(e["radical"]);
    else
      t << " (whole ring)";
    t << "\n";
  }
  return {j, t.str()};
}

Result cmd_omega(const Options& o) {
  const auto limits = limits_from(o);
  const auto ring = load_ring(o, limits);
  if (o.gens.empty()) throw Error(ErrorKind::Usage, "--gens is required");
  const auto ideal = parse_ideal(ring, o.gens);
  json j{{"ring", ring->name()}, {"ideal", ideal_json(ideal)}};
  std::ostringstream t;
  if (o.n) {
    if (*o.n == 0) throw Error(ErrorKind::Usage, "--n must be positive");
    const auto check = check_n_absorbing(ideal, *o.n, limits);
    j["n"] = *o.n;
    j["absorbing"] = check.absorbing;
    if (!check.absorbing) j["counterexample"] = names(*ring, check.counterexample);
    t << ideal.label() << (check.absorbing ? " is " : " is not ") << *o.n << "-absorbing";
    if (!check.absorbing) t << ", counterexample [" << join(j["counterexample"], ",") << "]";
    t << "\n";
    return {j, t.str()};
  }
  const auto res = omega(ideal, limits);
  j["omega"] = res.value.to_string();
  j["bound"] = res.bound;
  if (res.certificate)
    j["certificate"] = {{"n", res.certificate->n},
                        {"witness", res.certificate->witness},
                        {"witness_named", names(*ring, res.certificate->witness)}};
  t << "omega = " << res.value.to_string();
  if (res.certificate) t << ", certificate [" << join(j["certificate"]["witness_named"], ",") << "]";
  t << "\n";
  return {j, t.str()};
}

Result cmd_spectrum(const Options& o) {
  const auto limits = limits_from(o);
  const auto ring = load_ring(o, limits);
  const auto fam = load_family(ring, o, limits);
  json j{{"ring", ring->name()}};
  j.update(spectrum_json(*fam, spectrum(*fam, limits)));
  std::ostringstream t;
  t << "Ω = {" << join(j["spectrum"], ", ") << "}\n";
  for (const auto& c : j["classes"])
    t << "  " << c["omega"].get<std::string>() << ": " << join(c["members"], ", ") << "\n";
  return {j, t.str()};
}

Result cmd_aut(const Options& o) {
  const auto limits = limits_from(o);
  const auto ring = load_ring(o, limits);
  json list = json::array();
  for (const auto& a : aut_group(ring, limits))
    list.push_back({{"map", names(*ring, a.map)}, {"involution", a.is_involution()}});
  json j{{"ring", ring->name()}, {"order", list.size()}, {"automorphisms", list}};
  std::ostringstream t;
  t << "Aut(" << ring->name() << ") has order " << list.size() << "\n";
  for (const auto& a : list)
    t << "  [" << join(a["map"], ", ") << "]" << (a["involution"].get<bool>() ? " involution" : "")
      << "\n";
  return {j, t.str()};
}

Result cmd_stability(const Options& o) {
  const auto limits = limits_from(o);
  const auto ring = load_ring(o, limits);
  const auto fam = load_family(ring, o, limits);
  const auto omega = spectrum(*fam, limits);
  const auto h = load_group(fam, o, limits);
  const auto stable = is_omega_stable(h, omega);
  json j{{"ring", ring->name()},
         {"family", family_json(*fam)},
         {"group", {{"provenance", h.provenance() == IdealPermGroup::Provenance::FromAut
                                       ? "from-aut"
                                       : "abstract"},
                    {"order", h.order()},
                    {"elements", group_elements_json(h)}}},
         {"orbits", blocks_json(*fam, orbits(h))},
         {"stable", stable.stable}};
  if (stable.violation) {
    const auto [e, i] = *stable.violation;
    j["violation"] = {{"element", format_cycles(h.elements()[e])},
                      {"ideal", (*fam)[i].label()},
                      {"image", (*fam)[h.elements()[e][i]].label()}};
  }
  j["transitive"] = is_transitive(h);
  j["omega_relation_is_congruence"] =
      is_g_congruence(EquivRelation::omega_relation(fam, omega), h);
  j["orbit_relation_is_omega_congruence"] = is_omega_congruence(orbit_relation(h), omega);
  j["single_value_check"] = check_prop_4_1(h, omega).to_json();

  std::ostringstream t;
  t << "group of order " << h.order() << " on " << fam->size() << " ideals\n"
    << "orbits:";
  for (const auto& b : j["orbits"]) t << " {" << join(b, ", ") << "}";
  t << "\nomega-stable: " << yes_no(j["stable"]);
  if (j.contains("violation"))
    t << " (" << j["violation"]["element"].get<std::string>() << " sends "
      << j["violation"]["ideal"].get<std::string>() << " to "
      << j["violation"]["image"].get<std::string>() << ")";
  t << "\ntransitive: " << yes_no(j["transitive"])
    << "\nomega relation is a congruence: " << yes_no(j["omega_relation_is_congruence"])
    << "\norbit relation is an omega-congruence: "
    << yes_no(j["orbit_relation_is_omega_congruence"]) << "\n";
  return {j, t.str()};
}

Result cmd_explore(const Options& o) {
  const auto limits = limits_from(o);
  const auto ring = load_ring(o, limits);
  const auto fam = load_family(ring, o, limits);
  const auto omega = spectrum(*fam, limits);
  json list = json::array();
  for (const auto& h : explore_converse(fam, omega, limits)) {
    json gens = json::array();
    for (const auto& g : h.generators()) gens.push_back(format_cycles(g));
    list.push_back({{"order", h.order()}, {"generators", gens}, {"orbits", blocks_json(*fam, orbits(h))}});
  }
  json j{{"ring", ring->name()}, {"family", family_json(*fam)}, {"witnesses", list}};
  std::ostringstream t;
  t << list.size() << " witness" << (list.size() == 1 ? "" : "es") << "\n";
  for (const auto& w : list)
    t << "  order " << w["order"] << " generated by " << join(w["generators"], " ") << "\n";
  return {j, t.str()};
}

Result cmd_verify(const Options& o) {
  VerifyOptions options;
  options.limits = limits_from(o);
  options.timing = o.timing;
  std::vector<RingSpec> corpus;
  if (o.corpus == "default") {
    corpus = default_corpus();
  } else if (!o.corpus.empty() && o.corpus[0] == '@') {
    json specs;
    try {
      specs = json::parse(read_file(o.corpus.substr(1)));
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::InvalidSpec, std::string("corpus file: ") + e.what());
    }
    if (!specs.is_array()) throw Error(ErrorKind::InvalidSpec, "corpus file must hold an array");
    for (const auto& s : specs) corpus.push_back(ring_spec_from_json(s));
  } else {
    throw Error(ErrorKind::Usage, "--corpus takes 'default' or @file");
  }
  auto report = run_verify(corpus, options);
  const json& j = report.json;
  std::ostringstream t;
  auto line = [&](const std::string& name, const json& checks) {
    std::size_t fails = 0;
    for (const auto& c : checks) fails += c["status"] == "fails";
    t << name << ": " << checks.size() << " checks, " << fails << " failing\n";
    for (const auto& c : checks)
      if (c["status"] == "fails" || c["status"] == "flagged")
        t << "  " << c["status"].get<std::string>() << " " << c["id"].get<std::string>()
          << (c.contains("note") ? ": " + c["note"].get<std::string>() : "") << "\n";
  };
  for (const auto& r : j["rings"]) line(r["ring"].get<std::string>(), r["checks"]);
  line("Z", j["integers"]);
  line("statements", j["statements"]);
  const auto& s = j["summary"];
  t << "total " << s["checks"] << ": " << s["holds"] << " hold, " << s["vacuous"] << " vacuous, "
    << s["flagged"] << " flagged, " << s["fails"] << " fail\n";
  return {j, t.str(), report.failures ? kExitCheckFailed : kExitOk};
}

Result cmd_zomega(const Options& o, std::istream& in) {
  std::vector<std::string> inputs = o.values;
  const bool batch = inputs.empty() || (inputs.size() == 1 && inputs[0] == "-");
  if (batch) {
    inputs.clear();
    std::string line;
    while (std::getline(in, line))
      if (!trim(line).empty()) inputs.push_back(trim(line));
  }
  json rows = json::array();
  std::ostringstream t;
  if (batch) t << "m,omega\n";
  for (const auto& text : inputs) {
    const ZInt m = parse_zint(text);
    const auto w = z_omega(m);
    rows.push_back({{"m", to_string(m)}, {"omega", w.to_string()}});
    if (batch)
      t << to_string(m) << "," << w.to_string() << "\n";
    else
      t << "omega(<" << to_string(m) << ">) = " << w.to_string() << "\n";
  }
  json j = batch || rows.size() != 1 ? rows : rows[0];
  return {j, t.str()};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded:
    case ErrorKind::FactorizationTimeout: return kExitCap;
    case ErrorKind::InternalBoundViolated: return kExitCheckFailed;
    default: return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Absorbing ideals of finite commutative rings", "omegalab"};
  app.require_subcommand(1);
  Options o;

  auto add_ring = [&](CLI::App* c) {
    c->add_option("--ring", o.ring, "ring spec as JSON, or @file")->required();
  };
  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", o.json_out, "emit JSON");
    c->add_option("--budget", o.budget, "search budget in tuples per absorbing check");
  };
  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", o.family, "prp, max, rd, or @file with one ideal per line");
    c->add_option("--subgroups", o.subgroups, "largest number of subgroups to enumerate");
  };

  auto* ring_info = app.add_subcommand("ring-info", "order, units and field test");
  add_ring(ring_info);
  add_common(ring_info);
  auto* ideals = app.add_subcommand("ideals", "every ideal with its predicates");
  add_ring(ideals);
  add_common(ideals);
  auto* om = app.add_subcommand("omega", "omega of an ideal, with certificate");
  add_ring(om);
  add_common(om);
  om->add_option("--gens", o.gens, "generators as comma-separated indices, or zero/all")
      ->required();
  om->add_option("--n", o.n, "only decide whether the ideal is n-absorbing");
  auto* spec = app.add_subcommand("spectrum", "omega values and classes of a family");
  add_ring(spec);
  add_common(spec);
  add_family(spec);
  auto* aut = app.add_subcommand("aut", "automorphism group");
  add_ring(aut);
  add_common(aut);
  auto* stab = app.add_subcommand("stability", "orbits, stability and congruences of a group");
  add_ring(stab);
  add_common(stab);
  add_family(stab);
  stab->add_option("--group", o.group, "aut, or ';'-separated cycle-notation generators");
  auto* explore = app.add_subcommand("explore", "groups that are congruences but not stable");
  add_ring(explore);
  add_common(explore);
  add_family(explore);
  auto* verify = app.add_subcommand("verify", "run every property check on a corpus");
  add_common(verify);
  verify->add_option("--corpus", o.corpus, "default, or @file with a JSON array of ring specs");
  verify->add_flag("--timing", o.timing, "add per-check durations");
  auto* zomega = app.add_subcommand("zomega", "omega of <m> in Z; no argument or - reads stdin");
  add_common(zomega);
  zomega->add_option("m", o.values, "nonnegative integers");

  std::vector<const char*> argv{"omegalab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "Usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Result r;
    if (ring_info->parsed()) r = cmd_ring_info(o);
    else if (ideals->parsed()) r = cmd_ideals(o);
    else if (om->parsed()) r = cmd_omega(o);
    else if (spec->parsed()) r = cmd_spectrum(o);
    else if (aut->parsed()) r = cmd_aut(o);
    else if (stab->parsed()) r = cmd_stability(o);
    else if (explore->parsed()) r = cmd_explore(o);
    else if (verify->parsed()) r = cmd_verify(o);
    else r = cmd_zomega(o, in);
    if (o.json_out)
      out << r.value.dump(2) << "\n";
    else
      out << r.text;
    return r.code;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace omegalab
