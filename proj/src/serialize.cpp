#include "serialize.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "nichols_dm/errors.hpp"

namespace ndm::io {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c) || c == '-'; }))
    throw DomainError("malformed " + what + ": '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw DomainError("malformed " + what + ": '" + s + "'");
  }
}

json group_json(const DihedralGroup& G, const GroupElement& g) { return G.gh_name(g); }

json certificate_json(int m, const NicholsCertificate& c) {
  DihedralGroup G(m);
  json j;
  j["rule"] = rule_name(c.rule);
  j["component"] = c.component;
  j["scalar"] = c.scalar ? json(c.scalar->str()) : json(nullptr);
  if (c.witness)
    j["witness"] = json::array({group_json(G, c.witness->first), group_json(G, c.witness->second)});
  else
    j["witness"] = nullptr;
  j["edge"] = c.edge ? json::array({c.edge->first, c.edge->second}) : json(nullptr);
  j["edge_label"] = c.edge_label ? json(c.edge_label->str()) : json(nullptr);
  return j;
}

json lifting_json(const Lifting& x) {
  return {{"I", pairs_json(x.I.pairs)}, {"L", x.L.ells}, {"datum", datum_json(x.datum)}};
}

json certificate_json(const ConfluenceCertificate& c) {
  return {{"initial_rules", c.initial_rules}, {"rules", c.rules},   {"rules_added", c.rules_added},
          {"overlaps_checked", c.overlaps_checked}, {"passes", c.passes}, {"confluent", c.confluent}};
}

json slot_list(const std::vector<ParamSlot>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(slot_name(s));
  return a;
}

}  // namespace

std::vector<PairIK> parse_pairs(const std::string& text) {
  const std::string s = strip(text);
  std::vector<PairIK> out;
  if (s.empty()) return out;
  static const std::regex pair_re(R"(\((-?\d+),(-?\d+)\))");
  for (const auto& part : split(s, '+')) {
    std::smatch mt;
    if (!std::regex_match(part, mt, pair_re)) throw DomainError("malformed pair '" + part + "', expected (i,k)");
    out.push_back({to_int(mt[1], "pair"), to_int(mt[2], "pair")});
  }
  return out;
}

std::vector<int> parse_ells(const std::string& text) {
  std::string s = strip(text);
  std::vector<int> out;
  if (s.empty()) return out;
  std::replace(s.begin(), s.end(), ',', '+');
  for (const auto& part : split(s, '+')) out.push_back(to_int(part, "ell"));
  return out;
}

ParamSlot parse_slot(const std::string& text) {
  static const std::regex slot_re(R"(([a-z]+)\[(\d+),(\d+)\])");
  std::smatch mt;
  const std::string s = strip(text);
  if (!std::regex_match(s, mt, slot_re)) throw DomainError("malformed parameter slot '" + text + "', expected kind[a,b]");
  return {parse_param_kind(mt[1]), to_int(mt[2], "slot"), to_int(mt[3], "slot")};
}

std::vector<CycloNumber> parse_grid(const std::string& text, int m) {
  std::vector<CycloNumber> out;
  if (strip(text).empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(parse_cyclo(part, m));
  return out;
}

ParsedModule parse_module(int m, const std::string& text_in) {
  const std::string text = strip(text_in);
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("module string needs a kind prefix (I:, L:, K:, irr:)");
  const std::string kind = text.substr(0, colon), body = text.substr(colon + 1);
  if (kind == "I") {
    auto I = make_family_I(m, parse_pairs(body));
    return {build_M_I(m, I).module, kind, static_cast<int>(I.pairs.size())};
  }
  if (kind == "L") {
    auto L = make_family_L(m, parse_ells(body));
    return {build_M_L(m, L).module, kind, static_cast<int>(L.ells.size())};
  }
  if (kind == "K") {
    const auto bar = body.find('|');
    if (bar == std::string::npos) throw DomainError("K module needs I|L");
    auto K = make_family_K(m, make_family_I(m, parse_pairs(body.substr(0, bar))),
                           make_family_L(m, parse_ells(body.substr(bar + 1))));
    return {build_M_IL(m, K.I, K.L).module, kind, static_cast<int>(K.I.pairs.size() + K.L.ells.size())};
  }
  if (kind == "irr") {
    require_classification_order(m);
    DihedralGroup G(m);
    const auto pairs = irreducible_pairs(G);
    std::vector<YDModule> parts;
    for (const auto& item : split(body, '+')) {
      const auto slash = item.find('/');
      if (slash == std::string::npos) throw DomainError("irr module needs CLASS/REP, got '" + item + "'");
      const std::string cls = item.substr(0, slash), rep = item.substr(slash + 1);
      bool found = false;
      for (const auto& [c, r] : pairs)
        if (c.label == cls && rep_name(r) == rep) {
          parts.push_back(induce(G, c, r));
          found = true;
          break;
        }
      if (!found) throw DomainError("no irreducible module " + cls + "/" + rep);
    }
    return {direct_sum(parts), kind, static_cast<int>(parts.size())};
  }
  throw DomainError("unknown module kind '" + kind + "'");
}

json pairs_json(const std::vector<PairIK>& pairs) {
  json a = json::array();
  for (const auto& p : pairs) a.push_back({p.i, p.k});
  return a;
}

json datum_json(const LiftingDatum& d) {
  json o = json::object();
  for (const auto& [s, v] : d.values)
    if (!v.is_zero()) o[slot_name(s)] = v.str();
  return o;
}

json nichols_json(int m, const std::string& text, const ParsedModule& M, const NicholsResult& r) {
  json j;
  j["schema"] = kSchema;
  j["m"] = m;
  j["module"] = text;
  j["kind"] = M.kind;
  j["summands"] = M.summands;
  j["module_dimension"] = M.module.dim();
  j["verdict"] = r.finite ? "Finite" : "Infinite";
  j["finite"] = r.finite;
  j["log2_dimension"] = r.finite ? json(r.log2_dimension) : json(nullptr);
  j["certificate"] = certificate_json(m, r.certificate);
  return j;
}

json classification_json(const ClassificationReport& r) {
  json j;
  j["schema"] = kSchema;
  j["m"] = r.m;
  j["max_size"] = r.r_max;
  j["set_only"] = r.set_only;
  j["J"] = pairs_json(r.J);
  json N = json::object();
  for (const auto& [i, ks] : r.N) N[std::to_string(i)] = ks;
  j["N"] = N;
  j["odd_ells"] = r.odd_ells;
  json fams = json::array();
  for (const auto& f : r.families)
    fams.push_back({{"kind", f.kind}, {"I", pairs_json(f.I.pairs)}, {"L", f.L.ells}, {"log2_dimension", f.log2_dimension}});
  j["families"] = fams;
  json irr = json::array();
  std::size_t finite = 0;
  for (const auto& v : r.irreducibles) {
    if (v.result.finite) ++finite;
    irr.push_back({{"class", v.class_label},
                   {"rep", v.rep},
                   {"dim", v.dim},
                   {"finite", v.result.finite},
                   {"log2_dimension", v.result.finite ? json(v.result.log2_dimension) : json(nullptr)},
                   {"rule", rule_name(v.result.certificate.rule)}});
  }
  j["irreducibles"] = irr;
  j["counts"] = {{"J", r.J.size()}, {"odd_ells", r.odd_ells.size()}, {"families", r.families.size()},
                 {"finite_irreducibles", finite}};
  return j;
}

json presentation_json(const Presentation& P, char family) {
  DihedralGroup G(P.m);
  json j;
  j["schema"] = kSchema;
  j["m"] = P.m;
  j["family"] = std::string(1, family);
  j["I"] = pairs_json(P.I.pairs);
  j["L"] = P.L.ells;
  j["datum"] = datum_json(P.datum);
  const auto shape = parameter_shape(P.m, P.I, P.L);
  j["parameters"] = {{"free", slot_list(shape.free)}, {"forced_zero", slot_list(shape.forced_zero)}};
  json gens = json::array();
  for (const auto& g : P.generators)
    gens.push_back({{"name", g.name},
                    {"kind", std::string(1, g.kind)},
                    {"slot", g.slot},
                    {"grouplike", group_json(G, g.grouplike)},
                    {"h_exponent", g.h_exp},
                    {"g_partner", P.generators[static_cast<size_t>(g.partner)].name}});
  j["generators"] = gens;
  json rels = json::array();
  for (const auto& r : P.relations)
    rels.push_back({{"family", r.family},
                    {"text", relation_string(P, r)},
                    {"parameter", r.parameter ? json(slot_name(*r.parameter)) : json(nullptr)}});
  j["relations"] = rels;
  j["checks"] = {{"conjugation_closure", check_conjugation_closure(P)}, {"counit", check_counit(P)}};
  return j;
}

json verify_json(const Presentation& P, char family, const RewriteSystem& R, const DimensionResult& d,
                 std::size_t expected, const HopfReport& h, const SkewPrimitiveReport& sp) {
  json j;
  j["schema"] = kSchema;
  j["m"] = P.m;
  j["family"] = std::string(1, family);
  j["I"] = pairs_json(P.I.pairs);
  j["L"] = P.L.ells;
  j["datum"] = datum_json(P.datum);
  j["dimension"] = d.dimension;
  j["expected_dimension"] = expected;
  j["dimension_ok"] = d.dimension == expected;
  j["confluence"] = certificate_json(d.certificate);
  j["rules"] = R.rules().size();
  j["hopf"] = {{"delta", h.delta_ok}, {"counit", h.counit_ok}, {"antipode", h.antipode_ok}, {"failures", h.failures}};
  j["identity_primitives"] = sp.nontrivial_dimension;
  j["ok"] = d.dimension == expected && h.ok() && sp.nontrivial_dimension == 0 && d.certificate.confluent;
  return j;
}

json iso_json(int m, int r_max, const std::vector<CycloNumber>& grid, bool rescale,
              const std::vector<IsoClass>& classes) {
  json j;
  j["schema"] = kSchema;
  j["m"] = m;
  j["max_size"] = r_max;
  json g = json::array();
  for (const auto& v : grid) g.push_back(v.str());
  j["grid"] = g;
  j["rescale"] = rescale;
  json cs = json::array();
  std::size_t points = 0;
  for (const auto& c : classes) {
    json members = json::array();
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      json x = lifting_json(c.members[i]);
      x["unit"] = c.witness_units[i];
      members.push_back(x);
    }
    points += c.members.size();
    cs.push_back({{"family", std::string(1, c.family)},
                  {"representative", lifting_json(c.representative)},
                  {"orbit_size", c.members.size()},
                  {"members", members}});
  }
  j["classes"] = cs;
  j["class_count"] = classes.size();
  j["point_count"] = points;
  return j;
}

json rack_json(int m, const std::string& class_label, int threads) {
  if (m < 3) throw DomainError("rack needs m >= 3");
  DihedralGroup G(m);
  std::optional<ConjugacyClass> cls;
  json labels = json::array();
  for (const auto& c : conjugacy_classes(G)) {
    labels.push_back(c.label);
    if (c.label == class_label) cls = c;
  }
  if (!cls) throw DomainError("unknown class '" + class_label + "', expected one of " + labels.dump());
  const Rack X = conjugation_rack(G, *cls);
  const auto w = find_type_D(G, *cls, threads);
  json j;
  j["schema"] = kSchema;
  j["m"] = m;
  j["class"] = class_label;
  j["size"] = X.size();
  j["quandle"] = X.is_quandle();
  j["type_d"] = w.has_value();
  if (w) {
    const FiniteGroup F = FiniteGroup::from_dihedral(G);
    j["witness"] = json::array({group_json(G, w->first), group_json(G, w->second)});
    j["witness_verified"] = verify_type_D_witness(F, w->first.index(m), w->second.index(m));
  } else {
    j["witness"] = nullptr;
    j["witness_verified"] = nullptr;
  }
  j["rack_type_d"] = rack_type_D(X).has_value();
  return j;
}

json reps_json(int m) {
  if (m < 3) throw DomainError("reps needs m >= 3");
  DihedralGroup G(m);
  const auto reps = irreps(G);
  const auto classes = conjugacy_classes(G);
  json j;
  j["schema"] = kSchema;
  j["m"] = m;
  json cl = json::array();
  for (const auto& c : classes)
    cl.push_back({{"label", c.label}, {"representative", group_json(G, c.representative)}, {"size", c.elements.size()}});
  j["classes"] = cl;
  json rs = json::array();
  int linear = 0, two = 0;
  for (const auto& r : reps) {
    (r.degree() == 1 ? linear : two)++;
    json chars = json::object();
    for (const auto& c : classes) chars[c.label] = character(G, r, c.representative).str();
    json entry = {{"name", r.name()}, {"degree", r.degree()}, {"character", chars}};
    if (r.degree() == 2) {
      const auto R = evaluate(G, r, G.r()), S = evaluate(G, r, G.s());
      json mr = json::array(), ms = json::array();
      for (int a = 0; a < 2; ++a) {
        mr.push_back({R.at(a, 0).str(), R.at(a, 1).str()});
        ms.push_back({S.at(a, 0).str(), S.at(a, 1).str()});
      }
      entry["matrices"] = {{"h", mr}, {"g", ms}};
    }
    rs.push_back(entry);
  }
  j["irreps"] = rs;
  j["linear_count"] = linear;
  j["two_dimensional_count"] = two;
  bool orth = true;
  for (std::size_t a = 0; a < reps.size() && orth; ++a)
    for (std::size_t b = 0; b < reps.size() && orth; ++b) {
      CycloNumber s(m);
      for (const auto& c : classes)
        s += CycloNumber(m, static_cast<int>(c.elements.size())) * character(G, reps[a], c.representative) *
             character(G, reps[b], c.representative).conj();
      orth = s == CycloNumber(m, a == b ? 2 * m : 0);
    }
  j["orthogonality"] = orth;
  return j;
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace ndm::io
