#include "serialize.hpp"

namespace skein::io {

json to_json(const CycNum& c) {
  json coords = json::array();
  for (auto& q : c.coords()) coords.push_back({q.get_num().get_str(), q.get_den().get_str()});
  return {{"order", c.order()}, {"coords", coords}};
}

CycNum cycnum_from_json(const json& j) {
  long n = j.at("order").get<long>();
  std::vector<Rational> v;
  for (auto& e : j.at("coords")) {
    Rational q(Integer(e.at(0).get<std::string>()), Integer(e.at(1).get<std::string>()));
    q.canonicalize();
    v.push_back(q);
  }
  return CycNum::from_coords(n, v);
}

json to_json(const Mat2& m) { return {{to_json(m.a), to_json(m.b)}, {to_json(m.c), to_json(m.d)}}; }

Mat2 mat2_from_json(const json& j) {
  return {cycnum_from_json(j.at(0).at(0)), cycnum_from_json(j.at(0).at(1)), cycnum_from_json(j.at(1).at(0)),
          cycnum_from_json(j.at(1).at(1))};
}

json to_json(const SubalgebraClass& c) {
  json b = json::array();
  for (auto& m : c.basis) b.push_back(to_json(m));
  return {{"tag", tag_str(c.tag)}, {"dim", c.dim()}, {"basis", b}};
}

json to_json(const Representation& r) {
  json im = json::object();
  for (auto& [s, m] : r.images) im[s] = to_json(m);
  return {{"order", r.order}, {"images", im}};
}

Representation representation_from_json(const json& j) {
  Representation r;
  r.order = j.at("order").get<long>();
  for (auto& [s, m] : j.at("images").items()) r.images[s] = mat2_from_json(m);
  return r;
}

json to_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (auto& x : v) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

namespace {

CertKind kind_from(const std::string& s) {
  for (CertKind k : {CertKind::separating_torus, CertKind::nonseparating_torus, CertKind::noneffective_closed,
                     CertKind::noneffective_boundary, CertKind::none})
    if (kind_str(k) == s) return k;
  throw ParseError("unknown certificate kind " + s);
}

SeifertCase case_from(const std::string& s) {
  for (SeifertCase c : {SeifertCase::no_essential_torus, SeifertCase::positive_genus, SeifertCase::sphere_base,
                        SeifertCase::rp2_base, SeifertCase::rp2_small, SeifertCase::closed_haken_noneffective})
    if (case_str(c) == s) return c;
  throw ParseError("unknown case " + s);
}

}  // namespace

json to_json(const TorsionCertificate& c) {
  json j;
  j["kind"] = kind_str(c.kind);
  j["case"] = case_str(c.seifert_case);
  j["criterion_ref"] = c.criterion_ref;
  j["representation"] = c.representation ? to_json(*c.representation) : json(nullptr);
  j["parameter"] = c.parameter;
  json words = json::object();
  for (auto& [k, w] : c.words) words[k] = w.str();
  j["witness"] = {{"words", words}};
  if (c.kind == CertKind::separating_torus || c.kind == CertKind::nonseparating_torus) {
    j["witness"]["traces"] = {to_json(c.trace_lhs), to_json(c.trace_rhs)};
    j["witness"]["traces_text"] = {c.trace_lhs.str(), c.trace_rhs.str()};
  }
  j["hypotheses"] = c.hypotheses;
  j["classes"] = c.classes;
  j["notes"] = c.notes;
  j["homology"] = to_json(c.homology);
  j["verified"] = c.verified;
  return j;
}

TorsionCertificate certificate_from_json(const json& j) {
  TorsionCertificate c;
  c.kind = kind_from(j.at("kind").get<std::string>());
  c.seifert_case = case_from(j.at("case").get<std::string>());
  c.criterion_ref = j.at("criterion_ref").get<std::string>();
  if (!j.at("representation").is_null()) c.representation = representation_from_json(j.at("representation"));
  c.parameter = j.value("parameter", "");
  for (auto& [k, w] : j.at("witness").at("words").items()) c.words[k] = GroupWord::parse(w.get<std::string>());
  if (j.at("witness").contains("traces")) {
    c.trace_lhs = cycnum_from_json(j["witness"]["traces"][0]);
    c.trace_rhs = cycnum_from_json(j["witness"]["traces"][1]);
  }
  c.hypotheses = j.value("hypotheses", std::map<std::string, bool>{});
  c.classes = j.value("classes", std::map<std::string, std::string>{});
  c.notes = j.value("notes", std::vector<std::string>{});
  for (auto& x : j.at("homology")) c.homology.push_back(x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<long>()));
  c.verified = j.at("verified").get<bool>();
  return c;
}

json to_json(const JprimeReport& r) {
  json fam = json::array();
  for (auto& f : r.families) {
    json off = json::array();
    for (auto& m : f.offending) off.push_back(m.str());
    fam.push_back({{"family", f.family_index},
                   {"case", f.odd_case ? "odd" : "even"},
                   {"lands_in_V", f.lands_in_V},
                   {"pure_z_multipliers", f.pure_z_multipliers},
                   {"ok", f.ok},
                   {"offending", off}});
  }
  return {{"contained", r.contained}, {"families", fam}};
}

json to_json(const NormalizeResult& r) {
  json log = json::array();
  for (auto& l : r.log) log.push_back({{"label", l.label.str()}, {"gen", gen_str(l.gen)}, {"rule", l.rule}, {"terms", l.n_terms}});
  return {{"normal_form", r.element.str()}, {"rounds", r.rounds}, {"complete", r.complete}, {"log", log}};
}

}  // namespace skein::io
