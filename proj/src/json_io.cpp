#include "workbench/json_io.hpp"

#include <fstream>

namespace workbench {

BasedRootDatum datum_from_json(const Json& j) {
  std::vector<Vec> roots, coroots;
  for (const auto& r : j.at("simple_roots")) roots.push_back(r.get<Vec>());
  for (const auto& r : j.at("simple_coroots")) coroots.push_back(r.get<Vec>());
  return BasedRootDatum(j.at("name").get<std::string>(), j.at("rank").get<int>(),
                        roots, coroots, j.at("p").get<long long>(),
                        j.at("f").get<long long>());
}

Json datum_to_json(const BasedRootDatum& rd) {
  Json j;
  j["name"] = rd.name();
  j["rank"] = rd.rank();
  Json roots = Json::array(), coroots = Json::array();
  for (int i = 0; i < rd.num_simple(); ++i) {
    roots.push_back(rd.simple_root(i));
    coroots.push_back(rd.simple_coroot(i));
  }
  j["simple_roots"] = roots;
  j["simple_coroots"] = coroots;
  j["p"] = rd.p();
  j["f"] = rd.f();
  return j;
}

std::vector<std::string> preset_names() {
  return {"A1sc", "A1ad", "GL2", "GL3", "A2sc", "B2", "G2"};
}

BasedRootDatum preset_datum(const std::string& name, long long p, long long f) {
  if (name == "A1sc" || name == "SL2")
    return BasedRootDatum("A1sc", 1, {{2}}, {{1}}, p, f);
  if (name == "A1ad" || name == "PGL2")
    return BasedRootDatum("A1ad", 1, {{1}}, {{2}}, p, f);
  if (name == "GL2")
    return BasedRootDatum("GL2", 2, {{1, -1}}, {{1, -1}}, p, f);
  if (name == "GL3")
    return BasedRootDatum("GL3", 3, {{1, -1, 0}, {0, 1, -1}},
                          {{1, -1, 0}, {0, 1, -1}}, p, f);
  if (name == "A2sc" || name == "A2" || name == "SL3")
    return BasedRootDatum("A2sc", 2, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}, p, f);
  if (name == "B2")
    return BasedRootDatum("B2", 2, {{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}, p, f);
  if (name == "G2")
    return BasedRootDatum("G2", 2, {{2, -1}, {-3, 2}}, {{1, 0}, {0, 1}}, p, f);
  throw std::invalid_argument("unknown preset: " + name);
}

BasedRootDatum load_datum(const std::string& name_or_path, long long p,
                          long long f) {
  long long pp = p > 0 ? p : 3, ff = f > 0 ? f : 1;
  for (const auto& n : preset_names())
    if (n == name_or_path) return preset_datum(n, pp, ff);
  for (const auto& alias : {"SL2", "PGL2", "A2", "SL3"})
    if (alias == name_or_path) return preset_datum(alias, pp, ff);
  std::ifstream in(name_or_path);
  if (!in) throw std::runtime_error("cannot open datum file: " + name_or_path);
  Json j = Json::parse(in);
  if (p > 0) j["p"] = p;
  if (f > 0) j["f"] = f;
  return datum_from_json(j);
}

Json element_to_json(const AffWeylElement& w, const BasedRootDatum& rd) {
  Json j;
  j["nu"] = w.nu;
  j["w0"] = rd.w0().word(w.w0);
  return j;
}

AffWeylElement element_from_json(const Json& j, const BasedRootDatum& rd) {
  AffWeylElement w{j.at("nu").get<Vec>(), rd.w0().identity()};
  if (static_cast<int>(w.nu.size()) != rd.rank())
    throw std::invalid_argument("element nu has wrong rank");
  for (int letter : j.at("w0").get<std::vector<int>>())
    w.w0 = rd.w0().mult(w.w0, rd.w0().gen(letter));
  return w;
}

Json word_to_json(const AffReducedWord& w, const AffineWeyl& weyl) {
  Json letters = Json::array();
  for (int s : w.letters) {
    const SAffGen& g = weyl.saff()[s];
    Json l;
    l["index"] = s;
    l["beta"] = weyl.datum().positive_roots()[g.root_index].root;
    l["level"] = g.level;
    letters.push_back(l);
  }
  Json j;
  j["letters"] = letters;
  j["omega"] = element_to_json(w.omega, weyl.datum());
  return j;
}

Json prop_to_json(const ProPElement& a, const BasedRootDatum& rd) {
  Json j;
  j["nu"] = a.nu;
  j["t"] = a.t.e;
  j["w0"] = rd.w0().word(a.w0);
  return j;
}

ProPElement prop_from_json(const Json& j, const BasedRootDatum& rd) {
  ProPElement a;
  a.nu = j.at("nu").get<Vec>();
  a.t.e = j.at("t").get<std::vector<int>>();
  a.w0 = rd.w0().identity();
  for (int letter : j.at("w0").get<std::vector<int>>())
    a.w0 = rd.w0().mult(a.w0, rd.w0().gen(letter));
  if (static_cast<int>(a.nu.size()) != rd.rank() ||
      static_cast<int>(a.t.e.size()) != rd.rank())
    throw std::invalid_argument("pro-p element has wrong rank");
  return a;
}

Json character_to_json(const TorusCharacter& psi) {
  return Json{{"exponents", psi.a}};
}

TorusCharacter character_from_json(const Json& j, int rank) {
  TorusCharacter psi{j.at("exponents").get<std::vector<int>>()};
  if (static_cast<int>(psi.a.size()) != rank)
    throw std::invalid_argument("character has wrong rank");
  return psi;
}

Json torus_ring_to_json(const TorusRing& c) {
  Json terms = Json::array();
  for (const auto& [t, coeff] : c)
    terms.push_back(Json{{"t", t.e}, {"coeff", coeff}});
  return terms;
}

}  // namespace workbench
