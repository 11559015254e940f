#include "eeh/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "eeh/errors.hpp"

namespace eeh {

namespace {

const Json& field(const Json& j, const std::string& where, const std::string& key) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + "." + key + ": missing");
  return *it;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) throw FormatError(where + ": expected a string");
  return j.get<std::string>();
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) throw FormatError(where + ": out of range");
  return static_cast<int>(v);
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array");
  return j;
}

std::vector<std::string> strings(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& v : array(j, where)) {
    out.push_back(text(v, where + "[" + std::to_string(i++) + "]"));
  }
  return out;
}

Simplex simplex(const Json& j, const std::string& where) {
  auto labels = strings(j, where);
  try {
    return Simplex(std::move(labels));
  } catch (const FormatError& e) {
    throw FormatError(where + ": " + e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(what + ": invalid JSON (" + e.what() + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Json simplex_to_json(const Simplex& s) { return Json(s.vertices()); }

Complex complex_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("complex: expected an object");
  if (auto it = j.find("name"); it != j.end() && !it->is_string()) {
    throw FormatError("name: expected a string");
  }
  const auto& facets = array(field(j, "complex", "facets"), "facets");
  std::vector<Simplex> out;
  std::size_t i = 0;
  for (const auto& f : facets) out.push_back(simplex(f, "facets[" + std::to_string(i++) + "]"));
  return Complex::from_facets(out);
}

Json complex_to_json(const Complex& complex, const std::optional<std::string>& name) {
  Json j = Json::object();
  if (name) j["name"] = *name;
  j["facets"] = Json::array();
  for (const auto& f : complex.facets()) j["facets"].push_back(simplex_to_json(f));
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.budget = integer(field(j, "certificate", "budget"), "budget");
  if (c.budget < 0) throw FormatError("budget: must be nonnegative");
  std::size_t i = 0;
  for (const auto& m : array(field(j, "certificate", "moves"), "moves")) {
    const std::string where = "moves[" + std::to_string(i++) + "]";
    const auto op = text(field(m, where, "op"), where + ".op");
    auto free_face = simplex(field(m, where, "free"), where + ".free");
    auto pair = simplex(field(m, where, "pair"), where + ".pair");
    if (op == "collapse") {
      c.moves.push_back(Move::collapse(std::move(free_face), std::move(pair)));
    } else if (op == "expand") {
      c.moves.push_back(Move::expansion(std::move(free_face), std::move(pair)));
    } else {
      throw FormatError(where + ".op: expected \"collapse\" or \"expand\", got \"" + op + "\"");
    }
  }
  return c;
}

Json certificate_to_json(const Certificate& certificate) {
  Json j = Json::object();
  j["budget"] = certificate.budget;
  j["moves"] = Json::array();
  for (const auto& m : certificate.moves) {
    Json mj = Json::object();
    mj["op"] = m.kind == MoveKind::collapse ? "collapse" : "expand";
    mj["free"] = simplex_to_json(m.free_face);
    mj["pair"] = simplex_to_json(m.coface);
    j["moves"].push_back(std::move(mj));
  }
  return j;
}

AxiomSetInstance instance_from_json(const Json& j) {
  const auto names = strings(field(j, "instance", "sentences"), "sentences");
  std::set<Sentence> sentences(names.begin(), names.end());
  if (sentences.size() != names.size()) throw FormatError("sentences: duplicate sentence");
  std::vector<Implication> imps;
  std::size_t i = 0;
  for (const auto& ij : array(field(j, "instance", "implications"), "implications")) {
    const std::string where = "implications[" + std::to_string(i++) + "]";
    Implication imp;
    const auto premises = strings(field(ij, where, "premises"), where + ".premises");
    imp.premises = {premises.begin(), premises.end()};
    imp.conclusion = text(field(ij, where, "conclusion"), where + ".conclusion");
    imps.push_back(std::move(imp));
  }
  const int budget = integer(field(j, "instance", "budget"), "budget");
  return AxiomSetInstance::make(std::move(sentences), std::move(imps), budget);
}

Json instance_to_json(const AxiomSetInstance& instance) {
  Json j = Json::object();
  j["sentences"] = Json(std::vector<std::string>(instance.sentences.begin(), instance.sentences.end()));
  j["implications"] = Json::array();
  for (const auto& imp : instance.implications) {
    Json ij = Json::object();
    ij["premises"] = Json(std::vector<std::string>(imp.premises.begin(), imp.premises.end()));
    ij["conclusion"] = imp.conclusion;
    j["implications"].push_back(std::move(ij));
  }
  j["budget"] = instance.budget;
  return j;
}

Json port_map_to_json(const GadgetHandle& gadget) {
  Json j = Json::object();
  j["f"] = Json::array();
  for (const auto& f : gadget.f_edges) j["f"].push_back(simplex_to_json(f));
  j["e"] = Json::array();
  for (const auto& e : gadget.e_edges) j["e"].push_back(simplex_to_json(e));
  return j;
}

Json provenance_to_json(const ReductionOutput& output) {
  Json gadgets = Json::object();
  for (const auto& [s, prov] : output.provenance) {
    Json g = Json::object();
    g["m"] = prov.shape.m;
    g["l"] = prov.shape.l;
    g["f"] = Json::array();
    for (const auto& f : prov.f_edges) g["f"].push_back(simplex_to_json(f));
    g["e"] = Json::array();
    for (const auto& e : prov.e_edges) g["e"].push_back(simplex_to_json(e));
    g["vertex_map"] = Json::object();
    for (const auto& [from, to] : prov.vertex_map) g["vertex_map"][from] = to;
    gadgets[s] = std::move(g);
  }
  Json classes = Json::object();
  for (const auto& [rep, members] : output.classes) {
    classes[rep] = Json(std::vector<std::string>(members.begin(), members.end()));
  }
  Json j = Json::object();
  j["gadgets"] = std::move(gadgets);
  j["classes"] = std::move(classes);
  return j;
}

}  // namespace eeh
