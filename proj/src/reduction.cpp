#include "eeh/reduction.hpp"

#include <algorithm>
#include <functional>

#include "eeh/errors.hpp"

namespace eeh {

std::string gadget_prefix(const Sentence& s) { return s + "/"; }

std::string PastingViolation::to_string() const {
  return "stars of " + first + " and " + second + " share vertex " + shared;
}

GluingPlan build_plan(const AxiomSetInstance& normalized) {
  if (!is_normalized(normalized)) {
    throw FormatError("build_plan needs a normalized instance");
  }
  GluingPlan plan;
  for (const auto& s : normalized.sentences) plan.shapes[s] = {};
  for (const auto& imp : normalized.implications) {
    const int i = ++plan.shapes[imp.conclusion].m;
    for (const auto& u : imp.premises) {
      const int j = ++plan.shapes[u].l;
      const auto fp = gadget_prefix(imp.conclusion);
      const auto ep = gadget_prefix(u);
      const auto jj = std::to_string(j);
      plan.identifications.push_back({imp.conclusion, i, 0, u, j, 'y',
                                      fp + "x" + std::to_string(i - 1), ep + "y" + jj});
      plan.identifications.push_back(
          {imp.conclusion, i, 1, u, j, 'z', fp + "x" + std::to_string(i), ep + "z" + jj});
    }
  }
  return plan;
}

std::map<Sentence, GadgetHandle> instantiate_gadgets(const GluingPlan& plan) {
  std::map<Sentence, GadgetHandle> out;
  for (const auto& [s, shape] : plan.shapes) out.emplace(s, gadget(shape.m, shape.l, gadget_prefix(s)));
  return out;
}

Complex disjoint_union(const std::map<Sentence, GadgetHandle>& gadgets) {
  std::vector<Simplex> facets;
  for (const auto& [s, g] : gadgets) {
    auto f = g.complex.facets();
    facets.insert(facets.end(), f.begin(), f.end());
  }
  return Complex::from_facets(facets);
}

namespace {

/// Union-find over labels; each root is the least label of its class.
class LabelClasses {
 public:
  void unite(const VertexLabel& a, const VertexLabel& b) {
    auto ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;
  }

  VertexLabel find(const VertexLabel& a) {
    auto it = parent_.find(a);
    if (it == parent_.end()) {
      parent_.emplace(a, a);
      return a;
    }
    if (it->second == a) return a;
    auto root = find(it->second);
    parent_[a] = root;
    return root;
  }

  std::map<VertexLabel, std::set<VertexLabel>> classes() {
    std::map<VertexLabel, std::set<VertexLabel>> out;
    std::vector<VertexLabel> keys;
    for (const auto& [k, p] : parent_) keys.push_back(k);
    for (const auto& k : keys) out[find(k)].insert(k);
    return out;
  }

 private:
  std::map<VertexLabel, VertexLabel> parent_;
};

LabelClasses classes_of(const GluingPlan& plan) {
  LabelClasses uf;
  for (const auto& id : plan.identifications) uf.unite(id.f_vertex, id.e_vertex);
  return uf;
}

std::set<VertexLabel> star_vertices(const Complex& k, const VertexLabel& v) {
  std::set<VertexLabel> out;
  for (const auto& f : star(k, v).vertices()) out.insert(f);
  return out;
}

}  // namespace

std::optional<PastingViolation> check_pasting(const GluingPlan& plan,
                                              const Complex& disjoint_union) {
  auto uf = classes_of(plan);
  for (const auto& [root, members] : uf.classes()) {
    if (members.size() < 2) continue;
    std::vector<std::pair<VertexLabel, std::set<VertexLabel>>> stars;
    for (const auto& v : members) stars.emplace_back(v, star_vertices(disjoint_union, v));
    for (std::size_t a = 0; a < stars.size(); ++a) {
      for (std::size_t b = a + 1; b < stars.size(); ++b) {
        std::vector<VertexLabel> common;
        std::set_intersection(stars[a].second.begin(), stars[a].second.end(),
                              stars[b].second.begin(), stars[b].second.end(),
                              std::back_inserter(common));
        if (!common.empty()) return PastingViolation{stars[a].first, stars[b].first, common.front()};
      }
    }
  }
  return std::nullopt;
}

namespace {

void post_check(bool ok, const std::string& what) {
  if (!ok) throw PastingError("reduction consistency check failed: " + what);
}

Simplex mapped(const Simplex& s, const std::function<VertexLabel(const VertexLabel&)>& f) {
  std::vector<VertexLabel> vs;
  for (const auto& v : s.vertices()) vs.push_back(f(v));
  std::sort(vs.begin(), vs.end());
  post_check(std::adjacent_find(vs.begin(), vs.end()) == vs.end(),
             "face " + s.to_string() + " lost a dimension in the quotient");
  return Simplex(std::move(vs));
}

}  // namespace

ReductionOutput assemble(const AxiomSetInstance& instance) {
  ReductionOutput out;
  std::tie(out.normalized, out.normalization) = normalize(instance);
  if (out.normalization.infeasible) {
    throw InfeasibleInstance("forced axioms exceed the budget by " +
                             std::to_string(-out.normalized.budget));
  }
  out.plan = build_plan(out.normalized);
  const auto gadgets = instantiate_gadgets(out.plan);
  const Complex united = disjoint_union(gadgets);
  if (auto bad = check_pasting(out.plan, united)) throw PastingError(bad->to_string());

  auto uf = classes_of(out.plan);
  for (auto& [root, members] : uf.classes()) {
    if (members.size() > 1) out.classes.emplace(root, members);
  }
  const auto rep = [&uf](const VertexLabel& v) { return uf.find(v); };

  std::vector<Simplex> facets;
  for (const auto& f : united.facets()) facets.push_back(mapped(f, rep));
  out.complex = Complex::from_facets(facets);

  // Identified ports coincide as single edges.
  std::set<Simplex> empty_premise_ports;
  {
    std::map<Sentence, int> seen;
    for (const auto& imp : out.normalized.implications) {
      const int i = ++seen[imp.conclusion];
      if (imp.premises.empty()) {
        empty_premise_ports.insert(mapped(gadgets.at(imp.conclusion).f_edges[i - 1], rep));
      }
    }
  }
  for (const auto& id : out.plan.identifications) {
    const auto& f = gadgets.at(id.f_sentence).f_edges[id.f_port - 1];
    const auto& e = gadgets.at(id.e_sentence).e_edges[id.e_port - 1];
    post_check(mapped(f, rep) == mapped(e, rep),
               "port " + f.to_string() + " does not coincide with " + e.to_string());
  }

  for (const auto& [s, g] : gadgets) {
    GadgetProvenance prov;
    prov.shape = out.plan.shapes.at(s);
    // Two vertices of one gadget may share a class (a premise used by
    // consecutive implications of one conclusion), so compare with the image.
    std::vector<VertexLabel> image;
    for (const auto& v : g.complex.vertices()) {
      prov.vertex_map[v] = rep(v);
      image.push_back(rep(v));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::vector<Simplex> gadget_facets;
    for (const auto& f : g.complex.facets()) gadget_facets.push_back(mapped(f, rep));
    // Fan edges x_{i-1}x_i of one gadget can join two vertices of another, so
    // only triangles are required to be induced.
    const auto image_complex = Complex::from_facets(gadget_facets);
    post_check(std::all_of(gadget_facets.begin(), gadget_facets.end(),
                           [&](const Simplex& f) { return out.complex.contains(f); }),
               "gadget " + s + " is not a subcomplex");
    post_check(induced_subcomplex(out.complex, image).faces(2) == image_complex.faces(2),
               "gadget " + s + " does not own every triangle on its vertices");
    for (const auto& f : g.f_edges) prov.f_edges.push_back(mapped(f, rep));
    for (const auto& e : g.e_edges) prov.e_edges.push_back(mapped(e, rep));
    out.provenance.emplace(s, std::move(prov));
  }

  std::size_t merged_vertices = 0;
  for (const auto& [root, members] : out.classes) merged_vertices += members.size() - 1;
  post_check(out.complex.num_faces() + merged_vertices + out.plan.identifications.size() / 2 ==
                 united.num_faces(),
             "the quotient merged faces other than the glued ports");

  for (const auto& ff : free_faces(out.complex, 2)) {
    post_check(empty_premise_ports.count(ff.face) > 0,
               "unexpected free edge " + ff.face.to_string());
  }
  post_check(free_faces(out.complex, 2).size() == empty_premise_ports.size(),
             "an empty-premise port is not free");
  return out;
}

}  // namespace eeh
