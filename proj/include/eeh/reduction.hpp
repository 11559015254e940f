#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eeh/axiomset.hpp"
#include "eeh/complex.hpp"
#include "eeh/gadgets.hpp"

namespace eeh {

struct GadgetShape {
  int m = 0;  ///< implications concluding the sentence
  int l = 0;  ///< implications using the sentence as a premise
  bool operator==(const GadgetShape&) const = default;
};

/// One vertex identification: endpoint `f_endpoint` (0 = x_{i-1}, 1 = x_i)
/// of port f_i of `f_sentence` is glued to endpoint `e_endpoint` ('y' or
/// 'z') of port e_j of `e_sentence`.
struct Identification {
  Sentence f_sentence;
  int f_port = 0;
  int f_endpoint = 0;
  Sentence e_sentence;
  int e_port = 0;
  char e_endpoint = 'y';
  VertexLabel f_vertex;  ///< label in the disjoint union
  VertexLabel e_vertex;
};

struct GluingPlan {
  std::map<Sentence, GadgetShape> shapes;
  std::vector<Identification> identifications;
};

/// Label prefix of the gadget for sentence `s`.
std::string gadget_prefix(const Sentence& s);

/// Port assignment for a normalized instance. Implications are taken in list
/// order: the i-th implication concluding s owns f_i of s, and the j-th
/// implication with u among its premises owns e_j of u. Throws FormatError
/// if the instance is not normalized.
GluingPlan build_plan(const AxiomSetInstance& normalized);

std::map<Sentence, GadgetHandle> instantiate_gadgets(const GluingPlan& plan);
Complex disjoint_union(const std::map<Sentence, GadgetHandle>& gadgets);

struct PastingViolation {
  VertexLabel first;
  VertexLabel second;
  VertexLabel shared;  ///< a vertex in both stars
  std::string to_string() const;
};

/// Within every identification class, member vertices must have pairwise
/// vertex-disjoint stars in `disjoint_union`; that keeps the quotient from
/// merging faces that were not meant to be glued.
std::optional<PastingViolation> check_pasting(const GluingPlan& plan,
                                              const Complex& disjoint_union);

struct GadgetProvenance {
  GadgetShape shape;
  std::vector<Simplex> f_edges;  ///< after the quotient
  std::vector<Simplex> e_edges;
  std::map<VertexLabel, VertexLabel> vertex_map;  ///< original label -> label in K
};

struct ReductionOutput {
  Complex complex;
  AxiomSetInstance normalized;
  NormalizationReport normalization;
  GluingPlan plan;
  std::map<Sentence, GadgetProvenance> provenance;
  /// Merged vertices: representative -> all original labels in the class.
  std::map<VertexLabel, std::set<VertexLabel>> classes;

  /// Expansion budget left for the complex once forced axioms are paid.
  int budget() const { return normalized.budget; }
};

/// Normalizes, builds one gadget per sentence, glues ports and takes the
/// quotient (class representative = least label). Throws InfeasibleInstance
/// if normalization exhausts the budget, and PastingError if any
/// construction check fails.
ReductionOutput assemble(const AxiomSetInstance& instance);

}  // namespace eeh
