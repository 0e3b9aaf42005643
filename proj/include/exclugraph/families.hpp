#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exclugraph/graph.hpp"

namespace exclugraph {

enum class FamilyKind { cycle, antihole, circulant, complete, empty, paley, petersen, path };

struct FamilySpec {
  FamilyKind kind = FamilyKind::cycle;
  int size = 0;
  std::vector<int> distances;  // circulant connection set

  // Textual form accepted by the CLI: "cycle:5", "circulant:8:1,4", "petersen".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

Graph generate_family(const FamilySpec& spec);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph antihole_graph(int n);
Graph circulant_graph(int n, const std::vector<int>& distances);
// Quadratic-residue graph over the prime field Z_q, q prime and q = 1 mod 4.
Graph paley_graph(int q);
Graph petersen_graph();

}  // namespace exclugraph
