#include "exclugraph/families.hpp"

#include <charconv>
#include <string>

#include "exclugraph/error.hpp"

namespace exclugraph {
namespace {

struct KindName {
  FamilyKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {FamilyKind::cycle, "cycle"},       {FamilyKind::antihole, "antihole"},
    {FamilyKind::circulant, "circulant"}, {FamilyKind::complete, "complete"},
    {FamilyKind::empty, "empty"},       {FamilyKind::paley, "paley"},
    {FamilyKind::petersen, "petersen"}, {FamilyKind::path, "path"},
};

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParameterError("family " + std::string(what) + ": expected an integer, got '" +
                         std::string(text) + "'");
  }
  return value;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  FamilySpec spec;
  bool known = false;
  for (const auto& [kind, name] : kKindNames) {
    if (parts[0] == name) {
      spec.kind = kind;
      known = true;
    }
  }
  if (!known) throw ParameterError("unknown graph family '" + std::string(parts[0]) + "'");

  if (spec.kind == FamilyKind::petersen) {
    require(parts.size() == 1, "petersen takes no parameters");
    spec.size = 10;
    return spec;
  }
  require(parts.size() >= 2, std::string(parts[0]) + " needs a size, e.g. " + std::string(parts[0]) + ":5");
  spec.size = parse_int(parts[1], "size");
  if (spec.kind == FamilyKind::circulant) {
    require(parts.size() == 3, "circulant needs a connection set, e.g. circulant:8:1,4");
    for (std::size_t start = 0;;) {
      const std::size_t comma = parts[2].find(',', start);
      spec.distances.push_back(parse_int(parts[2].substr(start, comma - start), "distance"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    require(parts.size() == 2, std::string(parts[0]) + " takes a single size parameter");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out;
  for (const auto& [k, name] : kKindNames)
    if (k == kind) out = std::string(name);
  if (kind == FamilyKind::petersen) return out;
  out += ":" + std::to_string(size);
  if (kind == FamilyKind::circulant) {
    out += ":";
    for (std::size_t i = 0; i < distances.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(distances[i]);
    }
  }
  return out;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3, got " + std::to_string(n));
  return circulant_graph(n, {1});
}

Graph path_graph(int n) {
  require(n >= 1, "path requires n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete requires n >= 1");
  return complement(Graph(n));
}

Graph empty_graph(int n) {
  require(n >= 1, "empty requires n >= 1");
  return Graph(n);
}

Graph antihole_graph(int n) {
  require(n >= 3, "antihole requires n >= 3, got " + std::to_string(n));
  return complement(cycle_graph(n));
}

Graph circulant_graph(int n, const std::vector<int>& distances) {
  require(n >= 1, "circulant requires n >= 1");
  require(!distances.empty(), "circulant requires a non-empty connection set");
  Graph g(n);
  for (int d : distances) {
    require(d >= 1 && 2 * d <= n,
            "circulant distance " + std::to_string(d) + " must lie in [1, n/2] for n = " + std::to_string(n));
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + d) % n);
  }
  return g;
}

Graph paley_graph(int q) {
  require(is_prime(q), "paley requires a prime order (prime powers are not supported), got " +
                           std::to_string(q));
  require(q % 4 == 1, "paley requires q = 1 mod 4, got " + std::to_string(q));
  std::vector<bool> residue(q, false);
  for (int x = 1; x < q; ++x) residue[(x * x) % q] = true;
  Graph g(q);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (residue[v - u]) g.add_edge(u, v);
  return g;
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

Graph generate_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::cycle: return cycle_graph(spec.size);
    case FamilyKind::antihole: return antihole_graph(spec.size);
    case FamilyKind::circulant: return circulant_graph(spec.size, spec.distances);
    case FamilyKind::complete: return complete_graph(spec.size);
    case FamilyKind::empty: return empty_graph(spec.size);
    case FamilyKind::paley: return paley_graph(spec.size);
    case FamilyKind::petersen: return petersen_graph();
    case FamilyKind::path: return path_graph(spec.size);
  }
  throw ParameterError("unhandled graph family");
}

}  // namespace exclugraph
