#include "berkrh/ledger.hpp"

#include <map>
#include <set>

#include "berkrh/errors.hpp"

namespace berkrh {

std::string to_string(EndKind k) { return k == EndKind::TY ? "TY" : "T_in"; }

void validate_graph(const TriangGraph& G) {
  if (G.vertices.empty()) throw InputError("vertices: empty graph");
  if (G.deg < 1) throw InputError("deg: must be positive");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < G.vertices.size(); ++i) {
    const auto& v = G.vertices[i];
    if (!index.emplace(v.id, i).second) throw InputError("vertices[" + std::to_string(i) + "].id: duplicate " + v.id);
    if (v.deg_local != G.deg)
      throw InputError("vertices[" + std::to_string(i) + "].deg_local: " + std::to_string(v.deg_local) +
                       " differs from deg " + std::to_string(G.deg));
    if (v.ram_local < 0) throw InputError("vertices[" + std::to_string(i) + "].ram_local: negative");
  }
  auto need = [&](const std::string& id, const std::string& field) {
    auto it = index.find(id);
    if (it == index.end()) throw InputError(field + ": unknown vertex " + id);
    return it->second;
  };
  // Union-find for connectivity.
  std::vector<std::size_t> parent(G.vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < G.internal_edges.size(); ++e) {
    const auto& edge = G.internal_edges[e];
    const std::string field = "internal_edges[" + std::to_string(e) + "]";
    std::size_t a = need(edge.end_a.vertex, field + ".end_a.vertex");
    std::size_t b = need(edge.end_b.vertex, field + ".end_b.vertex");
    parent[find(a)] = find(b);
  }
  for (std::size_t e = 0; e < G.external_ends.size(); ++e)
    need(G.external_ends[e].vertex, "external_ends[" + std::to_string(e) + "].vertex");
  for (std::size_t i = 1; i < parent.size(); ++i)
    if (find(i) != find(0)) throw InputError("internal_edges: graph is not connected (" + G.vertices[i].id + ")");
}

bool check_additivity(const TriangGraph& G, long chi_total) {
  long sum = 0;
  for (const auto& v : G.vertices) sum += v.chi_piece;
  return sum == chi_total;
}

bool check_edge_cancellation(const TriangGraph& G) {
  for (const auto& e : G.internal_edges)
    if (e.end_a.nu + e.end_b.nu != 0) return false;
  return true;
}

long vertex_residual(const TriangGraph& G, const std::string& vertex_id) {
  const LedgerVertex* vertex = nullptr;
  for (const auto& v : G.vertices)
    if (v.id == vertex_id) vertex = &v;
  if (!vertex) throw InputError("unknown vertex " + vertex_id);
  long rhs = G.deg * vertex->chi_X_piece - vertex->ram_local;
  for (const auto& e : G.internal_edges) {
    if (e.end_a.vertex == vertex_id) rhs -= e.end_a.nu;
    if (e.end_b.vertex == vertex_id) rhs -= e.end_b.nu;
  }
  for (const auto& x : G.external_ends)
    if (x.vertex == vertex_id) rhs += x.kind == EndKind::TY ? -x.nu : x.nu;
  return vertex->chi_piece - rhs;
}

namespace {

RHReport global_report(const TriangGraph& G) {
  RHReport r;
  r.chi_Y = G.chi_total;
  r.deg = G.deg;
  for (const auto& v : G.vertices) {
    r.chi_X += v.chi_X_piece;
    r.ram_sum += v.ram_local;
  }
  for (const auto& x : G.external_ends)
    (x.kind == EndKind::TY ? r.nu_out : r.nu_in).push_back(NuTerm{x.center, x.log_radius, x.nu});
  r.lhs = r.chi_Y;
  finalize_report(r);
  return r;
}

}  // namespace

LedgerReport assemble_global_rh(const TriangGraph& G) {
  validate_graph(G);
  LedgerReport out;
  out.additivity = check_additivity(G, G.chi_total);
  out.cancellation = check_edge_cancellation(G);
  out.locally_balanced = true;
  for (const auto& v : G.vertices) {
    long r = vertex_residual(G, v.id);
    out.residuals.emplace_back(v.id, r);
    if (r != 0) out.locally_balanced = false;
  }
  if (out.additivity && out.cancellation) out.global = global_report(G);
  return out;
}

long infer_residual(const TriangGraph& G, const std::string& vertex_id) {
  RHReport r = global_report(G);
  long rest = r.lhs - r.rhs;
  for (const auto& v : G.vertices)
    if (v.id != vertex_id) rest -= vertex_residual(G, v.id);
  return rest;
}

}  // namespace berkrh
