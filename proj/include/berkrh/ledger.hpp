#pragma once

// Local-to-global bookkeeping over a triangulation graph. Each vertex is a
// piece of Y over one piece of X; internal edges are annuli whose two ends
// carry nu values; external ends are the TY / T_in directions of Y.
//
// Local residual at a vertex:
//   chi_piece - (deg * chi_X_piece - ram_local - sum nu(internal ends)
//                - sum nu(TY ends) + sum nu(T_in ends))

#include <optional>
#include <string>
#include <vector>

#include "berkrh/rhcheck.hpp"

namespace berkrh {

struct LedgerVertex {
  std::string id;
  long chi_piece = 0;
  long deg_local = 1;
  long ram_local = 0;
  long chi_X_piece = 0;
};

struct EdgeEnd {
  std::string vertex;
  long nu = 0;
};

struct LedgerEdge {
  std::string id;
  EdgeEnd end_a;
  EdgeEnd end_b;
};

enum class EndKind { TY, T_in };

struct ExternalEnd {
  std::string vertex;
  EndKind kind = EndKind::TY;
  long nu = 0;
  ProjQ center;
  Rational log_radius;
};

struct TriangGraph {
  std::vector<LedgerVertex> vertices;
  std::vector<LedgerEdge> internal_edges;
  std::vector<ExternalEnd> external_ends;
  long chi_total = 0;
  long deg = 1;
};

std::string to_string(EndKind k);

// References, connectivity, ram_local >= 0 and deg_local == deg everywhere.
// Throws InputError.
void validate_graph(const TriangGraph& G);

bool check_additivity(const TriangGraph& G, long chi_total);
bool check_edge_cancellation(const TriangGraph& G);

long vertex_residual(const TriangGraph& G, const std::string& vertex_id);

struct LedgerReport {
  bool additivity = false;
  bool cancellation = false;
  std::vector<std::pair<std::string, long>> residuals;  // vertex order
  bool locally_balanced = false;
  std::optional<RHReport> global;  // absent when a check above failed
};

LedgerReport assemble_global_rh(const TriangGraph& G);

// Residual of one vertex inferred from the global residual and the others.
long infer_residual(const TriangGraph& G, const std::string& vertex_id);

}  // namespace berkrh
