// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_MESH_HPP
#define PSTRUCT_MESH_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "pstruct/geometry.hpp"

namespace pstruct {

/// Planar computational domain.
struct DomainSpec {
  enum class Kind { UnitSquare, UnitDisk, Annulus, MeshFile };

  Kind kind = Kind::UnitSquare;
  double r_in = 0.5;   // Annulus only
  double r_out = 1.0;  // Annulus only
  std::string path;    // MeshFile only

  static DomainSpec unit_square() { return {}; }
  static DomainSpec unit_disk() { return {Kind::UnitDisk, 0.5, 1.0, ""}; }
  static DomainSpec annulus(double r_in, double r_out);
  static DomainSpec mesh_file(std::string path) { return {Kind::MeshFile, 0.5, 1.0, std::move(path)}; }

  /// True when the analytic boundary is C^2 (disk, annulus).
  bool smooth_boundary() const { return kind == Kind::UnitDisk || kind == Kind::Annulus; }
};

/// Conforming triangle mesh. Triangles are counter-clockwise; nodes flagged
/// as boundary lie on the analytic domain boundary (within 1e-10 for curved
/// domains). Refinement appends nodes, so coarse node indices are preserved
/// and `parent_edge` records the two coarse endpoints of each new node.
struct Mesh {
  DomainSpec spec;
  int level = 0;
  double h_max = 0.0;

  std::vector<Vec2> nodes;
  std::vector<std::array<int, 3>> elements;
  std::vector<int> boundary_nodes;  // sorted, unique
  std::vector<char> on_boundary;    // size nodes.size()

  // per-node refinement provenance: {-1,-1} for base-mesh nodes
  std::vector<std::array<int, 2>> parent_edge;

  // cached element geometry
  std::vector<double> areas;
  std::vector<std::array<Vec2, 3>> hat_gradients;

  int n_nodes() const { return static_cast<int>(nodes.size()); }
  int n_elements() const { return static_cast<int>(elements.size()); }

  /// Recomputes areas, P1 hat-function gradients and h_max; verifies
  /// positive areas, conformity and boundary-node placement. Throws Error
  /// on violation.
  void finalize();
};

/// Builds the level-L mesh of the domain by L uniform quadrisection passes
/// of the base mesh, projecting new boundary nodes onto the analytic
/// boundary. Base meshes: unit square 2 triangles, unit disk 6, annulus 16.
/// Requires 0 <= level <= 10 (element count grows by 4 per level).
/// For MeshFile domains the level is ignored and the file is loaded.
Mesh build_mesh(const DomainSpec& spec, int level);

/// One uniform refinement pass.
Mesh refine(const Mesh& coarse);

/// Plain-text mesh format:
///   NODES n        followed by n lines "x y"
///   ELEMENTS m     followed by m lines "i j k"  (0-based, ccw)
///   BOUNDARY k     followed by k node indices, one per line
/// Coordinates round-trip bit-exactly (shortest exact decimal form).
void write_mesh(std::ostream& os, const Mesh& mesh);
void write_mesh_file(const std::string& path, const Mesh& mesh);
Mesh read_mesh(std::istream& is);
Mesh read_mesh_file(const std::string& path);

}  // namespace pstruct

#endif
