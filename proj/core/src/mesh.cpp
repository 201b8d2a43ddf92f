// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pstruct/errors.hpp"
#include "pstruct/format.hpp"

namespace pstruct {

namespace {

constexpr double kMinArea = 1e-14;
constexpr double kBoundaryTol = 1e-10;

using Edge = std::pair<int, int>;

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::map<Edge, int> edge_incidence(const Mesh& m) {
  std::map<Edge, int> count;
  for (const auto& el : m.elements)
    for (int e = 0; e < 3; ++e) ++count[make_edge(el[e], el[(e + 1) % 3])];
  return count;
}

// distance of a point to the analytic boundary, for domains that have one
double boundary_distance(const DomainSpec& spec, const Vec2& x) {
  switch (spec.kind) {
    case DomainSpec::Kind::UnitSquare: {
      const double dx = std::min(std::abs(x.x), std::abs(1.0 - x.x));
      const double dy = std::min(std::abs(x.y), std::abs(1.0 - x.y));
      return std::min(dx, dy);
    }
    case DomainSpec::Kind::UnitDisk:
      return std::abs(x.norm() - 1.0);
    case DomainSpec::Kind::Annulus: {
      const double r = x.norm();
      return std::min(std::abs(r - spec.r_in), std::abs(r - spec.r_out));
    }
    case DomainSpec::Kind::MeshFile:
      return 0.0;
  }
  return 0.0;
}

Vec2 project_to_boundary(const DomainSpec& spec, const Vec2& x) {
  switch (spec.kind) {
    case DomainSpec::Kind::UnitDisk: {
      const double r = x.norm();
      return x * (1.0 / r);
    }
    case DomainSpec::Kind::Annulus: {
      const double r = x.norm();
      const double target =
          std::abs(r - spec.r_in) <= std::abs(r - spec.r_out) ? spec.r_in : spec.r_out;
      return x * (target / r);
    }
    default:
      return x;  // polygonal boundaries are exact
  }
}

Mesh base_mesh(const DomainSpec& spec) {
  Mesh m;
  m.spec = spec;
  m.level = 0;
  switch (spec.kind) {
    case DomainSpec::Kind::UnitSquare:
      m.nodes = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
      m.elements = {{0, 1, 2}, {0, 2, 3}};
      m.on_boundary = {1, 1, 1, 1};
      break;
    case DomainSpec::Kind::UnitDisk: {
      m.nodes.push_back({0, 0});
      m.on_boundary.push_back(0);
      for (int k = 0; k < 6; ++k) {
        const double th = 2.0 * M_PI * k / 6.0;
        m.nodes.push_back({std::cos(th), std::sin(th)});
        m.on_boundary.push_back(1);
      }
      for (int k = 0; k < 6; ++k) m.elements.push_back({0, 1 + k, 1 + (k + 1) % 6});
      break;
    }
    case DomainSpec::Kind::Annulus: {
      const int ns = 8;
      for (int k = 0; k < ns; ++k) {
        const double th = 2.0 * M_PI * k / ns;
        m.nodes.push_back({spec.r_in * std::cos(th), spec.r_in * std::sin(th)});
        m.on_boundary.push_back(1);
      }
      for (int k = 0; k < ns; ++k) {
        const double th = 2.0 * M_PI * k / ns;
        m.nodes.push_back({spec.r_out * std::cos(th), spec.r_out * std::sin(th)});
        m.on_boundary.push_back(1);
      }
      for (int k = 0; k < ns; ++k) {
        const int in0 = k, in1 = (k + 1) % ns;
        const int out0 = ns + k, out1 = ns + (k + 1) % ns;
        m.elements.push_back({in0, out0, out1});
        m.elements.push_back({in0, out1, in1});
      }
      break;
    }
    case DomainSpec::Kind::MeshFile:
      throw MeshIoError("base_mesh: MeshFile domains are loaded, not built");
  }
  m.parent_edge.assign(m.nodes.size(), {-1, -1});
  return m;
}

}  // namespace

DomainSpec DomainSpec::annulus(double r_in, double r_out) {
  if (!(r_in > 0.0 && r_out > r_in)) throw std::invalid_argument("annulus requires 0 < r_in < r_out");
  return {Kind::Annulus, r_in, r_out, ""};
}

void Mesh::finalize() {
  const int n = n_nodes();
  areas.assign(elements.size(), 0.0);
  hat_gradients.assign(elements.size(), {});
  h_max = 0.0;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const auto& el = elements[e];
    for (int v = 0; v < 3; ++v)
      if (el[v] < 0 || el[v] >= n) throw Error("mesh element references missing node");
    const Vec2 p0 = nodes[static_cast<std::size_t>(el[0])];
    const Vec2 p1 = nodes[static_cast<std::size_t>(el[1])];
    const Vec2 p2 = nodes[static_cast<std::size_t>(el[2])];
    const double area = 0.5 * (p1 - p0).cross(p2 - p0);
    if (!(area > kMinArea)) throw Error("mesh element degenerate or not counter-clockwise");
    areas[e] = area;
    const Vec2 pts[3] = {p0, p1, p2};
    for (int i = 0; i < 3; ++i) {
      const Vec2 edge = pts[(i + 2) % 3] - pts[(i + 1) % 3];
      hat_gradients[e][static_cast<std::size_t>(i)] = edge.perp() * (1.0 / (2.0 * area));
      h_max = std::max(h_max, edge.norm());
    }
  }

  boundary_nodes.clear();
  for (int v = 0; v < n; ++v)
    if (on_boundary[static_cast<std::size_t>(v)]) boundary_nodes.push_back(v);

  // conformity: every edge borders one or two elements; single-incidence
  // edges are boundary edges and must connect boundary nodes
  for (const auto& [edge, cnt] : edge_incidence(*this)) {
    if (cnt > 2) throw Error("mesh not conforming: edge shared by more than two elements");
    if (cnt == 1) {
      if (!on_boundary[static_cast<std::size_t>(edge.first)] ||
          !on_boundary[static_cast<std::size_t>(edge.second)])
        throw Error("boundary edge with interior endpoint");
    }
  }

  if (spec.kind != DomainSpec::Kind::MeshFile) {
    for (int v : boundary_nodes)
      if (boundary_distance(spec, nodes[static_cast<std::size_t>(v)]) > kBoundaryTol)
        throw Error("boundary node off the analytic boundary");
  }
}

Mesh refine(const Mesh& coarse) {
  Mesh fine;
  fine.spec = coarse.spec;
  fine.level = coarse.level + 1;
  fine.nodes = coarse.nodes;
  fine.on_boundary = coarse.on_boundary;
  fine.parent_edge.assign(coarse.nodes.size(), {-1, -1});

  const auto incidence = edge_incidence(coarse);
  std::map<Edge, int> midpoint;
  auto midpoint_of = [&](int a, int b) {
    const Edge key = make_edge(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    Vec2 mid = (coarse.nodes[static_cast<std::size_t>(a)] + coarse.nodes[static_cast<std::size_t>(b)]) * 0.5;
    const bool on_bdry = incidence.at(key) == 1;
    if (on_bdry) mid = project_to_boundary(coarse.spec, mid);
    const int idx = static_cast<int>(fine.nodes.size());
    fine.nodes.push_back(mid);
    fine.on_boundary.push_back(on_bdry ? 1 : 0);
    fine.parent_edge.push_back({key.first, key.second});
    midpoint.emplace(key, idx);
    return idx;
  };

  for (const auto& el : coarse.elements) {
    const int a = el[0], b = el[1], c = el[2];
    const int ab = midpoint_of(a, b);
    const int bc = midpoint_of(b, c);
    const int ca = midpoint_of(c, a);
    fine.elements.push_back({a, ab, ca});
    fine.elements.push_back({ab, b, bc});
    fine.elements.push_back({ca, bc, c});
    fine.elements.push_back({ab, bc, ca});
  }
  fine.finalize();
  return fine;
}

Mesh build_mesh(const DomainSpec& spec, int level) {
  if (spec.kind == DomainSpec::Kind::MeshFile) return read_mesh_file(spec.path);
  if (level < 0 || level > 10) throw std::invalid_argument("mesh level must lie in [0, 10]");
  Mesh m = base_mesh(spec);
  m.finalize();
  for (int l = 0; l < level; ++l) m = refine(m);
  return m;
}

void write_mesh(std::ostream& os, const Mesh& mesh) {
  os << "NODES " << mesh.n_nodes() << "\n";
  for (const auto& p : mesh.nodes) os << format_double(p.x) << " " << format_double(p.y) << "\n";
  os << "ELEMENTS " << mesh.n_elements() << "\n";
  for (const auto& el : mesh.elements) os << el[0] << " " << el[1] << " " << el[2] << "\n";
  os << "BOUNDARY " << mesh.boundary_nodes.size() << "\n";
  for (int v : mesh.boundary_nodes) os << v << "\n";
}

void write_mesh_file(const std::string& path, const Mesh& mesh) {
  std::ofstream os(path);
  if (!os) throw MeshIoError("cannot open mesh file for writing: " + path);
  write_mesh(os, mesh);
  if (!os) throw MeshIoError("failed writing mesh file: " + path);
}

Mesh read_mesh(std::istream& is) {
  Mesh m;
  m.spec = DomainSpec::mesh_file("");
  std::string tag;
  long n = 0;
  if (!(is >> tag >> n) || tag != "NODES" || n < 3) throw MeshIoError("mesh file: expected NODES header");
  m.nodes.resize(static_cast<std::size_t>(n));
  for (auto& p : m.nodes)
    if (!(is >> p.x >> p.y)) throw MeshIoError("mesh file: bad node line");
  long ne = 0;
  if (!(is >> tag >> ne) || tag != "ELEMENTS" || ne < 1) throw MeshIoError("mesh file: expected ELEMENTS header");
  m.elements.resize(static_cast<std::size_t>(ne));
  for (auto& el : m.elements)
    if (!(is >> el[0] >> el[1] >> el[2])) throw MeshIoError("mesh file: bad element line");
  long nb = 0;
  if (!(is >> tag >> nb) || tag != "BOUNDARY" || nb < 0) throw MeshIoError("mesh file: expected BOUNDARY header");
  m.on_boundary.assign(m.nodes.size(), 0);
  for (long i = 0; i < nb; ++i) {
    int v;
    if (!(is >> v) || v < 0 || v >= m.n_nodes()) throw MeshIoError("mesh file: bad boundary index");
    m.on_boundary[static_cast<std::size_t>(v)] = 1;
  }
  m.parent_edge.assign(m.nodes.size(), {-1, -1});
  try {
    m.finalize();
  } catch (const Error& err) {
    throw MeshIoError(std::string("mesh file invalid: ") + err.what());
  }
  return m;
}

Mesh read_mesh_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw MeshIoError("cannot open mesh file: " + path);
  return read_mesh(is);
}

}  // namespace pstruct
