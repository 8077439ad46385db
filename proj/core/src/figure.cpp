#include "trirealize/figure.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>
#include <utility>

#include "trirealize/error.hpp"

namespace trirealize {

std::optional<int> Triangle::slot_of(VertexIndex v) const {
  for (int k = 0; k < 3; ++k) {
    if (at(k) == v) return k;
  }
  return std::nullopt;
}

Figure::Figure(std::string name, std::vector<std::string> labels, std::vector<Triangle> triangles)
    : name_(std::move(name)), labels_(std::move(labels)), triangles_(std::move(triangles)) {
  std::unordered_map<std::string_view, VertexIndex> seen;
  for (VertexIndex v = 0; v < labels_.size(); ++v) {
    if (labels_[v].empty()) throw FigureError("vertex " + std::to_string(v) + " has an empty label");
    if (!seen.emplace(labels_[v], v).second) {
      throw FigureError("duplicate vertex label '" + labels_[v] + "'");
    }
  }
  if (triangles_.empty()) throw FigureError("figure has no triangles");
  for (TriangleIndex t = 0; t < triangles_.size(); ++t) {
    const auto& c = triangles_[t].corners;
    for (VertexIndex v : c) {
      if (v >= labels_.size()) {
        throw FigureError("triangle " + std::to_string(t) + " references vertex index " +
                          std::to_string(v) + " outside the vertex list");
      }
    }
    if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) {
      throw FigureError("triangle " + std::to_string(t) + " repeats a vertex");
    }
  }
  derive_incidence();
}

Figure Figure::from_labels(std::string name, std::vector<std::string> labels,
                           const std::vector<std::array<std::string, 3>>& triangles) {
  std::unordered_map<std::string, VertexIndex> index;
  for (VertexIndex v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
  std::vector<Triangle> tris;
  tris.reserve(triangles.size());
  for (const auto& corners : triangles) {
    Triangle tri;
    for (std::size_t k = 0; k < 3; ++k) {
      auto it = index.find(corners[k]);
      if (it == index.end()) {
        throw FigureError("triangle references unknown vertex '" + corners[k] + "'");
      }
      tri.corners[k] = it->second;
    }
    tris.push_back(tri);
  }
  return Figure(std::move(name), std::move(labels), std::move(tris));
}

std::optional<VertexIndex> Figure::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexIndex>(it - labels_.begin());
}

VertexIndex Figure::vertex(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw FigureError("unknown vertex '" + std::string(label) + "'");
}

const Fan& Figure::fan(VertexIndex v) const {
  const auto& comps = fans_.at(v);
  if (comps.size() != 1) {
    throw FigureError("vertex '" + labels_[v] + "' has " + std::to_string(comps.size()) +
                      " fan components");
  }
  return comps.front();
}

std::string Figure::describe_triangle(TriangleIndex t) const {
  const auto& tri = triangles_.at(t);
  return "T" + std::to_string(t) + " (" + labels_[tri.corners[0]] + "," + labels_[tri.corners[1]] +
         "," + labels_[tri.corners[2]] + ")";
}

void Figure::derive_incidence() {
  incident_.assign(labels_.size(), {});
  for (TriangleIndex t = 0; t < triangles_.size(); ++t) {
    for (int k = 0; k < 3; ++k) incident_[triangles_[t].at(k)].push_back({t, k});
  }

  fans_.assign(labels_.size(), {});
  for (VertexIndex v = 0; v < labels_.size(); ++v) {
    const auto& corners = incident_[v];
    const std::size_t m = corners.size();
    // Successor of corner i: the corner whose ccw-next vertex is i's ccw-prev.
    std::map<VertexIndex, std::size_t> by_next;
    std::map<VertexIndex, std::size_t> by_prev;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& tri = triangles_[corners[i].triangle];
      by_next.emplace(tri.next(corners[i].slot), i);
      by_prev.emplace(tri.prev(corners[i].slot), i);
    }
    auto successor = [&](std::size_t i) -> std::optional<std::size_t> {
      const auto& tri = triangles_[corners[i].triangle];
      auto it = by_next.find(tri.prev(corners[i].slot));
      if (it == by_next.end() || it->second == i) return std::nullopt;
      return it->second;
    };
    auto has_predecessor = [&](std::size_t i) {
      const auto& tri = triangles_[corners[i].triangle];
      auto it = by_prev.find(tri.next(corners[i].slot));
      return it != by_prev.end() && it->second != i;
    };

    std::vector<bool> visited(m, false);
    auto walk = [&](std::size_t start) {
      Fan fan;
      std::size_t cur = start;
      while (true) {
        visited[cur] = true;
        fan.corners.push_back(corners[cur]);
        auto nxt = successor(cur);
        if (!nxt) break;
        if (*nxt == start) {
          fan.closed = true;
          break;
        }
        if (visited[*nxt]) break;
        cur = *nxt;
      }
      if (fan.closed) {
        auto lowest = std::min_element(fan.corners.begin(), fan.corners.end(),
                                       [](const Corner& a, const Corner& b) {
                                         return a.triangle < b.triangle;
                                       });
        std::rotate(fan.corners.begin(), lowest, fan.corners.end());
      }
      fans_[v].push_back(std::move(fan));
    };

    // Open chains first, starting from corners nothing precedes.
    for (std::size_t i = 0; i < m; ++i) {
      if (!visited[i] && !has_predecessor(i)) walk(i);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!visited[i]) walk(i);
    }
  }
}

bool ValidationReport::has(Violation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::NotConnected: return "not edge-connected";
    case Violation::Kind::EdgeMultiplicity: return "edge multiplicity";
    case Violation::Kind::OrientationConflict: return "orientation conflict";
    case Violation::Kind::DuplicateTriangle: return "duplicate triangle";
    case Violation::Kind::FanSplit: return "fan not single chain/cycle";
    case Violation::Kind::IsolatedVertex: return "isolated vertex";
  }
  return "unknown";
}

ValidationReport validate_structure(const Figure& figure) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::string locus, std::string detail) {
    report.violations.push_back({kind, std::move(locus), std::move(detail)});
  };
  const auto& labels = figure.labels();
  auto edge_name = [&](VertexIndex a, VertexIndex b) {
    return "edge " + labels[a] + "-" + labels[b];
  };

  // Undirected edge -> triangles, and directed edge -> count.
  std::map<std::pair<VertexIndex, VertexIndex>, std::vector<TriangleIndex>> edges;
  std::map<std::pair<VertexIndex, VertexIndex>, int> directed;
  for (TriangleIndex t = 0; t < figure.triangle_count(); ++t) {
    const auto& tri = figure.triangle(t);
    for (int k = 0; k < 3; ++k) {
      VertexIndex a = tri.at(k);
      VertexIndex b = tri.next(k);
      edges[std::minmax(a, b)].push_back(t);
      ++directed[{a, b}];
    }
  }
  for (const auto& [edge, tris] : edges) {
    if (tris.size() > 2) {
      add(Violation::Kind::EdgeMultiplicity, edge_name(edge.first, edge.second),
          "shared by " + std::to_string(tris.size()) + " triangles");
    } else if (tris.size() == 2 && (directed[edge] == 2 || directed[{edge.second, edge.first}] == 2)) {
      add(Violation::Kind::OrientationConflict, edge_name(edge.first, edge.second),
          figure.describe_triangle(tris[0]) + " and " + figure.describe_triangle(tris[1]) +
              " traverse it in the same direction");
    }
  }

  std::map<std::array<VertexIndex, 3>, TriangleIndex> vertex_sets;
  for (TriangleIndex t = 0; t < figure.triangle_count(); ++t) {
    auto key = figure.triangle(t).corners;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = vertex_sets.emplace(key, t);
    if (!inserted) {
      add(Violation::Kind::DuplicateTriangle, figure.describe_triangle(t),
          "same vertices as " + figure.describe_triangle(it->second));
    }
  }

  // Connectivity over shared full edges.
  const std::size_t nt = figure.triangle_count();
  std::vector<std::vector<TriangleIndex>> adjacency(nt);
  for (const auto& [edge, tris] : edges) {
    for (std::size_t i = 0; i < tris.size(); ++i) {
      for (std::size_t j = i + 1; j < tris.size(); ++j) {
        adjacency[tris[i]].push_back(tris[j]);
        adjacency[tris[j]].push_back(tris[i]);
      }
    }
  }
  std::vector<bool> reached(nt, false);
  std::queue<TriangleIndex> queue;
  queue.push(0);
  reached[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    TriangleIndex t = queue.front();
    queue.pop();
    for (TriangleIndex u : adjacency[t]) {
      if (!reached[u]) {
        reached[u] = true;
        ++count;
        queue.push(u);
      }
    }
  }
  if (count != nt) {
    for (TriangleIndex t = 0; t < nt; ++t) {
      if (!reached[t]) {
        add(Violation::Kind::NotConnected, figure.describe_triangle(t),
            "shares no edge path with " + figure.describe_triangle(0));
        break;
      }
    }
  }

  for (VertexIndex v = 0; v < figure.vertex_count(); ++v) {
    const auto comps = figure.fan_components(v);
    if (comps.empty()) {
      add(Violation::Kind::IsolatedVertex, "vertex " + labels[v], "belongs to no triangle");
    } else if (comps.size() > 1) {
      add(Violation::Kind::FanSplit, "vertex " + labels[v],
          "incident triangles form " + std::to_string(comps.size()) + " separate fans");
    }
  }
  return report;
}

std::vector<VertexClass> classify_vertices(const Figure& figure) {
  std::vector<VertexClass> classes(figure.vertex_count(), VertexClass::Exterior);
  for (VertexIndex v = 0; v < figure.vertex_count(); ++v) {
    const auto comps = figure.fan_components(v);
    if (comps.size() == 1 && comps.front().closed) classes[v] = VertexClass::Interior;
  }
  return classes;
}

}  // namespace trirealize
