#include "trirealize/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "trirealize/error.hpp"

namespace trirealize {

namespace {

using nlohmann::ordered_json;

const ordered_json& require(const ordered_json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw FigureError(std::string("document has no \"") + key + "\" field");
  return *it;
}

}  // namespace

FigureDocument parse_document(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw FigureError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw FigureError("malformed document: top level must be an object");

  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw FigureError("\"name\" must be a string");
    name = it->get<std::string>();
  }

  const auto& vertices = require(doc, "vertices");
  if (!vertices.is_array()) throw FigureError("\"vertices\" must be an array");
  std::vector<std::string> labels;
  for (const auto& v : vertices) {
    if (!v.is_string()) throw FigureError("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }

  const auto& triangles = require(doc, "triangles");
  if (!triangles.is_array()) throw FigureError("\"triangles\" must be an array");
  std::vector<std::array<std::string, 3>> corners;
  for (const auto& t : triangles) {
    if (!t.is_array() || t.size() != 3) {
      throw FigureError("each triangle must list exactly three vertex labels");
    }
    std::array<std::string, 3> tri;
    for (std::size_t k = 0; k < 3; ++k) {
      if (!t[k].is_string()) throw FigureError("triangle corners must be vertex labels");
      tri[k] = t[k].get<std::string>();
    }
    corners.push_back(std::move(tri));
  }

  Figure figure = Figure::from_labels(std::move(name), std::move(labels), corners);
  const ValidationReport report = validate_structure(figure);
  if (!report.ok()) {
    std::string msg = "invalid figure:";
    for (const auto& v : report.violations) {
      msg += " [" + std::string(to_string(v.kind)) + " at " + v.locus + ": " + v.detail + "]";
    }
    throw FigureError(msg);
  }

  FigureDocument result{std::move(figure), std::nullopt};
  if (auto it = doc.find("angles"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw AngleError("\"angles\" must be an array");
    std::vector<std::array<double, 3>> values;
    for (const auto& row : *it) {
      if (!row.is_array() || row.size() != 3) {
        throw AngleError("each angle row must hold three numbers");
      }
      std::array<double, 3> triple{};
      for (std::size_t k = 0; k < 3; ++k) {
        if (!row[k].is_number()) throw AngleError("angles must be numbers (degrees)");
        triple[k] = row[k].get<double>();
      }
      values.push_back(triple);
    }
    AngleAssignment angles(std::move(values));
    require_total(result.figure, angles);
    result.angles = std::move(angles);
  }
  return result;
}

Figure parse_figure(std::string_view text) { return parse_document(text).figure; }

FigureDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FigureError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string serialize(const Figure& figure, const AngleAssignment* angles) {
  ordered_json doc;
  doc["name"] = figure.name();
  doc["vertices"] = ordered_json::array();
  for (const auto& label : figure.labels()) doc["vertices"].push_back(label);
  doc["triangles"] = ordered_json::array();
  for (const auto& tri : figure.triangles()) {
    doc["triangles"].push_back(
        {figure.label(tri.corners[0]), figure.label(tri.corners[1]), figure.label(tri.corners[2])});
  }
  if (angles != nullptr) {
    doc["angles"] = ordered_json::array();
    for (const auto& triple : angles->values()) {
      doc["angles"].push_back({triple[0], triple[1], triple[2]});
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace trirealize
