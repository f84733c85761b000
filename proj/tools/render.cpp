#include "render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace arfold {

std::string format_position(int position, int denominator) {
  if (denominator == 1 || position % denominator == 0) return std::to_string(position / denominator);
  return std::to_string(position) + "/" + std::to_string(denominator);
}

namespace {

std::string vertex_name(const ARQuiver& q, RootId r) {
  const auto& v = q.vertices[r];
  if (!q.has_coordinates) return q.rs->format_root(r);
  return "(" + std::to_string(v.residue) + "," + format_position(v.position, q.denominator) + ")";
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

}  // namespace

std::string render_ascii(const ARQuiver& q) {
  const RootSystem& rs = *q.rs;
  std::ostringstream os;
  if (!q.has_coordinates) {
    os << "vertices (no coordinates):\n";
    for (RootId r = 0; r < q.size(); ++r) os << "  " << rs.format_root(r) << " residue " << q.vertices[r].residue << "\n";
  } else {
    std::set<int> cols;
    Node top = 0;
    for (const auto& v : q.vertices) {
      cols.insert(v.position);
      top = std::max(top, v.residue);
    }
    std::map<std::pair<Node, int>, std::string> cell;
    std::size_t width = 1;
    for (RootId r = 0; r < q.size(); ++r) {
      std::string s = rs.format_root(r);
      cell[{q.vertices[r].residue, q.vertices[r].position}] = s;
      width = std::max(width, s.size());
    }
    for (int c : cols) width = std::max(width, format_position(c, q.denominator).size());
    os << pad("i\\p", 4) << "|";
    for (int c : cols) os << ' ' << pad(format_position(c, q.denominator), width);
    os << "\n" << std::string(5 + cols.size() * (width + 1), '-') << "\n";
    for (Node i = 1; i <= top; ++i) {
      os << pad(std::to_string(i), 4) << "|";
      for (int c : cols) {
        auto it = cell.find({i, c});
        os << ' ' << pad(it == cell.end() ? "." : it->second, width);
      }
      os << "\n";
    }
  }
  os << "arrows:\n";
  auto arrows = q.arrows;
  if (q.has_coordinates) {
    auto key = [&](std::pair<RootId, RootId> e) {
      const auto &x = q.vertices[e.first], &y = q.vertices[e.second];
      return std::tuple(x.position, x.residue, y.position, y.residue);
    };
    std::sort(arrows.begin(), arrows.end(), [&](auto l, auto r) { return key(l) < key(r); });
  }
  for (auto [a, b] : arrows) os << "  " << vertex_name(q, a) << " -> " << vertex_name(q, b) << "\n";
  return os.str();
}

std::string render_dot(const ARQuiver& q, const std::string& name) {
  const RootSystem& rs = *q.rs;
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (RootId r : q.display_order()) {
    os << "  v" << r << " [label=\"" << rs.format_root(r);
    if (q.has_coordinates) os << "\\n" << vertex_name(q, r);
    os << "\"];\n";
  }
  for (auto [a, b] : q.arrows) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json quiver_to_json(const ARQuiver& q) {
  using nlohmann::json;
  const RootSystem& rs = *q.rs;
  json j;
  j["schema"] = "arfold/1";
  j["type"] = std::string(1, type_letter(rs.type()));
  j["rank"] = rs.rank();
  j["has_coordinates"] = q.has_coordinates;
  j["position_denominator"] = 2;
  j["native_denominator"] = q.denominator;
  auto order = q.display_order();
  std::vector<int> index(q.size());
  json verts = json::array();
  for (std::size_t k = 0; k < order.size(); ++k) {
    RootId r = order[k];
    index[r] = static_cast<int>(k);
    json v;
    v["root"] = rs.root(r);
    v["residue"] = q.vertices[r].residue;
    v["position"] = q.vertices[r].position * 2 / q.denominator;
    verts.push_back(v);
  }
  j["vertices"] = verts;
  json arrows = json::array();
  for (auto [a, b] : q.arrows) arrows.push_back({index[a], index[b]});
  j["arrows"] = arrows;
  return j;
}

ARQuiver quiver_from_json(const nlohmann::json& j, const RootSystem& rs) {
  if (j.value("schema", "") != "arfold/1") throw Error("unsupported quiver schema");
  if (j.at("rank").get<int>() != rs.rank() || j.at("type").get<std::string>() != std::string(1, type_letter(rs.type())))
    throw Error("quiver JSON is for a different root system");
  ARQuiver q;
  q.rs = &rs;
  q.has_coordinates = j.at("has_coordinates").get<bool>();
  q.denominator = j.at("native_denominator").get<int>();
  int pd = j.at("position_denominator").get<int>();
  q.vertices.resize(rs.num_positive());
  std::vector<RootId> ids;
  for (const auto& v : j.at("vertices")) {
    RootId r = rs.id(v.at("root").get<Coeffs>());
    int doubled = v.at("position").get<int>();
    if ((doubled * q.denominator) % pd) throw Error("position not representable");
    q.vertices[r] = {r, v.at("residue").get<Node>(), doubled * q.denominator / pd};
    ids.push_back(r);
  }
  if (static_cast<int>(ids.size()) != rs.num_positive()) throw Error("quiver JSON must list every positive root");
  for (const auto& a : j.at("arrows")) q.arrows.emplace_back(ids.at(a.at(0).get<int>()), ids.at(a.at(1).get<int>()));
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["ok"] = r.ok();
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  return j;
}

}  // namespace arfold
