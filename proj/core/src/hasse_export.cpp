#include <sstream>

#include "json.hpp"

#include "imbalance/lattice.hpp"

namespace imbalance {

namespace {

void require_covers(const LatticeUniverse& universe) {
  if (!universe.has_covers()) {
    throw Error(ErrorCode::ResourceLimit, "export needs a universe built by hasse()");
  }
}

}  // namespace

std::string hasse_json(const LatticeUniverse& universe) {
  require_covers(universe);
  nlohmann::json nodes = nlohmann::json::array();
  for (const PathLengthSequence& l : universe.elements()) {
    nodes.push_back(std::vector<Depth>(l.components().begin(), l.components().end()));
  }
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [lower, upper] : universe.cover_edges()) {
    covers.push_back({lower, upper});
  }
  nlohmann::ordered_json doc;
  doc["n"] = universe.n();
  doc["nodes"] = std::move(nodes);
  doc["covers"] = std::move(covers);
  return doc.dump();
}

std::string hasse_dot(const LatticeUniverse& universe) {
  require_covers(universe);
  std::ostringstream out;
  out << "digraph imbalance_" << universe.n() << " {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < universe.size(); ++i) {
    out << "  n" << i << " [label=\"" << universe.elements()[i].to_string() << "\"];\n";
  }
  for (const auto& [lower, upper] : universe.cover_edges()) {
    out << "  n" << upper << " -> n" << lower << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace imbalance
