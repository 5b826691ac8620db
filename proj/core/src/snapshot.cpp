#include "implinet/snapshot.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "implinet/errors.hpp"

namespace implinet {

namespace {

constexpr std::string_view kHeaderPrefix = "implinet-snapshot v1 n_bits=";

std::uint64_t parse_uint(std::string_view token, const std::string& where,
                         std::uint64_t max) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value > max)
    throw ParseError(where + ": expected an integer in [0, " +
                     std::to_string(max) + "], got \"" + std::string(token) +
                     "\"");
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ') ++end;
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

}  // namespace

Snapshot save_snapshot(const DirectedGraph& g) {
  Snapshot s;
  s.n_bits = g.n_bits();
  s.nodes.reserve(g.node_count());
  s.edges.reserve(g.edge_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    s.nodes.emplace_back(u, g.label(u).to_string());
    for (NodeId v : g.out_neighbors(u)) s.edges.emplace_back(u, v);
  }
  return s;
}

DirectedGraph load_snapshot(const Snapshot& s) {
  if (s.n_bits < 1 || s.n_bits > BitString::kMaxWidth)
    throw ParseError("header: n_bits must be in [1, 64], got " +
                     std::to_string(s.n_bits));
  DirectedGraph g(s.n_bits);
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const auto& [id, text] = s.nodes[i];
    const std::string where = "node record " + std::to_string(i);
    if (id != i)
      throw ParseError(where + ": ids must be dense and ascending, expected " +
                       std::to_string(i) + ", got " + std::to_string(id));
    BitString label;
    try {
      label = BitString::parse(text);
    } catch (const InputError& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (label.width() != s.n_bits)
      throw ParseError(where + ": label \"" + text + "\" does not have width " +
                       std::to_string(s.n_bits));
    g.add_node(label);
  }
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const auto& [src, dst] = s.edges[i];
    const std::string where = "edge record " + std::to_string(i) + " (" +
                              std::to_string(src) + " -> " +
                              std::to_string(dst) + ")";
    if (src >= g.node_count()) throw ParseError(where + ": unknown src id");
    if (dst >= g.node_count()) throw ParseError(where + ": unknown dst id");
    if (src == dst) throw ParseError(where + ": self-loop");
    if (!g.add_edge(src, dst)) throw ParseError(where + ": duplicate edge");
  }
  return g;
}

std::string to_text(const Snapshot& s) {
  std::ostringstream out;
  out << kHeaderPrefix << s.n_bits << '\n';
  for (const auto& [id, label] : s.nodes)
    out << "node " << id << ' ' << label << '\n';
  for (const auto& [src, dst] : s.edges)
    out << "edge " << src << ' ' << dst << '\n';
  return out.str();
}

Snapshot parse_text(std::string_view text) {
  Snapshot s;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || !line.starts_with(kHeaderPrefix))
    throw ParseError("line 1: expected header \"" + std::string(kHeaderPrefix) +
                     "<n>\"");
  s.n_bits = static_cast<int>(
      parse_uint(std::string_view(line).substr(kHeaderPrefix.size()),
                 "line 1: n_bits", BitString::kMaxWidth));
  bool edges_started = false;
  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    const std::string where = "line " + std::to_string(line_no);
    const auto fields = split_fields(line);
    if (fields.empty()) throw ParseError(where + ": blank line");
    if (fields.size() != 3)
      throw ParseError(where + ": expected 3 fields, got " +
                       std::to_string(fields.size()));
    constexpr std::uint64_t kMaxId = 0xffffffffu;
    if (fields[0] == "node") {
      if (edges_started)
        throw ParseError(where + ": node record after first edge record");
      s.nodes.emplace_back(
          static_cast<NodeId>(parse_uint(fields[1], where + ": id", kMaxId)),
          std::string(fields[2]));
    } else if (fields[0] == "edge") {
      edges_started = true;
      s.edges.emplace_back(
          static_cast<NodeId>(parse_uint(fields[1], where + ": src", kMaxId)),
          static_cast<NodeId>(parse_uint(fields[2], where + ": dst", kMaxId)));
    } else {
      throw ParseError(where + ": unknown record type \"" +
                       std::string(fields[0]) + "\"");
    }
  }
  return s;
}

std::string to_json(const Snapshot& s) {
  nlohmann::ordered_json j;
  j["n_bits"] = s.n_bits;
  auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& [id, label] : s.nodes) nodes.push_back({id, label});
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [src, dst] : s.edges) edges.push_back({src, dst});
  return j.dump();
}

Snapshot parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("snapshot JSON: ") + e.what());
  }
  if (!j.is_object())
    throw ParseError("snapshot JSON: top level must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "n_bits" && key != "nodes" && key != "edges")
      throw ParseError("snapshot JSON: unknown key \"" + key + "\"");
  Snapshot s;
  if (!j.contains("n_bits") || !j["n_bits"].is_number_integer())
    throw ParseError("snapshot JSON: \"n_bits\" must be an integer");
  s.n_bits = j["n_bits"].get<int>();
  if (!j.contains("nodes") || !j["nodes"].is_array())
    throw ParseError("snapshot JSON: \"nodes\" must be an array");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("snapshot JSON: \"edges\" must be an array");
  std::size_t i = 0;
  for (const auto& rec : j["nodes"]) {
    const std::string where = "nodes[" + std::to_string(i++) + "]";
    if (!rec.is_array() || rec.size() != 2 ||
        !rec[0].is_number_unsigned() || !rec[1].is_string())
      throw ParseError(where + ": expected [id, \"label\"]");
    if (rec[0].get<std::uint64_t>() > 0xffffffffu)
      throw ParseError(where + ": id out of range");
    s.nodes.emplace_back(rec[0].get<NodeId>(), rec[1].get<std::string>());
  }
  i = 0;
  for (const auto& rec : j["edges"]) {
    const std::string where = "edges[" + std::to_string(i++) + "]";
    if (!rec.is_array() || rec.size() != 2 ||
        !rec[0].is_number_unsigned() || !rec[1].is_number_unsigned())
      throw ParseError(where + ": expected [src, dst]");
    if (rec[0].get<std::uint64_t>() > 0xffffffffu ||
        rec[1].get<std::uint64_t>() > 0xffffffffu)
      throw ParseError(where + ": id out of range");
    s.edges.emplace_back(rec[0].get<NodeId>(), rec[1].get<NodeId>());
  }
  return s;
}

void write_snapshot_file(const DirectedGraph& g,
                         const std::filesystem::path& path) {
  const Snapshot s = save_snapshot(g);
  const std::string body = path.extension() == ".json" ? to_json(s) : to_text(s);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << body;
  if (path.extension() == ".json") out << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

DirectedGraph read_snapshot_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path.string());
  const std::string text = buffer.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw ParseError(path.string() + ": empty snapshot file");
  const Snapshot s =
      text[first] == '{' ? parse_json(text) : parse_text(text);
  return load_snapshot(s);
}

}  // namespace implinet
