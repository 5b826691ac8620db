#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include <doctest.h>

#include <implinet/bitstring.hpp>
#include <implinet/errors.hpp>
#include <implinet/graph.hpp>
#include <implinet/random.hpp>
#include <implinet/snapshot.hpp>

using implinet::BitString;
using implinet::DirectedGraph;
using implinet::IoError;
using implinet::load_snapshot;
using implinet::NodeId;
using implinet::parse_json;
using implinet::parse_text;
using implinet::ParseError;
using implinet::read_snapshot_file;
using implinet::save_snapshot;
using implinet::SeededRandom;
using implinet::Snapshot;
using implinet::to_json;
using implinet::to_text;
using implinet::write_snapshot_file;

namespace fs = std::filesystem;

namespace {

DirectedGraph fig2_pre_graph() {
  DirectedGraph g(4);
  g.add_node(BitString::parse("0000"));
  g.add_node(BitString::parse("1100"));
  g.add_node(BitString::parse("1101"));
  g.add_node(BitString::parse("1111"));
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

DirectedGraph random_graph(std::uint64_t seed, std::size_t nodes) {
  SeededRandom r(seed);
  DirectedGraph g(6);
  for (std::size_t i = 0; i < nodes; ++i) {
    g.add_node(BitString(6, r.uniform_below(64)));
  }
  for (std::size_t i = 0; i < nodes * 3; ++i) {
    const NodeId u = static_cast<NodeId>(r.uniform_below(nodes));
    const NodeId v = static_cast<NodeId>(r.uniform_below(nodes));
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("implinet-snap-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("snapshots are canonical: ascending nodes and edges") {
  DirectedGraph g(2);
  g.add_node(BitString::parse("00"));
  g.add_node(BitString::parse("01"));
  g.add_node(BitString::parse("11"));
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(0, 1);

  const Snapshot s = save_snapshot(g);
  CHECK(s.n_bits == 2);
  REQUIRE(s.nodes.size() == 3);
  CHECK(s.nodes[0] == std::pair<NodeId, std::string>{0, "00"});
  CHECK(s.nodes[2] == std::pair<NodeId, std::string>{2, "11"});
  REQUIRE(s.edges.size() == 3);
  CHECK(s.edges[0] == std::pair<NodeId, NodeId>{0, 1});
  CHECK(s.edges[1] == std::pair<NodeId, NodeId>{0, 2});
  CHECK(s.edges[2] == std::pair<NodeId, NodeId>{1, 2});
}

TEST_CASE("text form round-trips the worked-example graph exactly") {
  const DirectedGraph g = fig2_pre_graph();
  const Snapshot s = save_snapshot(g);
  const std::string text = to_text(s);
  CHECK(text ==
        "implinet-snapshot v1 n_bits=4\n"
        "node 0 0000\n"
        "node 1 1100\n"
        "node 2 1101\n"
        "node 3 1111\n"
        "edge 0 1\n"
        "edge 1 2\n"
        "edge 2 3\n");
  CHECK(parse_text(text) == s);

  const DirectedGraph back = load_snapshot(parse_text(text));
  CHECK(back.node_count() == 4);
  CHECK(back.edge_count() == 3);
  CHECK(back.label(1).to_string() == "1100");
  CHECK(back.has_edge(1, 2));
}

TEST_CASE("text and json round-trip random graphs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DirectedGraph g = random_graph(seed, 3 + seed % 18);
    const Snapshot s = save_snapshot(g);
    CHECK(parse_text(to_text(s)) == s);
    CHECK(parse_json(to_json(s)) == s);
    const Snapshot reloaded = save_snapshot(load_snapshot(s));
    CHECK(reloaded == s);
  }
}

TEST_CASE("empty graph round-trips") {
  DirectedGraph g(5);
  const Snapshot s = save_snapshot(g);
  CHECK(to_text(s) == "implinet-snapshot v1 n_bits=5\n");
  CHECK(parse_text(to_text(s)) == s);
  CHECK(parse_json(to_json(s)) == s);
  CHECK(load_snapshot(s).node_count() == 0);
}

TEST_CASE("json rendering is compact with stable key order") {
  const Snapshot s = save_snapshot(fig2_pre_graph());
  const std::string json = to_json(s);
  CHECK(json ==
        R"({"n_bits":4,"nodes":[[0,"0000"],[1,"1100"],[2,"1101"],[3,"1111"]],)"
        R"("edges":[[0,1],[1,2],[2,3]]})");
}

TEST_CASE("text parse errors name the offending line") {
  const std::string good =
      "implinet-snapshot v1 n_bits=2\nnode 0 01\nnode 1 10\nedge 0 1\n";
  CHECK(parse_text(good).nodes.size() == 2);

  CHECK_THROWS_WITH_AS(parse_text("bogus\n"),
                       doctest::Contains("line 1"), ParseError);

  const std::string head = "implinet-snapshot v1 n_bits=2\n";
  CHECK_THROWS_WITH_AS(parse_text(head + "node 0 01\n\nnode 1 10\n"),
                       doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_WITH_AS(parse_text(head + "node 0 01 junk\n"),
                       doctest::Contains("3 fields"), ParseError);
  CHECK_THROWS_WITH_AS(parse_text(head + "vertex 0 01\n"),
                       doctest::Contains("unknown record"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_text(head + "node 0 01\nedge 0 1\nnode 1 10\n"),
      doctest::Contains("after first edge"), ParseError);
}

TEST_CASE("semantic text errors surface when the graph is rebuilt") {
  const auto load_text = [](const std::string& text) {
    return load_snapshot(parse_text(text));
  };
  CHECK_THROWS_WITH_AS(load_text("implinet-snapshot v1 n_bits=0\nnode 0 0\n"),
                       doctest::Contains("n_bits"), ParseError);
  CHECK_THROWS_WITH_AS(load_text("implinet-snapshot v1 n_bits=65\n"),
                       doctest::Contains("n_bits"), ParseError);

  const std::string head = "implinet-snapshot v1 n_bits=2\n";
  CHECK_THROWS_WITH_AS(load_text(head + "node 1 01\n"),
                       doctest::Contains("dense"), ParseError);
  CHECK_THROWS_WITH_AS(load_text(head + "node 0 011\n"),
                       doctest::Contains("width"), ParseError);
  CHECK_THROWS_WITH_AS(load_text(head + "node 0 01\nedge 99 0\n"),
                       doctest::Contains("unknown src"), ParseError);
  CHECK_THROWS_WITH_AS(load_text(head + "node 0 01\nedge 0 99\n"),
                       doctest::Contains("unknown dst"), ParseError);
  CHECK_THROWS_WITH_AS(load_text(head + "node 0 01\nedge 0 0\n"),
                       doctest::Contains("self-loop"), ParseError);
  CHECK_THROWS_WITH_AS(
      load_text(head + "node 0 01\nnode 1 10\nedge 0 1\nedge 0 1\n"),
      doctest::Contains("duplicate"), ParseError);
}

TEST_CASE("json parse errors name the offending record") {
  CHECK_THROWS_WITH_AS(parse_json("[1,2]"),
                       doctest::Contains("top level"), ParseError);
  CHECK_THROWS_WITH_AS(parse_json("{nope"),
                       doctest::Contains("snapshot JSON"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_json(R"({"n_bits":2,"nodes":[],"edges":[],"extra":1})"),
      doctest::Contains("unknown key"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_json(R"({"n_bits":"2","nodes":[],"edges":[]})"),
      doctest::Contains("n_bits"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_json(R"({"n_bits":2,"nodes":[[0,"01"],[1,7]],"edges":[]})"),
      doctest::Contains("nodes[1]"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_json(R"({"n_bits":2,"nodes":[[0,"01"]],"edges":[[0]]})"),
      doctest::Contains("edges[0]"), ParseError);
}

TEST_CASE("load_snapshot rejects inconsistent records") {
  Snapshot s;
  s.n_bits = 2;
  s.nodes = {{0, "01"}, {2, "10"}};
  CHECK_THROWS_WITH_AS(load_snapshot(s), doctest::Contains("dense"),
                       ParseError);

  s.nodes = {{0, "01"}, {1, "101"}};
  CHECK_THROWS_WITH_AS(load_snapshot(s), doctest::Contains("width"),
                       ParseError);

  s.nodes = {{0, "01"}, {1, "10"}};
  s.edges = {{0, 1}, {0, 1}};
  CHECK_THROWS_WITH_AS(load_snapshot(s), doctest::Contains("duplicate"),
                       ParseError);
}

TEST_CASE("files pick a rendering by extension and sniff on read") {
  TempDir dir;
  const DirectedGraph g = fig2_pre_graph();

  const fs::path text_path = dir.path / "g.snap";
  write_snapshot_file(g, text_path);
  std::ifstream text_in(text_path);
  std::string first_line;
  std::getline(text_in, first_line);
  CHECK(first_line == "implinet-snapshot v1 n_bits=4");
  CHECK(save_snapshot(read_snapshot_file(text_path)) == save_snapshot(g));

  const fs::path json_path = dir.path / "g.json";
  write_snapshot_file(g, json_path);
  std::ifstream json_in(json_path);
  std::string json_line;
  std::getline(json_in, json_line);
  CHECK(json_line.front() == '{');
  CHECK(save_snapshot(read_snapshot_file(json_path)) == save_snapshot(g));
}

TEST_CASE("file errors map to io and parse errors") {
  TempDir dir;
  CHECK_THROWS_AS(read_snapshot_file(dir.path / "missing.snap"), IoError);

  const fs::path empty_path = dir.path / "empty.snap";
  std::ofstream(empty_path).close();
  CHECK_THROWS_AS(read_snapshot_file(empty_path), ParseError);

  const fs::path bad_dir = dir.path / "no-such-dir" / "g.snap";
  CHECK_THROWS_AS(write_snapshot_file(fig2_pre_graph(), bad_dir), IoError);
}
