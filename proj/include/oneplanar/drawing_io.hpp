#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

// Drawing text format v1 (line oriented, `#` comments):
//   oneplane 1
//   vertices <N>
//   v <id> T|F
//   rot <id>: <n1> <n2> ...     counterclockwise; first neighbor = canonical anchor
//   end
// Serialization is canonical: vertices ascending, each rotation rotated so its
// smallest neighbor id comes first, LF line endings. Written files are
// bit-exact under round-trips.

inline void write_drawing(std::ostream& out, const OnePlaneDrawing& d) {
  out << "oneplane 1\n";
  out << "vertices " << d.vertex_count() << "\n";
  for (int v = 0; v < d.vertex_count(); v++)
    out << "v " << v << " " << (d.is_fake(v) ? 'F' : 'T') << "\n";
  for (int v = 0; v < d.vertex_count(); v++) {
    std::vector<int> nb = d.rs.neighbors(v);
    if (!nb.empty()) {
      auto anchor = std::min_element(nb.begin(), nb.end());
      std::rotate(nb.begin(), anchor, nb.end());
    }
    out << "rot " << v << ":";
    for (int u : nb) out << " " << u;
    out << "\n";
  }
  out << "end\n";
}

inline std::string drawing_to_string(const OnePlaneDrawing& d) {
  std::ostringstream os;
  write_drawing(os, d);
  return os.str();
}

/// Parses without validating; use read_drawing for the checked entry point.
inline OnePlaneDrawing read_drawing_raw(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  bool header = false, ended = false;
  std::vector<char> kind_seen;
  std::vector<VertexKind> kinds;
  std::vector<std::vector<int>> nbrs;

  auto at = [&]() { return "line " + std::to_string(lineno) + ": "; };
  while (std::getline(in, line)) {
    lineno++;
    std::istringstream ls(detail::strip_comment(line));
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "oneplane") {
      int version;
      require(static_cast<bool>(ls >> version) && version == 1, Errc::ParseError,
              at() + "unsupported version");
      header = true;
    } else if (tok == "vertices") {
      require(header, Errc::ParseError, at() + "missing 'oneplane 1' header");
      require(n < 0, Errc::ParseError, at() + "repeated vertex count");
      require(static_cast<bool>(ls >> n) && n >= 0, Errc::ParseError, at() + "bad vertex count");
      kind_seen.assign(n, 0);
      kinds.assign(n, VertexKind::True);
      nbrs.assign(n, {});
    } else if (tok == "v") {
      require(n >= 0, Errc::ParseError, at() + "'v' before 'vertices'");
      int id;
      std::string k;
      require(static_cast<bool>(ls >> id >> k), Errc::ParseError, at() + "bad vertex line");
      require(id >= 0 && id < n, Errc::ParseError, at() + "vertex id out of range");
      require(!kind_seen[id], Errc::ParseError, at() + "repeated vertex id");
      require(k == "T" || k == "F", Errc::ParseError, at() + "vertex tag must be T or F");
      kind_seen[id] = 1;
      kinds[id] = (k == "F") ? VertexKind::Fake : VertexKind::True;
    } else if (tok == "rot") {
      require(n >= 0, Errc::ParseError, at() + "'rot' before 'vertices'");
      std::string idtok;
      require(static_cast<bool>(ls >> idtok), Errc::ParseError, at() + "bad rot line");
      if (!idtok.empty() && idtok.back() == ':') idtok.pop_back();
      else {
        std::string colon;
        require(static_cast<bool>(ls >> colon) && colon == ":", Errc::ParseError,
                at() + "missing ':' in rot line");
      }
      int id;
      try {
        id = std::stoi(idtok);
      } catch (...) {
        fail(Errc::ParseError, at() + "bad rot vertex id");
      }
      require(id >= 0 && id < n, Errc::ParseError, at() + "rot vertex id out of range");
      require(nbrs[id].empty(), Errc::ParseError, at() + "repeated rot line");
      int u;
      while (ls >> u) {
        require(u >= 0 && u < n, Errc::ParseError, at() + "rot neighbor out of range");
        nbrs[id].push_back(u);
      }
    } else if (tok == "end") {
      ended = true;
      break;
    } else {
      fail(Errc::ParseError, at() + "unknown token '" + tok + "'");
    }
  }
  require(n >= 0, Errc::ParseError, "missing 'vertices <N>'");
  require(ended, Errc::ParseError, "missing 'end'");
  for (int v = 0; v < n; v++)
    require(kind_seen[v], Errc::ParseError, "missing 'v' line for vertex " + std::to_string(v));

  OnePlaneDrawing d;
  d.rs = RotationSystem::from_neighbor_lists(nbrs);
  d.kind = std::move(kinds);
  return d;
}

/// Checked load: refuses drawings whose invariants fail, reporting the
/// violation code.
inline OnePlaneDrawing read_drawing(std::istream& in) {
  OnePlaneDrawing d = read_drawing_raw(in);
  require_valid(d);
  return d;
}

inline OnePlaneDrawing drawing_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_drawing(is);
}

}  // namespace oneplanar
