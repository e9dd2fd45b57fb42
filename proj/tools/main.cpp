// Command-line surface for the 1-planar drawing toolkit. One subcommand per
// library operation; drawings stream through stdin/stdout in format v1 so
// commands compose in pipes. Exit codes: 0 success / true verdicts, 1 false
// verdicts, 2 errors (including oracle budget exhaustion).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oneplanar/acceptance.hpp"
#include "oneplanar/oneplanar.hpp"
#include "oneplanar/svg.hpp"

namespace {

using namespace oneplanar;

OnePlaneDrawing load_drawing(const std::string& path, bool validated = true) {
  if (path == "-") return validated ? read_drawing(std::cin) : read_drawing_raw(std::cin);
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  return validated ? read_drawing(in) : read_drawing_raw(in);
}

SimpleGraph load_graph(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  return read_graph(in);
}

void emit_drawing(const OnePlaneDrawing& d, const std::string& out) {
  if (out == "-") {
    write_drawing(std::cout, d);
    return;
  }
  std::ofstream os(out);
  require(os.good(), Errc::ParseError, "cannot open " + out);
  write_drawing(os, d);
}

std::string plan_text(const SimpleGraph& g, const CrossingPlan& plan) {
  std::ostringstream os;
  for (auto [i, j] : plan.pairs) {
    os << "cross (" << g.edges[i].u << "," << g.edges[i].v << ") x (" << g.edges[j].u << ","
       << g.edges[j].v << ")\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-planar drawing toolkit: combinatorial drawings, edge merging, "
               "exact crossing oracles and bound certificates"};
  app.require_subcommand(1);

  std::string in_path = "-", out_path = "-", emit_path, report_path = "report.txt";
  std::string gen_kind;
  int gen_param = 0;
  int max_k = 9, threads = 0;
  std::uint64_t budget = 100'000'000;
  bool flip_orientation = false, quick = false, no_labels = false;
  std::vector<int> host_edge_v, guest_edge_v;
  int host_face = -1;
  std::string guest_path;

  auto* c_validate = app.add_subcommand("validate", "check a drawing's invariants");
  c_validate->add_option("drawing", in_path, "drawing file (- for stdin)");

  auto* c_cross = app.add_subcommand("crossings", "print the drawing's crossing count");
  c_cross->add_option("drawing", in_path);

  auto* c_faces = app.add_subcommand("faces", "print the face census");
  c_faces->add_option("drawing", in_path);

  auto* c_max = app.add_subcommand("maximal", "is the drawing maximal?");
  c_max->add_option("drawing", in_path);

  auto* c_quasi = app.add_subcommand("quasi", "is the drawing quasi-optimal?");
  c_quasi->add_option("drawing", in_path);

  auto* c_dec = app.add_subcommand("decompose", "split into optimal pieces + tree");
  c_dec->add_option("drawing", in_path);
  c_dec->add_option("-o,--out-dir", out_path, "output directory")->required();

  auto* c_merge = app.add_subcommand("merge", "edge-merge two drawings");
  c_merge->add_option("host", in_path, "host drawing file")->required();
  c_merge->add_option("guest", guest_path, "guest drawing file")->required();
  c_merge->add_option("--host-edge", host_edge_v, "host edge endpoints u v")->expected(2);
  c_merge->add_option("--guest-edge", guest_edge_v, "guest edge endpoints u v")->expected(2);
  c_merge->add_option("--host-face", host_face, "host face id (default: lowest incident)");
  c_merge->add_flag("--flip-orientation", flip_orientation,
                    "identify lower guest endpoint with the higher host endpoint");
  c_merge->add_option("-o,--out", out_path, "output file (- for stdout)");

  auto* c_gen = app.add_subcommand("gen", "generate a drawing: k2222 | pdw K | odd-pair N");
  c_gen->add_option("kind", gen_kind, "k2222, pdw, odd-pair")->required();
  c_gen->add_option("param", gen_param, "K for pdw, N for odd-pair");
  c_gen->add_option("-o,--out", out_path);

  auto* c_cr = app.add_subcommand("cr-oracle", "exact crossing number of a graph");
  c_cr->add_option("graph", in_path, "graph file (- for stdin)");
  c_cr->add_option("--max-k", max_k, "largest k to try");
  c_cr->add_option("--budget", budget, "search node budget");
  c_cr->add_option("--threads", threads, "worker threads (0 = auto)");

  auto* c_1p = app.add_subcommand("oneplanar-oracle", "1-planarity of a graph");
  c_1p->add_option("graph", in_path);
  c_1p->add_option("--emit-drawing", emit_path, "write the witness drawing here");
  c_1p->add_option("--budget", budget);
  c_1p->add_option("--threads", threads);

  auto* c_census = app.add_subcommand("census7", "classify all 2^21 complements of K7");

  auto* c_bound = app.add_subcommand("bound", "certified crossing upper bound of a drawing");
  c_bound->add_option("drawing", in_path);

  auto* c_verify = app.add_subcommand("verify-paper", "run the full verification suite");
  c_verify->add_option("--report", report_path, "report file (default report.txt)");
  c_verify->add_option("--budget", budget);
  c_verify->add_option("--threads", threads);
  c_verify->add_flag("--quick", quick, "skip the minutes-long oracle checks");

  auto* c_svg = app.add_subcommand("svg", "render a drawing to SVG");
  c_svg->add_option("drawing", in_path);
  c_svg->add_option("-o,--out", out_path, "output file (- for stdout)");
  c_svg->add_flag("--no-labels", no_labels);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_validate->parsed()) {
      OnePlaneDrawing d = load_drawing(in_path, false);
      auto violations = validate(d);
      if (violations.empty()) {
        std::cout << "ok\n";
        return 0;
      }
      for (const auto& v : violations)
        std::cout << violation_name(v.code) << ": " << v.detail << "\n";
      return 1;
    }
    if (c_cross->parsed()) {
      std::cout << crossing_count(load_drawing(in_path)) << "\n";
      return 0;
    }
    if (c_faces->parsed()) {
      OnePlaneDrawing d = load_drawing(in_path);
      auto census = face_census(d);
      for (std::size_t i = 0; i < census.size(); i++) {
        std::cout << "face " << i << ": size=" << census[i].size << " eps=" << census[i].eps
                  << " boundary=";
        for (std::size_t j = 0; j < census[i].boundary.size(); j++)
          std::cout << (j ? " " : "") << census[i].boundary[j];
        std::cout << "\n";
      }
      std::cout << "faces: " << census.size() << "\n";
      std::cout << "odd-faces: " << odd_face_count(d) << "\n";
      return 0;
    }
    if (c_max->parsed()) {
      bool m = is_maximal(load_drawing(in_path));
      std::cout << (m ? "true" : "false") << "\n";
      return m ? 0 : 1;
    }
    if (c_quasi->parsed()) {
      OnePlaneDrawing d = load_drawing(in_path);
      QuasiVerdict v = is_quasi_optimal(d);
      if (!v.quasi) {
        std::cout << "false ("
                  << (v.reason == QuasiReason::NotMaximal
                          ? "NotMaximal"
                          : "CrossingDeficit(" + std::to_string(v.deficit) + ")")
                  << ")\n";
        return 1;
      }
      Decomposition dec = decompose(d);
      std::cout << "true\npieces: " << dec.piece_count() << "\n";
      return 0;
    }
    if (c_dec->parsed()) {
      OnePlaneDrawing d = load_drawing(in_path);
      Decomposition dec = decompose(d);
      std::filesystem::create_directories(out_path);
      for (int i = 0; i < dec.piece_count(); i++) {
        std::ofstream os(out_path + "/piece_" + std::to_string(i) + ".1p");
        write_drawing(os, dec.pieces[i]);
      }
      std::ofstream tree(out_path + "/tree.txt");
      for (const auto& s : dec.shared_edges)
        tree << "t " << s.piece_a << " " << s.piece_b << " " << s.orig_u << " " << s.orig_v
             << "\n";
      std::cout << "pieces: " << dec.piece_count() << "\n";
      return 0;
    }
    if (c_merge->parsed()) {
      OnePlaneDrawing host = load_drawing(in_path);
      std::ifstream gin(guest_path);
      require(gin.good(), Errc::ParseError, "cannot open " + guest_path);
      OnePlaneDrawing guest = read_drawing(gin);
      MergeSpec spec = default_merge_spec(host, guest);
      if (!host_edge_v.empty()) spec.host_edge = Edge(host_edge_v[0], host_edge_v[1]);
      if (!guest_edge_v.empty()) spec.guest_edge = Edge(guest_edge_v[0], guest_edge_v[1]);
      spec.host_face = host_face;
      spec.identify_lower_with_lower = !flip_orientation;
      emit_drawing(edge_merge(host, guest, spec).drawing, out_path);
      return 0;
    }
    if (c_gen->parsed()) {
      OnePlaneDrawing d;
      if (gen_kind == "k2222")
        d = gen_k2222();
      else if (gen_kind == "pdw")
        d = gen_pdw_optimal(gen_param);
      else if (gen_kind == "odd-pair")
        d = gen_odd_pair(gen_param);
      else
        fail(Errc::BadParameter, "unknown generator '" + gen_kind + "'");
      emit_drawing(d, out_path);
      return 0;
    }
    if (c_cr->parsed()) {
      SimpleGraph g = load_graph(in_path);
      OracleOptions opts{budget, threads};
      auto r = crossing_number(g, max_k, opts);
      for (const auto& rec : r.refutations)
        std::cout << "refuted: k=" << rec.k << " nodes=" << rec.nodes << "\n";
      if (r.status == OracleStatus::Found) {
        std::cout << "result: " << r.value << "\n";
        if (r.witness) std::cout << plan_text(g, *r.witness);
        return 0;
      }
      if (r.status == OracleStatus::Refuted) {
        std::cout << "result: none\nlower-bound: " << r.lower_bound << "\n";
        return 1;
      }
      std::cout << "result: undecided\nlower-bound: " << r.lower_bound << "\n";
      return 2;
    }
    if (c_1p->parsed()) {
      SimpleGraph g = load_graph(in_path);
      OracleOptions opts{budget, threads};
      auto r = is_one_planar(g, opts);
      if (r.status == OracleStatus::Found) {
        std::cout << "result: " << crossing_count(*r.witness) << "\n";
        if (!emit_path.empty()) emit_drawing(*r.witness, emit_path);
        return 0;
      }
      std::cout << (r.status == OracleStatus::Refuted ? "result: none\n" : "result: undecided\n");
      return r.status == OracleStatus::Refuted ? 1 : 2;
    }
    if (c_census->parsed()) {
      CensusReport rep = seven_vertex_census();
      std::cout << "two-matching: " << rep.two_matching << "\n"
                << "degree>=3: " << rep.degree_three << "\n"
                << "exceptional: empty=" << rep.exceptional_empty
                << " edge=" << rep.exceptional_edge
                << " two-path=" << rep.exceptional_two_path
                << " triangle=" << rep.exceptional_triangle << "\n";
      std::cout << "result: " << (rep.complete ? "complete" : "incomplete") << "\n";
      return rep.complete ? 0 : 1;
    }
    if (c_bound->parsed()) {
      BoundReport rep = crossing_upper_bound_report(load_drawing(in_path));
      std::cout << "bound: " << rep.bound << "\n";
      std::cout << "rules: ";
      for (std::size_t i = 0; i < rep.rules.size(); i++)
        std::cout << (i ? "," : "") << rep.rules[i];
      if (rep.rules.empty()) std::cout << "none";
      std::cout << "\n";
      return 0;
    }
    if (c_verify->parsed()) {
      AcceptanceOptions opts;
      opts.budget = budget;
      opts.threads = threads;
      opts.skip_slow = quick;
      auto results = run_acceptance_suite(opts);
      std::ofstream rep(report_path);
      bool all_pass = true;
      for (const auto& r : results) {
        std::string line = std::string(check_status_name(r.status)) + " " + r.name +
                           (r.detail.empty() ? "" : " - " + r.detail);
        std::cout << line << "\n";
        rep << line << "\n";
        if (r.status != CheckStatus::Pass) all_pass = false;
      }
      return all_pass ? 0 : 1;
    }
    if (c_svg->parsed()) {
      OnePlaneDrawing d = load_drawing(in_path);
      SvgOptions sopts;
      sopts.labels = !no_labels;
      if (out_path == "-")
        std::cout << svg_render(d, sopts);
      else
        svg_export(d, out_path, sopts);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
