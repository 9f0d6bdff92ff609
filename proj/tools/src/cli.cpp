#include "gr/tools/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gr/audit.hpp"
#include "gr/error.hpp"
#include "gr/graph_io.hpp"
#include "gr/isoperimetry.hpp"
#include "gr/ordering_io.hpp"
#include "gr/rearrange.hpp"
#include "gr/tools/reproduce.hpp"
#include "gr/tools/svg.hpp"

namespace gr::tools {

namespace {

namespace fs = std::filesystem;

constexpr int kExitHypothesis = 1;
constexpr int kExitUsage = 2;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  return in;
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  return out;
}

std::uint64_t resolve_seed(const RunConfig& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("GR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, std::string("GR_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

Graph load_graph(const RunConfig& c) {
  if (c.graph.starts_with("file:")) {
    auto in = open_input(c.graph.substr(5));
    return read_graph(in);
  }
  return parse_graph_spec(c.graph);
}

std::string canonical_ordering(const Graph& g) {
  switch (g.family()) {
    case Family::GridWindow: return "spiral";
    case Family::Ladder: return "snake";
    case Family::Path: return "path";
    case Family::RegularTree: return "tree-bfs";
  }
  return "spiral";
}

Ordering load_ordering(const RunConfig& c, const Graph& g) {
  const std::string name = c.ordering.empty() ? canonical_ordering(g) : c.ordering;
  if (name.starts_with("file:")) {
    auto in = open_input(name.substr(5));
    return read_ordering(in, g, fs::path(name.substr(5)).stem().string());
  }
  if (name == "random") return random_center_ordering(g, 2, resolve_seed(c));
  if (name.starts_with("random:")) {
    try {
      return random_center_ordering(g, 2, std::stoull(name.substr(7)));
    } catch (const std::invalid_argument&) {
      throw Error(Errc::InvalidArgument, "bad seed in ordering " + name);
    }
  }
  return Ordering::by_name(g, name);
}

LatticeFunction load_function(const RunConfig& c, const Graph& g) {
  if (c.input.empty()) throw Error(Errc::InvalidArgument, c.command + " needs --in FILE");
  auto in = open_input(c.input);
  return read_function(in, g);
}

std::vector<PNorm> parse_p_list(const std::string& text) {
  std::vector<PNorm> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(PNorm::parse(item));
  if (out.empty()) throw Error(Errc::InvalidArgument, "empty --p list");
  return out;
}

BoundaryKind parse_kind(const std::string& text) {
  if (text == "edge") return BoundaryKind::Edge;
  if (text == "vertex") return BoundaryKind::Vertex;
  throw Error(Errc::InvalidArgument, "kind must be edge or vertex, got " + text);
}

FamilyKey parse_family(const RunConfig& c) {
  if (c.family.empty()) return FamilyKey::of(load_graph(c));
  if (c.family == "grid") return FamilyKey::grid();
  if (c.family == "ladder") return FamilyKey::ladder();
  if (c.family == "path") return FamilyKey::path();
  if (c.family.starts_with("tree:")) {
    try {
      return FamilyKey::tree(std::stoi(c.family.substr(5)));
    } catch (const std::exception&) {
    }
  }
  throw Error(Errc::InvalidArgument, "family must be grid, ladder, path or tree:d, got " + c.family);
}

/// Human table or CSV, chosen by --format.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void write_csv(std::ostream& out) const {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

  void write_text(std::ostream& out) const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t i = 0; i < header_.size(); ++i) width[i] = header_[i].size();
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
      out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

  void emit(const RunConfig& c, std::ostream& out, const std::string& file) const {
    if (c.format == "csv")
      write_csv(out);
    else
      write_text(out);
    if (!c.out.empty()) {
      auto f = open_output(fs::path(c.out) / file);
      write_csv(f);
    }
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>)
    return yes_no(*v);
  else
    return std::to_string(*v);
}

std::string format_double(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::setprecision(17) << v;
  return s.str();
}

std::string witness_text(const Graph& box, const VertexSet& witness) {
  std::string out;
  for (VertexId v : witness) {
    if (!out.empty()) out += ';';
    out += box.has_coords() ? std::to_string(box.coord(v)->x) + " " + std::to_string(box.coord(v)->y)
                            : std::to_string(v);
  }
  return out;
}

int cmd_profile(const RunConfig& c, std::ostream& out) {
  const FamilyKey family = parse_family(c);
  const BoundaryKind kind = parse_kind(c.kind);
  ProfileSource source = ProfileSource::PreferClosedForm;
  if (c.source == "oracle")
    source = ProfileSource::OracleOnly;
  else if (c.source == "closed")
    source = ProfileSource::ClosedFormOnly;
  else if (c.source != "auto")
    throw Error(Errc::InvalidArgument, "source must be auto, oracle or closed");
  const auto profile = compute_profile(family, kind, c.nmax, source, c.box);
  std::vector<std::string> header{"N", "value", "provenance"};
  if (c.witness) header.push_back("witness");
  Table t(header);
  for (const auto& e : profile.entries()) {
    std::vector<std::string> row{std::to_string(e.n), std::to_string(e.value), e.provenance.to_string()};
    if (c.witness) row.push_back(e.witness ? witness_text(*e.box, *e.witness) : "");
    t.row(std::move(row));
  }
  t.emit(c, out, "profile.csv");
  return 0;
}

int cmd_rearrange(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c);
  const auto star = rearrange(load_function(c, g), load_ordering(c, g));
  write_function(out, star);
  if (!c.out.empty()) {
    auto f = open_output(fs::path(c.out) / "rearranged.csv");
    write_function(f, star);
  }
  return 0;
}

int cmd_norms(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c);
  const auto f = load_function(c, g);
  const Ordering o = load_ordering(c, g);
  const auto star = rearrange(f, o);
  std::optional<RearrangementBounds> bounds;
  try {
    bounds = RearrangementBounds::for_ordering(o);
  } catch (const Error& e) {
    if (e.code() != Errc::Unsupported) throw;
  }
  Table t({"p", "grad_f", "grad_f_star", "rule", "bound", "holds"});
  bool all_hold = true;
  for (const PNorm& p : parse_p_list(c.p_list)) {
    std::vector<std::string> row{p.to_string(), format_double(grad_lp_norm(f, p).value),
                                 format_double(grad_lp_norm(star, p).value)};
    std::optional<PolyaSzegoResult> check;
    if (bounds) {
      try {
        check = polya_szego_check(f, o, p, *bounds);
      } catch (const Error& e) {
        if (e.code() != Errc::Unsupported) throw;
      }
    }
    if (check) {
      all_hold = all_hold && check->holds;
      row.insert(row.end(), {std::string(to_string(check->rule)), format_double(check->rhs), yes_no(check->holds)});
    } else {
      row.insert(row.end(), {"none", "", ""});
    }
    t.row(std::move(row));
  }
  t.emit(c, out, "norms.csv");
  return all_hold ? 0 : kExitHypothesis;
}

int cmd_audit(const RunConfig& c, std::ostream& out) {
  AuditSelection selection;
  std::stringstream ss(c.theorems);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "2")
      selection.edge = true;
    else if (item == "3")
      selection.containment = true;
    else if (item == "4")
      selection.full_range = true;
    else
      throw Error(Errc::InvalidArgument, "theorems must be drawn from 2,3,4, got " + item);
  }
  const Graph g = load_graph(c);
  const Ordering o = load_ordering(c, g);
  const AuditReport r = audit(o, c.nmax, selection);

  Table t({"N", "prefix_edge_boundary", "edge_minimum", "containment_index", "vertex_minimum", "boundary_equality",
           "containment_in_range"});
  for (const auto& row : r.rows)
    t.row({std::to_string(row.n), opt(row.prefix_edge_boundary), opt(row.edge_minimum), opt(row.containment_index),
           opt(row.vertex_minimum), opt(row.boundary_equality), opt(row.containment_in_range)});
  t.emit(c, out, "audit.csv");

  if (c.format != "csv") {
    out << "\nordering " << r.ordering << " on " << r.graph << ", N = 1.." << r.nmax << '\n';
    if (r.edge_constants)
      out << "edge constants: alpha = " << format_rational(r.edge_constants->alpha)
          << " (beta = 0), beta = " << format_rational(r.edge_constants->beta) << " (alpha = 1)\n";
    if (r.containment) out << "containment constant: c = " << r.containment->c << '\n';
    if (r.full_range) {
      out << "full range: " << (r.full_range->holds ? "holds" : "fails");
      if (r.full_range->first_failure) out << " (first failure at N = " << *r.full_range->first_failure << ")";
      out << '\n';
    }
    for (const auto& caveat : r.caveats) out << "note: " << caveat << '\n';
  }
  return (r.full_range && !r.full_range->holds) ? kExitHypothesis : 0;
}

int cmd_counterexample(const RunConfig& c, std::ostream& out) {
  RunConfig local = c;
  if (local.graph.empty()) local.graph = "grid:4";
  const Graph g = load_graph(local);
  const Ordering o = load_ordering(local, g);
  const auto r = l2_counterexample(o);
  out << "ordering " << o.name() << '\n';
  out << "case " << (r.center_plus ? "center-plus block" : "peaked plus n=" + std::to_string(*r.n)) << '\n';
  out << "energy " << format_rational(r.energy) << '\n';
  out << "rearranged_energy " << format_rational(r.rearranged_energy) << '\n';
  out << "ratio_squared " << format_rational(r.ratio_squared) << '\n';
  out << "ratio " << format_double(r.ratio) << '\n';
  if (!c.out.empty()) {
    auto f = open_output(fs::path(c.out) / "witness.csv");
    write_function(f, r.witness);
    auto s = open_output(fs::path(c.out) / "witness_rearranged.csv");
    write_function(s, r.rearranged);
  } else {
    write_function(out, r.witness);
  }
  return 0;
}

int cmd_reproduce(const RunConfig& c, std::ostream& out) {
  const fs::path dir = c.out.empty() ? fs::path("reproduce") : fs::path(c.out);
  const ReproReport r = reproduce(dir);
  for (const auto& check : r.checks)
    if (!check.match)
      out << "MISMATCH " << check.table << ": " << check.item << " expected " << check.expected << " computed "
          << check.computed << '\n';
  out << r.checks.size() << " checks, " << r.mismatches() << " mismatches, tables in " << dir.string() << '\n';
  return r.mismatches() == 0 ? 0 : kExitHypothesis;
}

int cmd_render(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c);
  const std::string svg = c.input.empty() ? render_ordering_svg(load_ordering(c, g), static_cast<std::size_t>(c.ranks))
                                          : render_function_svg(load_function(c, g));
  if (c.out.empty()) {
    out << svg;
  } else {
    auto f = open_output(fs::path(c.out) / "render.svg");
    f << svg;
  }
  return 0;
}

int cmd_export(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c);
  if (c.out.empty()) {
    write_graph(out, g);
    if (!c.ordering.empty()) write_ordering(out, load_ordering(c, g));
    return 0;
  }
  auto gf = open_output(fs::path(c.out) / "graph.txt");
  write_graph(gf, g);
  if (!c.ordering.empty()) {
    auto of = open_output(fs::path(c.out) / "ordering.csv");
    write_ordering(of, load_ordering(c, g));
  }
  if (!c.input.empty()) {
    auto ff = open_output(fs::path(c.out) / "function.csv");
    write_function(ff, load_function(c, g));
  }
  return 0;
}

}  // namespace

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.nmax < 1) throw Error(Errc::InvalidArgument, "--nmax must be >= 1");
    if (c.format != "table" && c.format != "csv") throw Error(Errc::InvalidArgument, "--format must be table or csv");
    if (c.command == "profile") return cmd_profile(c, out);
    if (c.command == "rearrange") return cmd_rearrange(c, out);
    if (c.command == "norms") return cmd_norms(c, out);
    if (c.command == "audit") return cmd_audit(c, out);
    if (c.command == "counterexample") return cmd_counterexample(c, out);
    if (c.command == "reproduce") return cmd_reproduce(c, out);
    if (c.command == "render") return cmd_render(c, out);
    if (c.command == "export") return cmd_export(c, out);
    throw Error(Errc::InvalidArgument, "unknown command " + c.command);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::HypothesisFailure ? kExitHypothesis : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Discrete rearrangements and isoperimetric audits on lattice graphs", "gr"};
  app.set_config("--config", "", "key = value file mirroring the flags; flags win");
  app.require_subcommand(1);
  app.add_option("--graph", c.graph, "grid:w, ladder:L, path:L, tree:d,h or file:PATH")->capture_default_str();
  app.add_option("--ordering", c.ordering,
                 "spiral, diamond, snake, lex, path, tree-bfs, random[:SEED] or file:PATH");
  app.add_option("--family", c.family, "profile family: grid, ladder, path or tree:d");
  app.add_option("--kind", c.kind, "edge or vertex")->capture_default_str();
  app.add_option("--source", c.source, "profile source: auto, oracle or closed")->capture_default_str();
  app.add_option("--in", c.input, "function CSV (x,y,value or vertex,value)");
  app.add_option("--out", c.out, "output directory");
  app.add_option("--p", c.p_list, "comma separated exponents, e.g. 1,1.5,2,inf")->capture_default_str();
  app.add_option("--theorems", c.theorems, "audits to run, subset of 2,3,4")->capture_default_str();
  app.add_option("--format", c.format, "table or csv")->capture_default_str();
  app.add_option("--nmax", c.nmax, "largest N")->capture_default_str();
  app.add_option("--ranks", c.ranks, "ranks drawn by render")->capture_default_str();
  app.add_option("--box", c.box, "oracle box: grid side, ladder or path length, tree depth");
  app.add_option("--seed", c.seed, "seed for random orderings (falls back to GR_SEED)");
  app.add_flag("--witness", c.witness, "print minimizing sets");

  const std::pair<const char*, const char*> commands[] = {
      {"profile", "isoperimetric profile"},
      {"rearrange", "rearrange a function"},
      {"norms", "gradient norms before and after rearranging"},
      {"audit", "check the ordering hypotheses"},
      {"counterexample", "L2 counterexample for a grid ordering"},
      {"reproduce", "recompute every reference value"},
      {"render", "SVG of a function or an ordering"},
      {"export", "write graph, ordering and function files"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (c.command == "counterexample" && app.count("--graph") == 0 && app.get_config_ptr()->count() == 0)
    c.graph = "grid:4";
  return dispatch(c, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gr::tools
