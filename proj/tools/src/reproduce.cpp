#include "gr/tools/reproduce.hpp"

#include <fstream>
#include <map>

#include "gr/audit.hpp"
#include "gr/error.hpp"
#include "gr/isoperimetry.hpp"
#include "gr/rearrange.hpp"

namespace gr::tools {

std::size_t ReproReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.match; }));
}

namespace {

class Collector {
 public:
  template <class A, class B>
  void add(const std::string& table, const std::string& item, const A& expected, const B& computed) {
    const std::string e = text(expected);
    const std::string c = text(computed);
    checks_.push_back({table, item, e, c, e == c});
  }

  std::vector<ReproCheck> take() { return std::move(checks_); }

 private:
  static std::string text(const std::string& s) { return s; }
  static std::string text(const char* s) { return s; }
  static std::string text(bool b) { return b ? "true" : "false"; }
  static std::string text(const Rational& r) { return format_rational(r); }
  template <class T>
  static std::string text(const T& v) {
    return std::to_string(v);
  }

  std::vector<ReproCheck> checks_;
};

std::string n_item(int n) { return "N=" + std::to_string(n); }

void isoperimetric_tables(Collector& out) {
  const auto five = min_edge_boundary(FamilyKey::grid(), 5);
  out.add("five_cell_edge_minimum", "min edge boundary N=5", 10, five.minimum);
  const std::vector<Coord> p_pentomino{{3, 3}, {4, 3}, {4, 4}, {3, 4}, {2, 4}};
  std::vector<Coord> witness;
  for (VertexId v : five.witness) witness.push_back(*five.box.coord(v));
  out.add("five_cell_edge_minimum", "witness congruent to reference P-pentomino", true, congruent(p_pentomino, witness));

  const int grid_vertex[] = {4, 6, 7, 8, 8, 9};
  const std::size_t spiral_m[] = {8, 11, 14, 15, 18, 19};
  const auto vertex = compute_profile(FamilyKey::grid(), BoundaryKind::Vertex, 6);
  const Ordering spiral = Ordering::spiral(Graph::grid_window(6));
  for (int n = 1; n <= 6; ++n) {
    out.add("grid_vertex_profile", n_item(n), grid_vertex[n - 1], vertex.at(n));
    out.add("spiral_containment", n_item(n), spiral_m[n - 1], containment_index(spiral, static_cast<std::size_t>(n)));
  }

  const auto grid_edge = compute_profile(FamilyKey::grid(), BoundaryKind::Edge, 6, ProfileSource::OracleOnly);
  for (int n = 1; n <= 6; ++n)
    out.add("grid_edge_closed_form", n_item(n), closed_form_profile(FamilyKey::grid(), BoundaryKind::Edge, n),
            grid_edge.at(n));

  for (int d : {3, 4})
    for (BoundaryKind kind : {BoundaryKind::Edge, BoundaryKind::Vertex}) {
      const auto oracle = compute_profile(FamilyKey::tree(d), kind, 6, ProfileSource::OracleOnly);
      for (int n = 1; n <= 6; ++n)
        out.add("tree_profile", "d=" + std::to_string(d) + " " + std::string(to_string(kind)) + " " + n_item(n),
                (d - 2) * n + 2, oracle.at(n));
    }

  const auto ladder = compute_profile(FamilyKey::ladder(), BoundaryKind::Edge, 8, ProfileSource::OracleOnly);
  for (int n = 1; n <= 8; ++n)
    out.add("ladder_edge_table", n_item(n), closed_form_profile(FamilyKey::ladder(), BoundaryKind::Edge, n),
            ladder.at(n));
}

void theorem_tables(Collector& out) {
  const Ordering spiral = Ordering::spiral(Graph::grid_window(6));
  const Ordering snake = Ordering::snake(Graph::ladder(16));
  const Ordering lex = Ordering::lexicographic(Graph::ladder(16));
  const Ordering path = Ordering::path(Graph::path(31));

  const auto spiral2 = theorem2_audit(spiral, 6);
  out.add("audit_constants", "spiral alpha (N<=6)", Rational(1), spiral2.edge_constants->alpha);
  out.add("audit_constants", "spiral beta (N<=6)", Rational(0), spiral2.edge_constants->beta);
  out.add("audit_constants", "spiral c (N<=6)", 2, theorem3_audit(spiral, 6).containment->c);
  const auto snake2 = theorem2_audit(snake, 8);
  out.add("audit_constants", "snake alpha (N<=8)", Rational(1), snake2.edge_constants->alpha);
  out.add("audit_constants", "snake beta (N<=8)", Rational(0), snake2.edge_constants->beta);
  out.add("audit_constants", "lex c (N<=8)", 1, theorem3_audit(lex, 8).containment->c);
  out.add("audit_constants", "path c (N<=10)", 1, theorem3_audit(path, 10).containment->c);

  out.add("full_range_audit", "path holds (N<=10)", true, theorem4_audit(path, 10).full_range->holds);
  for (int d : {3, 4}) {
    const Ordering tree = Ordering::tree_bfs(Graph::regular_tree(d, d == 3 ? 4 : 3));
    out.add("full_range_audit", "tree-bfs d=" + std::to_string(d) + " holds (N<=8)", true,
            theorem4_audit(tree, 8).full_range->holds);
    for (int n = 1; n <= 8; ++n)
      out.add("tree_containment", "d=" + std::to_string(d) + " " + n_item(n), (d - 1) * n + 2,
              containment_index(tree, static_cast<std::size_t>(n)));
  }
  const auto spiral4 = theorem4_audit(spiral, 6);
  out.add("full_range_audit", "spiral holds (N<=6)", false, spiral4.full_range->holds);
  out.add("full_range_audit", "spiral first boundary mismatch", 3, spiral4.full_range->first_equality_failure.value_or(0));

  for (int n = 1; n <= 8; ++n) {
    const auto size = static_cast<std::size_t>(n);
    out.add("ladder_containment", "lex " + n_item(n), n + 2, containment_index(lex, size));
    out.add("ladder_containment", "snake within N+3 " + n_item(n), true, containment_index(snake, size) <= size + 3);
  }
  for (int n = 1; n <= 10; ++n)
    out.add("path_containment", n_item(n), n + 2, containment_index(path, static_cast<std::size_t>(n)));
}

void fixture_tables(Collector& out) {
  const PNorm one = PNorm::finite(1);
  const PNorm inf = PNorm::infinity();
  {
    const Graph ladder = Graph::ladder(8);
    const std::vector<std::pair<Coord, Rational>> values{{{0, 0}, 2}, {{0, 1}, 1}, {{1, 0}, 1}};
    const auto f = LatticeFunction::from_coords(ladder, values);
    const auto star = rearrange(f, Ordering::snake(ladder));
    out.add("ladder_snake_fixture", "L1 grad f", Rational(5), *grad_lp_norm(f, one).exact);
    out.add("ladder_snake_fixture", "L1 grad f*", Rational(5), *grad_lp_norm(star, one).exact);
    out.add("ladder_snake_fixture", "Linf grad f", Rational(1), *grad_lp_norm(f, inf).exact);
    out.add("ladder_snake_fixture", "Linf grad f*", Rational(2), *grad_lp_norm(star, inf).exact);
  }
  {
    const Graph grid = Graph::grid_window(3);
    const std::vector<std::pair<Coord, Rational>> values{
        {{0, 0}, 2}, {{0, 1}, 1}, {{1, 0}, 1}, {{-1, 0}, 1}, {{0, -1}, 1}};
    const auto f = LatticeFunction::from_coords(grid, values);
    const auto star = rearrange(f, Ordering::spiral(grid));
    out.add("grid_spiral_fixture", "Linf grad f", Rational(1), *grad_lp_norm(f, inf).exact);
    out.add("grid_spiral_fixture", "Linf grad f*", Rational(2), *grad_lp_norm(star, inf).exact);
  }
  {
    const Graph grid = Graph::grid_window(4);
    const PNorm two = PNorm::finite(2);
    const std::vector<std::pair<Coord, Rational>> block{
        {{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
    const std::vector<std::pair<Coord, Rational>> plus{
        {{0, 0}, 1}, {{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
    out.add("plus_energies", "block energy", Rational(10),
            *grad_power_sum(LatticeFunction::from_coords(grid, block), two).exact);
    out.add("plus_energies", "central plus energy", Rational(12),
            *grad_power_sum(LatticeFunction::from_coords(grid, plus), two).exact);
    for (int n = 2; n <= 8; ++n) {
      const std::vector<std::pair<Coord, Rational>> peaked{
          {{0, 0}, n}, {{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
      out.add("plus_energies", "peaked plus energy n=" + std::to_string(n), Rational(4 * n * n - 8 * n + 16),
              *grad_power_sum(LatticeFunction::from_coords(grid, peaked), two).exact);
    }
    const auto center_plus = l2_counterexample(Ordering::diamond(grid));
    out.add("plus_energies", "center-plus ratio squared", Rational(6, 5), center_plus.ratio_squared);
    out.add("plus_energies", "spiral ratio at least 1.01", true, l2_counterexample(Ordering::spiral(grid)).ratio >= 1.01);
  }
}

void write_csv(const std::filesystem::path& path, const std::vector<const ReproCheck*>& rows, bool with_table) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  if (with_table) out << "table,";
  out << "item,expected,computed,match\n";
  for (const ReproCheck* c : rows) {
    if (with_table) out << c->table << ',';
    out << c->item << ',' << c->expected << ',' << c->computed << ',' << (c->match ? "yes" : "no") << '\n';
  }
}

}  // namespace

ReproReport reproduce(const std::filesystem::path& out_dir) {
  Collector collector;
  isoperimetric_tables(collector);
  theorem_tables(collector);
  fixture_tables(collector);

  ReproReport report;
  report.checks = collector.take();
  std::filesystem::create_directories(out_dir);
  std::map<std::string, std::vector<const ReproCheck*>> tables;
  std::vector<const ReproCheck*> all;
  for (const auto& c : report.checks) {
    tables[c.table].push_back(&c);
    all.push_back(&c);
  }
  for (const auto& [name, rows] : tables) {
    report.files.push_back(out_dir / (name + ".csv"));
    write_csv(report.files.back(), rows, false);
  }
  report.files.push_back(out_dir / "summary.csv");
  write_csv(report.files.back(), all, true);
  return report;
}

}  // namespace gr::tools
