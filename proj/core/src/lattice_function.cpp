#include "gr/lattice_function.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "gr/error.hpp"
#include "gr/ordering_io.hpp"

namespace gr {

LatticeFunction::LatticeFunction(Graph g) : graph_(std::move(g)), values_(graph_.vertex_count()) {}

LatticeFunction::LatticeFunction(Graph g, std::span<const std::pair<VertexId, Rational>> values)
    : LatticeFunction(std::move(g)) {
  std::vector<bool> seen(values_.size(), false);
  for (const auto& [v, value] : values) {
    if (!graph_.contains(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " not in " + graph_.describe());
    if (seen[v]) throw Error(Errc::DuplicateVertex, "vertex " + std::to_string(v) + " assigned twice");
    seen[v] = true;
    if (value < 0) throw Error(Errc::InvalidArgument, "negative value " + format_rational(value));
    if (value == 0) continue;
    if (!graph_.interior(v)) {
      std::string where = graph_.has_coords() ? to_string(*graph_.coord(v)) : "vertex " + std::to_string(v);
      throw Error(Errc::NonInteriorSet, "support point " + where + " is on the window border of " + graph_.describe());
    }
    values_[v] = value;
    support_.push_back(v);
  }
  std::sort(support_.begin(), support_.end());
}

LatticeFunction LatticeFunction::from_coords(Graph g, std::span<const std::pair<Coord, Rational>> values) {
  std::vector<std::pair<VertexId, Rational>> ids;
  ids.reserve(values.size());
  for (const auto& [c, value] : values) ids.emplace_back(g.at(c), value);
  return LatticeFunction(std::move(g), ids);
}

const Rational& LatticeFunction::value(VertexId v) const {
  if (!graph_.contains(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return values_[v];
}

Rational LatticeFunction::max() const {
  Rational m = 0;
  for (VertexId v : support_) m = std::max(m, values_[v]);
  return m;
}

LatticeFunction LatticeFunction::normalized() const {
  if (is_zero()) return *this;
  return scaled(1 / max());
}

LatticeFunction LatticeFunction::scaled(const Rational& factor) const {
  if (factor < 0) throw Error(Errc::InvalidArgument, "negative scale factor");
  LatticeFunction out(graph_);
  if (factor == 0) return out;
  for (VertexId v : support_) out.values_[v] = values_[v] * factor;
  out.support_ = support_;
  return out;
}

void write_function(std::ostream& out, const LatticeFunction& f) {
  const Graph& g = f.graph();
  out << (g.has_coords() ? "x,y,value\n" : "vertex,value\n");
  for (VertexId v : f.support()) {
    if (auto c = g.coord(v))
      out << c->x << ',' << c->y << ',' << format_rational(f(v)) << '\n';
    else
      out << v << ',' << format_rational(f(v)) << '\n';
  }
}

LatticeFunction read_function(std::istream& in, const Graph& g) {
  std::vector<std::pair<VertexId, Rational>> values;
  std::string line;
  std::size_t line_no = 0;
  const std::size_t width = g.has_coords() ? 3 : 2;
  const auto parse_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0].starts_with('#')) continue;
    if (fields[0] == "x" || fields[0] == "vertex") continue;
    if (fields.size() != width)
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected " + std::to_string(width) + " fields");
    VertexId v = 0;
    if (g.has_coords()) {
      v = g.at({static_cast<int>(parse_int(fields[0])), static_cast<int>(parse_int(fields[1]))});
    } else {
      const long id = parse_int(fields[0]);
      if (id < 0 || static_cast<std::size_t>(id) >= g.vertex_count())
        throw Error(Errc::UnknownVertex, "vertex " + fields[0] + " not in " + g.describe());
      v = static_cast<VertexId>(id);
    }
    values.emplace_back(v, parse_rational(fields.back()));
  }
  return LatticeFunction(g, values);
}

}  // namespace gr
