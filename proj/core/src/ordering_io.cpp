#include "gr/ordering_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "gr/error.hpp"

namespace gr {

namespace {

long parse_long(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": bad integer '" + s + "'");
}

}  // namespace

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

void write_ordering(std::ostream& out, const Ordering& o) {
  const Graph& g = o.graph();
  out << (g.has_coords() ? "rank,x,y\n" : "rank,vertex\n");
  for (std::size_t r = 1; r <= o.size(); ++r) {
    const VertexId v = o.vertex(r);
    if (auto c = g.coord(v))
      out << r << ',' << c->x << ',' << c->y << '\n';
    else
      out << r << ',' << v << '\n';
  }
}

Ordering read_ordering(std::istream& in, const Graph& g, std::string name) {
  std::vector<std::pair<long, VertexId>> rows;
  std::string line;
  std::size_t line_no = 0;
  const std::size_t width = g.has_coords() ? 3 : 2;
  while (std::getline(in, line)) {
    ++line_no;
    auto f = split_fields(line);
    if (f.empty() || f[0].starts_with('#')) continue;
    if (f[0] == "rank") continue;
    if (f.size() != width)
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected " + std::to_string(width) + " fields");
    const long rank = parse_long(f[0], line_no);
    VertexId v = 0;
    if (g.has_coords()) {
      v = g.at({static_cast<int>(parse_long(f[1], line_no)), static_cast<int>(parse_long(f[2], line_no))});
    } else {
      const long id = parse_long(f[1], line_no);
      if (id < 0 || static_cast<std::size_t>(id) >= g.vertex_count())
        throw Error(Errc::UnknownVertex, "vertex " + f[1] + " not in " + g.describe());
      v = static_cast<VertexId>(id);
    }
    rows.emplace_back(rank, v);
  }
  std::sort(rows.begin(), rows.end());
  std::vector<VertexId> list;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != static_cast<long>(i + 1))
      throw Error(Errc::Parse, "ranks must be exactly 1.." + std::to_string(rows.size()));
    list.push_back(rows[i].second);
  }
  return Ordering::from_list(g, list, std::move(name));
}

}  // namespace gr
