#include "gr/audit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gr/error.hpp"

namespace gr {

namespace {

void require_range(const Ordering& o, int nmax) {
  if (nmax < 1) throw Error(Errc::InvalidArgument, "Nmax must be >= 1");
  if (static_cast<std::size_t>(nmax) > o.valid_prefix_len())
    throw Error(Errc::PrefixTooShort, "Nmax = " + std::to_string(nmax) + " exceeds the valid prefix " +
                                          std::to_string(o.valid_prefix_len()) + " of " + o.name() + " on " +
                                          o.graph().describe());
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

AuditReport audit(const Ordering& o, int nmax, AuditSelection selection) {
  require_range(o, nmax);
  const FamilyKey family = FamilyKey::of(o.graph());
  AuditReport report;
  report.ordering = o.name();
  report.graph = o.graph().describe();
  report.nmax = nmax;
  report.caveats.push_back("constants certified for N = 1.." + std::to_string(nmax) + " only");

  const bool need_edge = selection.edge || selection.full_range;
  const bool need_vertex = selection.containment || selection.full_range;
  std::optional<IsoperimetricProfile> edge_profile;
  std::optional<IsoperimetricProfile> vertex_profile;
  if (selection.edge) edge_profile = compute_profile(family, BoundaryKind::Edge, nmax);
  if (need_vertex) {
    vertex_profile = compute_profile(family, BoundaryKind::Vertex, nmax);
    const auto& first = vertex_profile->entry(1).provenance;
    report.caveats.push_back("vertex profile from " + first.to_string());
    if (first.source == Provenance::Source::Oracle)
      report.caveats.push_back("vertex profile monotonicity checked empirically on N <= " + std::to_string(nmax));
  }
  if (edge_profile) report.caveats.push_back("edge profile from " + edge_profile->entry(1).provenance.to_string());

  for (int n = 1; n <= nmax; ++n) {
    AuditRow row;
    row.n = n;
    const auto size = static_cast<std::size_t>(n);
    if (need_edge) row.prefix_edge_boundary = prefix_boundary(o, BoundaryKind::Edge, size);
    if (edge_profile) row.edge_minimum = edge_profile->at(n);
    if (need_vertex) {
      row.vertex_minimum = vertex_profile->at(n);
      row.containment_index = containment_index(o, size);
    }
    if (selection.full_range) {
      row.boundary_equality = *row.vertex_minimum == *row.prefix_edge_boundary;
      row.containment_in_range = *row.containment_index <= size + static_cast<std::size_t>(*row.vertex_minimum);
    }
    report.rows.push_back(row);
  }

  if (selection.edge) {
    EdgeConstants k;
    for (const auto& row : report.rows) {
      const Rational ratio(*row.prefix_edge_boundary, *row.edge_minimum);
      k.alpha = std::max(k.alpha, ratio);
      k.beta = std::max(k.beta, Rational(*row.prefix_edge_boundary - *row.edge_minimum));
    }
    report.edge_constants = k;
  }

  if (selection.containment) {
    ContainmentConstant k;
    k.profile_nondecreasing = vertex_profile->nondecreasing();
    if (!k.profile_nondecreasing)
      throw Error(Errc::HypothesisFailure, "vertex profile of " + family.describe() + " decreases on N <= " +
                                               std::to_string(nmax));
    for (const auto& row : report.rows) {
      const int excess = static_cast<int>(*row.containment_index) - row.n;
      k.c = std::max(k.c, ceil_div(excess, *row.vertex_minimum));
    }
    report.containment = k;
  }

  if (selection.full_range) {
    FullRangeVerdict v;
    for (const auto& row : report.rows) {
      if (!*row.boundary_equality && !v.first_equality_failure) v.first_equality_failure = row.n;
      if (!*row.containment_in_range && !v.first_containment_failure) v.first_containment_failure = row.n;
      if ((!*row.boundary_equality || !*row.containment_in_range) && !v.first_failure) v.first_failure = row.n;
    }
    v.holds = !v.first_failure;
    report.full_range = v;
  }
  return report;
}

AuditReport theorem2_audit(const Ordering& o, int nmax) { return audit(o, nmax, {.edge = true}); }

AuditReport theorem3_audit(const Ordering& o, int nmax) { return audit(o, nmax, {.containment = true}); }

AuditReport theorem4_audit(const Ordering& o, int nmax) { return audit(o, nmax, {.full_range = true}); }

CounterexampleResult l2_counterexample(const Ordering& o) {
  const Graph& g = o.graph();
  if (g.family() != Family::GridWindow)
    throw Error(Errc::WrongFamily, "the L2 counterexample needs a grid window, got " + g.describe());
  if (o.valid_prefix_len() < 6 || g.params().half_width < 2)
    throw Error(Errc::BoxTooSmall, "the first six ranks of " + o.name() + " are not usable on " + g.describe());

  const PNorm two = PNorm::finite(2);
  auto energy = [&](const LatticeFunction& f) { return *grad_power_sum(f, two).exact; };
  auto evaluate = [&](LatticeFunction f, std::optional<int> n, bool center_plus) {
    LatticeFunction star = rearrange(f, o);
    const Rational e = energy(f);
    const Rational es = energy(star);
    const Rational r2 = es / e;
    return CounterexampleResult{center_plus, n, std::move(f), std::move(star), e, es, r2, std::sqrt(to_double(r2))};
  };

  const VertexId first = o.vertex(1);
  std::vector<VertexId> around(g.neighbors(first).begin(), g.neighbors(first).end());
  std::vector<VertexId> next{o.vertex(2), o.vertex(3), o.vertex(4), o.vertex(5)};
  std::sort(around.begin(), around.end());
  std::sort(next.begin(), next.end());

  std::optional<CounterexampleResult> best;
  if (around == next) {
    const std::vector<std::pair<Coord, Rational>> block{
        {{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
    best = evaluate(LatticeFunction::from_coords(g, block), std::nullopt, true);
  } else {
    for (int n = 2; n <= kPlusSweepMax; ++n) {
      const std::vector<std::pair<Coord, Rational>> plus{
          {{0, 0}, n}, {{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
      auto candidate = evaluate(LatticeFunction::from_coords(g, plus), n, false);
      if (!best || candidate.ratio_squared > best->ratio_squared) best = std::move(candidate);
    }
  }
  if (best->ratio < kCounterexampleFactor)
    throw Error(Errc::HypothesisFailure, "L2 ratio " + std::to_string(best->ratio) + " for " + o.name() +
                                             " stays below 1.01");
  return std::move(*best);
}

Ordering random_center_ordering(const Graph& g, int radius, std::uint64_t seed) {
  const Ordering spiral = Ordering::spiral(g);
  std::vector<VertexId> center;
  std::vector<VertexId> rest;
  for (VertexId v : spiral.ranked()) {
    const Coord c = *g.coord(v);
    (std::max(std::abs(c.x), std::abs(c.y)) <= radius ? center : rest).push_back(v);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(center.begin(), center.end(), rng);
  center.insert(center.end(), rest.begin(), rest.end());
  return Ordering::from_list(g, center, "random-" + std::to_string(seed));
}

RearrangementBounds RearrangementBounds::for_ordering(const Ordering& o) {
  Ordering reference = o;
  try {
    reference = Ordering::by_name(o.graph(), o.name());
  } catch (const Error&) {
    throw Error(Errc::Unsupported, "no known rearrangement bounds for ordering " + o.name());
  }
  if (!(reference == o)) throw Error(Errc::Unsupported, "ordering named " + o.name() + " differs from the built-in one");
  RearrangementBounds b;
  const std::string& name = reference.name();
  if (name == "spiral") {
    b.l1 = EdgeConstants{};
    b.linf = 2;
    b.interpolation = true;
  } else if (name == "snake") {
    b.l1 = EdgeConstants{};
    b.linf = 2;
  } else if (name == "lex") {
    b.l1 = EdgeConstants{};
    b.linf = 1;
  } else if (name == "path" || name == "tree-bfs") {
    b.all_p = true;
  } else {
    throw Error(Errc::Unsupported, "no known rearrangement bounds for ordering " + name);
  }
  return b;
}

RearrangementBounds RearrangementBounds::from_audit(const AuditReport& report) {
  RearrangementBounds b;
  b.l1 = report.edge_constants;
  if (report.containment) b.linf = report.containment->c;
  b.all_p = report.full_range && report.full_range->holds;
  return b;
}

std::string_view to_string(BoundRule rule) {
  switch (rule) {
    case BoundRule::Identity: return "identity";
    case BoundRule::EdgeConstants: return "edge-constants";
    case BoundRule::Containment: return "containment";
    case BoundRule::Interpolation: return "interpolation";
  }
  return "?";
}

PolyaSzegoResult polya_szego_check(const LatticeFunction& f, const Ordering& o, const PNorm& p,
                                   const RearrangementBounds& bounds) {
  const LatticeFunction star = rearrange(f, o);
  PolyaSzegoResult r;
  r.p = p;
  const NormValue lhs = grad_lp_norm(star, p);
  r.lhs = lhs.value;
  auto within_tolerance = [&](double a, double b) { return a <= b * (1.0 + kFractionalTolerance); };

  if (bounds.all_p) {
    r.rule = BoundRule::Identity;
    const NormValue rhs = grad_lp_norm(f, p);
    r.rhs = rhs.value;
    r.exact = lhs.exact && rhs.exact;
    r.holds = r.exact ? *lhs.exact <= *rhs.exact : within_tolerance(r.lhs, r.rhs);
    return r;
  }
  if (bounds.l1 && p == PNorm::finite(1)) {
    r.rule = BoundRule::EdgeConstants;
    const Rational rhs = bounds.l1->alpha * *grad_lp_norm(f, p).exact + bounds.l1->beta * f.max();
    r.rhs = to_double(rhs);
    r.holds = *lhs.exact <= rhs;
    return r;
  }
  if (bounds.linf && p.is_infinite()) {
    r.rule = BoundRule::Containment;
    const Rational rhs = *bounds.linf * *grad_lp_norm(f, p).exact;
    r.rhs = to_double(rhs);
    r.holds = *lhs.exact <= rhs;
    return r;
  }
  if (bounds.interpolation) {
    r.rule = BoundRule::Interpolation;
    const Rational l1 = *grad_lp_norm(f, PNorm::finite(1)).exact;
    if (p.is_infinite()) {
      r.rhs = 2.0 * to_double(l1);
      r.holds = *lhs.exact <= 2 * l1;
    } else if (auto k = p.integer()) {
      // lhs^p <= 2^(p-1) * l1^p
      const Rational rhs_power = pow(Rational(2), *k - 1) * pow(l1, *k);
      r.rhs = std::pow(2.0, 1.0 - 1.0 / *k) * to_double(l1);
      r.holds = *lhs.exact <= rhs_power;
    } else {
      const double q = p.as_double();
      r.rhs = std::pow(2.0, 1.0 - 1.0 / q) * to_double(l1);
      r.exact = false;
      r.holds = within_tolerance(r.lhs, r.rhs);
    }
    return r;
  }
  throw Error(Errc::Unsupported, "no rearrangement bound for " + o.name() + " at p = " + p.to_string());
}

PolyaSzegoResult polya_szego_check(const LatticeFunction& f, const Ordering& o, const PNorm& p) {
  return polya_szego_check(f, o, p, RearrangementBounds::for_ordering(o));
}

}  // namespace gr
