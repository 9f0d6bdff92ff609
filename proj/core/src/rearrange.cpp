#include "gr/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gr/error.hpp"

namespace gr {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Calls fn(difference) for every edge with a nonzero difference.
template <typename Fn>
void for_each_edge_difference(const LatticeFunction& f, Fn&& fn) {
  const Graph& g = f.graph();
  for (VertexId u : f.support()) {
    for (VertexId v : g.neighbors(u)) {
      const Rational& fv = f(v);
      if (fv == 0)
        fn(f(u));
      else if (u < v && f(u) != fv)
        fn(abs_diff(f(u), fv));
    }
  }
}

double fractional_pow(const Rational& base, double p) { return std::pow(to_double(base), p); }

std::vector<Rational> distinct_levels(const LatticeFunction& f) {
  std::vector<Rational> levels{0};
  for (VertexId v : f.support()) levels.push_back(f(v));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

}  // namespace

PNorm PNorm::finite(const Rational& p) {
  if (p < 1) throw Error(Errc::InvalidArgument, "p must be >= 1, got " + format_rational(p));
  PNorm out;
  out.p_ = p;
  return out;
}

PNorm PNorm::infinity() {
  PNorm out;
  out.infinite_ = true;
  return out;
}

PNorm PNorm::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
  return finite(parse_rational(text));
}

const Rational& PNorm::exponent() const {
  if (infinite_) throw Error(Errc::InvalidArgument, "p = infinity has no finite exponent");
  return p_;
}

std::optional<unsigned> PNorm::integer() const {
  if (infinite_ || boost::multiprecision::denominator(p_) != 1) return std::nullopt;
  return static_cast<unsigned>(boost::multiprecision::numerator(p_));
}

double PNorm::as_double() const { return infinite_ ? HUGE_VAL : to_double(p_); }

std::string PNorm::to_string() const { return infinite_ ? "inf" : format_rational(p_); }

LatticeFunction rearrange(const LatticeFunction& f, const Ordering& o) {
  if (o.graph() != f.graph()) throw Error(Errc::InvalidArgument, "function and ordering live on different graphs");
  if (f.support().size() > o.valid_prefix_len())
    throw Error(Errc::PrefixTooShort, "support of size " + std::to_string(f.support().size()) +
                                          " exceeds the valid prefix " + std::to_string(o.valid_prefix_len()) +
                                          " of " + o.name());
  std::vector<Rational> values;
  values.reserve(f.support().size());
  for (VertexId v : f.support()) values.push_back(f(v));
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<std::pair<VertexId, Rational>> placed;
  placed.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) placed.emplace_back(o.vertex(k + 1), values[k]);
  return LatticeFunction(f.graph(), placed);
}

NormValue lp_norm(const LatticeFunction& f, const PNorm& p) {
  NormValue out{p, std::nullopt, 0.0};
  if (p.is_infinite()) {
    out.exact = f.max();
    out.value = to_double(*out.exact);
    return out;
  }
  if (auto k = p.integer()) {
    Rational sum = 0;
    for (VertexId v : f.support()) sum += pow(f(v), *k);
    out.exact = sum;
    out.value = std::pow(to_double(sum), 1.0 / *k);
    return out;
  }
  CompensatedSum sum;
  const double pd = p.as_double();
  for (VertexId v : f.support()) sum.add(fractional_pow(f(v), pd));
  out.value = std::pow(sum.value(), 1.0 / pd);
  return out;
}

PowerSum grad_power_sum(const LatticeFunction& f, const PNorm& p) {
  if (p.is_infinite()) throw Error(Errc::InvalidArgument, "power sum needs a finite p");
  PowerSum out;
  if (auto k = p.integer()) {
    Rational sum = 0;
    for_each_edge_difference(f, [&](const Rational& d) { sum += pow(d, *k); });
    out.exact = sum;
    out.value = to_double(sum);
    return out;
  }
  CompensatedSum sum;
  const double pd = p.as_double();
  for_each_edge_difference(f, [&](const Rational& d) { sum.add(fractional_pow(d, pd)); });
  out.value = sum.value();
  return out;
}

NormValue grad_lp_norm(const LatticeFunction& f, const PNorm& p) {
  NormValue out{p, std::nullopt, 0.0};
  if (p.is_infinite()) {
    Rational m = 0;
    for_each_edge_difference(f, [&](const Rational& d) { m = std::max(m, d); });
    out.exact = m;
    out.value = to_double(m);
    return out;
  }
  PowerSum s = grad_power_sum(f, p);
  out.exact = s.exact;
  out.value = std::pow(s.value, 1.0 / p.as_double());
  return out;
}

VertexSet superlevel_set(const LatticeFunction& f, const Rational& s) {
  if (s <= 0) throw Error(Errc::InvalidArgument, "superlevel threshold must be positive (the set would be infinite)");
  std::vector<VertexId> members;
  for (VertexId v : f.support())
    if (f(v) >= s) members.push_back(v);
  return VertexSet(std::move(members));
}

Rational coarea_l1(const LatticeFunction& f) {
  const auto levels = distinct_levels(f);
  Rational total = 0;
  // On (t_{i-1}, t_i] the superlevel set is constant and equal to {f >= t_i}.
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const VertexSet level = superlevel_set(f, levels[i]);
    total += (levels[i] - levels[i - 1]) * static_cast<long>(edge_boundary(f.graph(), level).count);
  }
  return total;
}

PowerSum modified_coarea(const LatticeFunction& f, const PNorm& p) {
  if (p.is_infinite()) throw Error(Errc::InvalidArgument, "modified coarea formula needs p < infinity");
  if (f.max() != 1) throw Error(Errc::NotNormalized, "max(f) = " + format_rational(f.max()) + ", expected 1");
  const Graph& g = f.graph();
  const auto levels = distinct_levels(f);
  const auto k = p.integer();
  const double pd = p.as_double();

  Rational exact = 0;
  CompensatedSum approx;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const Rational& lo = levels[i - 1];
    const Rational& hi = levels[i];
    const VertexSet level = superlevel_set(f, hi);
    // For s in (lo, hi] a boundary edge (u inside, w outside) has
    // |grad min(f, s)| = s - f(w); p * integral of (s - f(w))^(p-1) ds
    // over the gap is (hi - f(w))^p - (lo - f(w))^p.
    for (const Edge& e : edge_boundary(g, level).edges) {
      const Rational& outside = f(e.v);
      if (k) {
        exact += pow(hi - outside, *k) - pow(lo - outside, *k);
      } else {
        approx.add(std::pow(to_double(hi - outside), pd));
        approx.add(-std::pow(to_double(lo - outside), pd));
      }
    }
  }
  PowerSum out;
  if (k) {
    out.exact = exact;
    out.value = to_double(exact);
  } else {
    out.value = approx.value();
  }
  return out;
}

}  // namespace gr
