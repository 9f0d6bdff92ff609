#pragma once

#include <optional>
#include <string>

#include "gr/lattice_function.hpp"
#include "gr/ordering.hpp"
#include "gr/rational.hpp"

namespace gr {

/// Exponent of an Lp norm: a rational p >= 1 or infinity.
class PNorm {
 public:
  static PNorm finite(const Rational& p);
  static PNorm infinity();
  /// "1", "2", "1.5", "3/2", "inf"
  static PNorm parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  /// Throws for p = infinity.
  const Rational& exponent() const;
  /// p when it is a (finite) integer.
  std::optional<unsigned> integer() const;
  double as_double() const;
  std::string to_string() const;

  friend bool operator==(const PNorm&, const PNorm&) = default;

 private:
  PNorm() = default;
  Rational p_ = 1;
  bool infinite_ = false;
};

/// ||.||_p together with its exact form when one exists:
/// the p-th power for integer p, the maximum itself for p = infinity.
struct NormValue {
  PNorm p = PNorm::infinity();
  std::optional<Rational> exact;
  double value = 0.0;
};

/// sum |.|^p for finite p; exact for integer p, compensated double otherwise.
struct PowerSum {
  std::optional<Rational> exact;
  double value = 0.0;
};

/// f*(v_k) = k-th largest value of f. The support must fit in the valid
/// prefix of the ordering (Errc::PrefixTooShort otherwise).
LatticeFunction rearrange(const LatticeFunction& f, const Ordering& o);

NormValue lp_norm(const LatticeFunction& f, const PNorm& p);

/// Norm of the edge differences, each undirected edge counted once.
NormValue grad_lp_norm(const LatticeFunction& f, const PNorm& p);

/// ||grad f||_p^p for finite p.
PowerSum grad_power_sum(const LatticeFunction& f, const PNorm& p);

/// {f >= s} for s > 0.
VertexSet superlevel_set(const LatticeFunction& f, const Rational& s);

/// Integral over s of #edge_boundary{f >= s}, evaluated exactly as a sum over
/// the gaps between consecutive distinct values of f (0 included).
Rational coarea_l1(const LatticeFunction& f);

/// p * integral_0^1 of sum over edge_boundary{f >= s} of |grad min(f, s)|^(p-1),
/// integrated level by level. Requires max(f) == 1 and finite p; the result
/// equals ||grad f||_p^p.
PowerSum modified_coarea(const LatticeFunction& f, const PNorm& p);

}  // namespace gr
