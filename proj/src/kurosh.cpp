#include "baric/kurosh.hpp"

#include "baric/constructions.hpp"
#include "baric/errors.hpp"

namespace baric {

TablePtr bernstein_from_presentation(const GroebnerState& g, std::size_t trunc) {
  AssociativeTable c = truncated_algebra_table(g, trunc);
  std::vector<Vector> s;
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    std::size_t k = 0;
    while (k < c.dim() && c.labels[k] != g.generators[i]) ++k;
    require(k < c.dim(), "generator " + g.generators[i] + " vanishes in the truncation");
    s.push_back(unit_vector(c.dim(), k));
  }
  return from_associative(c, s, g.generators);
}

KuroshDemoReport kurosh_demo(std::size_t max_deg, std::size_t trunc) {
  KuroshDemoReport r;
  r.max_deg = max_deg;
  r.trunc = trunc;
  auto fail = [&](const std::string& step, const std::string& why) { r.failures.push_back(step + ": " + why); };

  GroebnerState g;
  try {
    g = buchberger_truncated(kurosh_presentation(), max_deg);
    r.added = g.added;
    r.obstructions = g.obstructions;
    r.complete_below = g.complete_below;
    r.groebner_ok = g.added == 0;
    if (!r.groebner_ok) fail("groebner", std::to_string(g.added) + " new elements");
  } catch (const InputError& e) {
    fail("groebner", e.what());
    return r;
  }

  try {
    auto x = NcPoly::word({0}), y = NcPoly::word({1});
    r.nil_span_ok = nil_span_check({x, y}, 3, g).holds;
    if (!r.nil_span_ok) fail("nil span", "(ax + by)^3 does not reduce to zero");
  } catch (const InputError& e) {
    fail("nil span", e.what());
  }

  try {
    r.hilbert = hilbert_counts(g, max_deg);
    bool positive = true;
    for (std::size_t d = 1; d <= max_deg; ++d) positive = positive && r.hilbert[d] > 0;
    bool xy_normal = true;
    for (std::size_t t = 1; 2 * t <= max_deg; ++t) {
      Word w;
      for (std::size_t i = 0; i < t; ++i) w.insert(w.end(), {0, 1});
      xy_normal = xy_normal && reduce(NcPoly::word(w), g) == NcPoly::word(w);
      r.xy_checked_upto = t;
    }
    r.hilbert_ok = positive && xy_normal;
    if (!positive) fail("hilbert", "a graded component vanishes");
    if (!xy_normal) fail("hilbert", "(xy)^t is not normal");
  } catch (const InputError& e) {
    fail("hilbert", e.what());
  }

  try {
    auto a = bernstein_from_presentation(g, trunc);
    r.algebra_dim = a->dim();
    r.c_dim = a->dim() - 1 - g.generators.size();
    r.train = train_analysis(a);
    const UnivariatePoly expected({0, 0, Scalar(1, 2), Scalar(-3, 2), 1});
    r.train_ok = r.train->rank == 4u && r.train->train_poly == expected;
    if (!r.train_ok) fail("train", "expected rank 4 with X^4 - 3/2 X^3 + 1/2 X^2");
  } catch (const InputError& e) {
    fail("train", e.what());
  }
  return r;
}

}  // namespace baric
