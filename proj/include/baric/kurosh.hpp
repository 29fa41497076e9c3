#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baric/algebra.hpp"
#include "baric/groebner.hpp"
#include "baric/train_engel.hpp"

namespace baric {

// K x C x S for C the degree-`trunc` truncation of the presented algebra and
// S the span of the generators. Needs a basis complete above `trunc`.
TablePtr bernstein_from_presentation(const GroebnerState& g, std::size_t trunc);

struct KuroshDemoReport {
  std::size_t max_deg = 0;
  std::size_t trunc = 0;
  // (a) the relations are already a Groebner basis up to max_deg
  bool groebner_ok = false;
  std::size_t added = 0;
  std::size_t obstructions = 0;
  std::size_t complete_below = 0;
  // (b) (ax + by)^3 reduces to zero
  bool nil_span_ok = false;
  // (c) positive Hilbert counts up to max_deg and (xy)^t normal for 2t <= max_deg
  bool hilbert_ok = false;
  std::vector<std::size_t> hilbert;
  std::size_t xy_checked_upto = 0;
  // (d) train of rank 4 with coefficients (1, -3/2, 1/2, 0)
  bool train_ok = false;
  std::size_t c_dim = 0;
  std::size_t algebra_dim = 0;
  std::optional<TrainReport> train;
  std::vector<std::string> failures;

  bool pass() const { return groebner_ok && nil_span_ok && hilbert_ok && train_ok; }
};

// Every step runs; a step that cannot be certified is recorded as a failure
// with its reason instead of throwing.
KuroshDemoReport kurosh_demo(std::size_t max_deg, std::size_t trunc);

}  // namespace baric
