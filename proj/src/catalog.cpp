#include "baric/catalog.hpp"

#include <set>

#include "baric/constructions.hpp"
#include "baric/errors.hpp"
#include "baric/groebner.hpp"
#include "baric/kurosh.hpp"

namespace baric {

namespace {

class ParamReader {
 public:
  ParamReader(std::string name, const Params& p) : name_(std::move(name)), params_(p) {}

  std::size_t size(const std::string& key, std::size_t def) {
    used_.insert(key);
    auto it = params_.find(key);
    if (it == params_.end()) return def;
    try {
      std::size_t pos = 0;
      long v = std::stol(it->second, &pos);
      require(pos == it->second.size() && v >= 0, "");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InputError(name_ + ": parameter " + key + " must be a nonnegative integer, got '" + it->second + "'");
    }
  }

  Scalar scalar(const std::string& key, const Scalar& def) {
    used_.insert(key);
    auto it = params_.find(key);
    return it == params_.end() ? def : parse_scalar(it->second);
  }

  std::optional<std::vector<Scalar>> scalars(const std::string& key) {
    used_.insert(key);
    auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    std::vector<Scalar> out;
    std::size_t start = 0;
    const std::string& s = it->second;
    while (start <= s.size()) {
      std::size_t comma = s.find(',', start);
      if (comma == std::string::npos) comma = s.size();
      out.push_back(parse_scalar(s.substr(start, comma - start)));
      start = comma + 1;
    }
    return out;
  }

  void done() const {
    for (const auto& [k, v] : params_)
      require(used_.count(k), name_ + ": unknown parameter '" + k + "'");
  }

 private:
  std::string name_;
  const Params& params_;
  std::set<std::string> used_;
};

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"constant", "", "e^2 = e, ev = v^2 = 0"},
      {"elementary", "n=2", "x^2 = w(x) x on e, u1..un"},
      {"three-dim-alpha", "alpha=1", "v1^2 = 4(1 - alpha) u1, u1 v1 = (alpha - 3/2) u1"},
      {"not-train", "", "e^2 = e, eu = u/2, uv = u"},
      {"shift-up", "n=4", "u_i v = u_{i+1}, u_n v = 0"},
      {"shift-down", "n=4", "u_i v = u_{i-1}"},
      {"free-single", "n=5 betas=0,...", "free one-generator truncation, v1 u_{n-2} = sum beta_i u_i"},
      {"zhevlakov", "vars=4 len=4", "regular words with an adjoined idempotent"},
      {"kurosh", "max-deg=12 trunc=6", "K x C x S for the truncated Kurosh algebra C"},
      {"power-nil", "n=2 k=3 max-deg=8 trunc=4", "K x C x S for the truncated A_{n,k}"},
      {"power-series", "m=4", "K x C x S for C = t K[t]/(t^m), S = K t"},
  };
}

TablePtr power_series_algebra(std::size_t m) {
  require(m >= 2, "power-series: m must be at least 2");
  AssociativeTable c;
  for (std::size_t i = 1; i < m; ++i) c.labels.push_back(i == 1 ? "t" : "t" + std::to_string(i));
  const std::size_t n = m - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j + 2 < m) c.products[{i, j}] = unit_vector(n, i + j + 1);
  return from_associative(c, {unit_vector(n, 0)}, {"t"});
}

TablePtr construct(const std::string& name, const Params& params) {
  ParamReader p(name, params);
  TablePtr out;
  if (name == "constant") {
    out = constant_algebra();
  } else if (name == "elementary") {
    out = elementary_algebra(p.size("n", 2));
  } else if (name == "three-dim-alpha") {
    out = three_dim_alpha(p.scalar("alpha", 1));
  } else if (name == "not-train") {
    out = example_not_train();
  } else if (name == "shift-up") {
    out = shift_up_truncated(p.size("n", 4));
  } else if (name == "shift-down") {
    out = shift_down_truncated(p.size("n", 4));
  } else if (name == "free-single") {
    std::size_t n = p.size("n", 5);
    out = free_single_truncated(n, p.scalars("betas"));
  } else if (name == "zhevlakov") {
    auto z = zhevlakov_truncated(p.size("vars", 4), p.size("len", 4));
    out = adjoin_idempotent(*z.table, z.u_idx, z.v_idx);
  } else if (name == "kurosh") {
    auto g = buchberger_truncated(kurosh_presentation(), p.size("max-deg", 12));
    out = bernstein_from_presentation(g, p.size("trunc", 6));
  } else if (name == "power-nil") {
    std::size_t n = p.size("n", 2), k = p.size("k", 3);
    auto g = buchberger_truncated(power_nil_presentation(n, k), p.size("max-deg", 8));
    out = bernstein_from_presentation(g, p.size("trunc", 4));
  } else if (name == "power-series") {
    out = power_series_algebra(p.size("m", 4));
  } else {
    throw InputError("unknown construction '" + name + "'");
  }
  p.done();
  return out;
}

}  // namespace baric
