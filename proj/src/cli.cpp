#include "baric/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"

#include "baric/bernstein.hpp"
#include "baric/catalog.hpp"
#include "baric/constructions.hpp"
#include "baric/element_analysis.hpp"
#include "baric/errors.hpp"
#include "baric/io.hpp"
#include "baric/kurosh.hpp"
#include "baric/symbolic.hpp"
#include "baric/train_engel.hpp"

namespace baric {

namespace {

struct Options {
  bool json = false;
  unsigned seed = 0;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string list_of(const std::vector<Element>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s + "]";
}

Json elements_json(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(vector_to_json(*x.algebra(), x.coords()));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string optional_text(const std::optional<std::size_t>& v, std::size_t bound) {
  return v ? std::to_string(*v) : "not found up to " + std::to_string(bound);
}

void finish(std::ostream& out, const Options& o, const Json& j) {
  if (o.json) out << j.dump() << "\n";
}

void cmd_check(const std::string& file, const Options& o, std::ostream& out) {
  auto a = load_algebra(file);
  Json j;
  j["command"] = "check";
  j["algebra"] = a->name();
  j["dim"] = a->dim();
  out << "algebra: " << a->name() << " (dim " << a->dim() << ")\n";
  auto b = is_bernstein(a);
  out << "bernstein: " << yes_no(b.holds) << "\n";
  j["bernstein"] = b.holds;
  if (!b.holds) {
    out << "  witness x = " << to_string(b.witness_elements.at(0)) << "\n";
    j["witness"] = vector_to_json(*a, b.witness_elements.at(0).coords());
    finish(out, o, j);
    return;
  }
  auto p = peirce(a);
  auto r = classify(a);
  auto deg = generic_degree(a, o.seed);
  out << "idempotent: " << to_string(p.e) << "\n";
  out << "U: " << list_of(p.U) << "\n";
  out << "V: " << list_of(p.V) << "\n";
  out << "type: (" << r.type_pair.first << ", " << r.type_pair.second << ")\n";
  out << "nuclear: " << yes_no(r.is_nuclear) << "\n";
  out << "exceptional: " << yes_no(r.is_exceptional) << "\n";
  out << "jordan: " << yes_no(r.is_jordan) << "\n";
  out << "lyubich ideal: " << list_of(r.lyubich_basis) << "\n";
  out << "generic degree: " << deg.degree << (deg.certified ? " (certified, " : " (lower bound, ") << deg.method << ")\n";
  j["idempotent"] = vector_to_json(*a, p.e.coords());
  j["U"] = elements_json(p.U);
  j["V"] = elements_json(p.V);
  j["type"] = {r.type_pair.first, r.type_pair.second};
  j["nuclear"] = r.is_nuclear;
  j["exceptional"] = r.is_exceptional;
  j["jordan"] = r.is_jordan;
  j["lyubich"] = elements_json(r.lyubich_basis);
  j["generic_degree"] = {{"degree", deg.degree}, {"certified", deg.certified}, {"method", deg.method}, {"seed", o.seed}};
  finish(out, o, j);
}

void cmd_element(const std::string& file, const std::string& spec, const Options& o, std::ostream& out) {
  auto a = load_algebra(file);
  Element x = parse_element(a, spec);
  auto r = analyze_element(x);
  Json j;
  j["command"] = "element";
  j["element"] = vector_to_json(*a, x.coords());
  out << "element: " << to_string(x) << "\n";
  std::optional<Scalar> w;
  if (a->has_weight()) {
    w = weight_of(x);
    out << "weight: " << to_string(*w) << "\n";
    j["weight"] = to_string(*w);
  }
  out << "degree: " << r.degree << "\n";
  out << "minimal polynomial: " << to_string(r.minimal_poly) << "\n";
  for (std::size_t k = 0; k < r.power_basis.size(); ++k)
    out << "  a^" << k + 1 << " = " << to_string(r.power_basis[k]) << "\n";
  out << "right nilpotent: "
      << (r.right_nilpotency_index ? "index " + std::to_string(*r.right_nilpotency_index) : std::string("no")) << "\n";
  j["degree"] = r.degree;
  j["minimal_poly"] = poly_to_json(r.minimal_poly);
  j["minimal_poly_text"] = to_string(r.minimal_poly);
  j["powers"] = elements_json(r.power_basis);
  j["right_nilpotency_index"] = optional_json(r.right_nilpotency_index);
  if (w) {
    bool form = minimal_poly_form_check(r);
    out << "minimal polynomial form: " << (form ? "matches" : "does not match") << " the case split\n";
    out << "gamma_1: " << to_string(-r.minimal_poly.coeff(1)) << "\n";
    j["form_check"] = form;
    j["gamma_1"] = to_string(-r.minimal_poly.coeff(1));
    if (*w != 0) {
      auto t = train_element_rank(x);
      out << "train element rank: " << (t.rank ? std::to_string(*t.rank) : "not found up to " + std::to_string(t.searched_up_to))
          << "\n";
      j["train_rank"] = optional_json(t.rank);
      j["train_rank_bound"] = t.searched_up_to;
    } else {
      out << "train element rank: not applicable (weight 0)\n";
      j["train_rank"] = nullptr;
    }
  }
  finish(out, o, j);
}

void cmd_train(const std::string& file, const Options& o, std::ostream& out) {
  auto a = load_algebra(file);
  auto r = train_analysis(a);
  auto p = peirce(a);
  auto lyu = operator_nilpotency_check(p, OperatorCarrier::Lyubich);
  bool lemma = lemma_L_k3_check(p, 4);
  std::size_t u_bound = p.U.size() + 1, l_bound = lyubich_ideal(p).size() + 1;
  out << "algebra: " << a->name() << " (dim " << a->dim() << ")\n";
  out << "train: " << yes_no(r.is_train);
  if (r.rank)
    out << ", rank " << *r.rank << "\n";
  else
    out << " (rank not found up to " << r.rank_search_bound << ")\n";
  if (r.train_poly) out << "train polynomial (w = 1): " << to_string(*r.train_poly) << "\n";
  out << "nil index of N: " << optional_text(r.nil_index_N, r.nil_search_bound) << "\n";
  out << "locally train: " << yes_no(r.is_locally_train) << "\n";
  out << "L_v nilpotent on U: " << optional_text(r.operator_index_U, u_bound) << "\n";
  out << "L_v nilpotent on L(A): " << optional_text(lyu, l_bound) << "\n";
  out << "L_x^{k+3} = L_v^k L_x^3 on N (k <= 4): " << (lemma ? "holds" : "fails") << "\n";
  out << "search bounds: nil " << r.nil_search_bound << ", rank " << r.rank_search_bound << ", operators dim + 1\n";
  Json j{{"command", "train"},
         {"algebra", a->name()},
         {"is_train", r.is_train},
         {"rank", optional_json(r.rank)},
         {"train_poly", r.train_poly ? poly_to_json(*r.train_poly) : Json(nullptr)},
         {"nil_index_N", optional_json(r.nil_index_N)},
         {"is_locally_train", r.is_locally_train},
         {"operator_index_U", optional_json(r.operator_index_U)},
         {"operator_index_L", optional_json(lyu)},
         {"lemma_L_k3", lemma},
         {"bounds", {{"nil", r.nil_search_bound}, {"rank", r.rank_search_bound}, {"operator_U", u_bound}, {"operator_L", l_bound}}}};
  finish(out, o, j);
}

std::vector<Vector> parse_carrier(const TablePtr& a, const std::string& spec) {
  if (spec == "A") {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < a->dim(); ++i) all.push_back(unit_vector(a->dim(), i));
    return all;
  }
  if (spec == "N") return barideal_basis(*a);
  if (spec == "U" || spec == "V" || spec == "L") {
    auto p = peirce(a);
    if (spec == "U") return p.U_coords();
    if (spec == "V") return p.V_coords();
    return coords_of(lyubich_ideal(p));
  }
  if (spec.rfind("span:", 0) == 0) {
    std::vector<Vector> basis;
    std::stringstream ss(spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ';')) basis.push_back(parse_element(a, item).coords());
    return basis;
  }
  throw InputError("carrier must be N, U, V, L, A or span:<spec>;<spec>..., got '" + spec + "'");
}

void cmd_engel(const std::string& file, const std::string& carrier, const Options& o, std::ostream& out) {
  auto a = load_algebra(file);
  auto c = make_carrier(a, parse_carrier(a, carrier), carrier);
  auto r = engel_yagzhev(c);
  out << "carrier: " << carrier << " (dim " << c.basis.size() << ")\n";
  out << "(x^2)^2 = 0 on carrier: " << yes_no(r.satisfies_sq_sq_zero) << "\n";
  out << "nil index: " << optional_text(r.nil_bounded_index, r.nil_search_bound) << "\n";
  out << "Engel index: " << optional_text(r.engel_index, r.engel_search_bound) << "\n";
  out << "Yagzhev index: " << optional_text(r.yagzhev_index, r.yagzhev_verified_upto) << " (T_q checked for q <= "
      << r.yagzhev_verified_upto << ")\n";
  if (r.satisfies_sq_sq_zero)
    out << "verdicts agree: " << yes_no(r.nil_bounded_index.has_value() == r.engel_index.has_value() &&
                                        r.engel_index.has_value() == r.yagzhev_index.has_value())
        << "\n";
  Json j{{"command", "engel"},
         {"carrier", carrier},
         {"carrier_dim", c.basis.size()},
         {"sq_sq_zero", r.satisfies_sq_sq_zero},
         {"nil_index", optional_json(r.nil_bounded_index)},
         {"engel_index", optional_json(r.engel_index)},
         {"yagzhev_index", optional_json(r.yagzhev_index)},
         {"bounds", {{"nil", r.nil_search_bound}, {"engel", r.engel_search_bound}, {"yagzhev", r.yagzhev_verified_upto}}}};
  finish(out, o, j);
}

void cmd_construct(const std::string& name, const std::vector<std::string>& raw, const std::string& in_file,
                   const std::string& out_file, const Options& o, std::ostream& out) {
  Params params;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    require(eq != std::string::npos && eq > 0, "parameter '" + kv + "' is not key=value");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  TablePtr a;
  if (name == "lyubich-quotient" || name == "zero-v-squared" || name == "subalgebra") {
    require(!in_file.empty(), name + " needs --in");
    auto base = load_algebra(in_file);
    if (name == "subalgebra") {
      require(params.count("gens") && params.size() == 1, "subalgebra takes exactly gens=<spec>;<spec>...");
      a = subalgebra(base, parse_carrier(base, "span:" + params.at("gens"))).table;
    } else {
      require(params.empty(), name + " takes no parameters");
      auto p = peirce(base);
      a = name == "zero-v-squared" ? zero_v_squared(p) : quotient(base, coords_of(lyubich_ideal(p)));
    }
  } else {
    require(in_file.empty(), name + " does not read an input file");
    a = construct(name, params);
  }
  Json j = algebra_to_json(*a);
  if (out_file.empty()) {
    out << j.dump(2) << "\n";
  } else {
    save_algebra(*a, out_file);
    out << "wrote " << a->name() << " (dim " << a->dim() << ") to " << out_file << "\n";
    finish(out, o, Json{{"command", "construct"}, {"name", a->name()}, {"dim", a->dim()}, {"out", out_file}});
  }
}

void cmd_groebner(const std::string& file, std::size_t max_deg, std::size_t list_upto, const Options& o,
                  std::ostream& out) {
  auto pres = load_presentation(file);
  auto g = buchberger_truncated(pres, max_deg);
  const auto& gens = g.generators;
  out << "generators: ";
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ", " : "") << gens[i];
  out << "\nrelations: " << pres.relations.size() << "\n";
  out << "basis (complete below degree " << g.complete_below << "):\n";
  for (const auto& b : g.basis) out << "  " << to_string(b, gens) << "\n";
  out << "new elements: " << g.added;
  if (g.added == 0) out << " (relations are a Groebner basis up to degree " << max_deg << ")";
  out << "\nobstructions checked: " << g.obstructions << "\n";
  if (!g.homogeneous) out << "note: inhomogeneous presentation\n";
  auto counts = hilbert_counts(g, max_deg);
  out << "hilbert counts (degree 0.." << max_deg << "):";
  for (auto c : counts) out << " " << c;
  out << "\n";
  Json words = Json::object();
  for (std::size_t d = 1; d <= std::min(list_upto, max_deg); ++d) {
    auto nw = normal_words(g, d);
    out << "normal words of degree " << d << ":";
    Json arr = Json::array();
    for (const auto& w : nw) {
      out << " " << word_to_string(w, gens);
      arr.push_back(word_to_string(w, gens));
    }
    out << "\n";
    words[std::to_string(d)] = arr;
  }
  Json basis = Json::array();
  for (const auto& b : g.basis) basis.push_back(to_string(b, gens));
  finish(out, o,
         Json{{"command", "groebner"},
              {"basis", basis},
              {"added", g.added},
              {"obstructions", g.obstructions},
              {"complete_below", g.complete_below},
              {"homogeneous", g.homogeneous},
              {"hilbert", counts},
              {"normal_words", words}});
}

void cmd_kurosh(std::size_t max_deg, std::size_t trunc, const Options& o, std::ostream& out) {
  auto r = kurosh_demo(max_deg, trunc);
  auto verdict = [](bool b) { return b ? "PASS" : "FAIL"; };
  out << "kurosh demo (max degree " << max_deg << ", truncation " << trunc << ")\n";
  out << "  groebner basis, no new elements up to degree " << max_deg << ": " << verdict(r.groebner_ok) << " ("
      << r.obstructions << " obstructions, complete below " << r.complete_below << ")\n";
  out << "  (ax + by)^3 = 0: " << verdict(r.nil_span_ok) << "\n";
  out << "  hilbert counts positive up to " << max_deg << ", (xy)^t normal up to t = " << r.xy_checked_upto << ": "
      << verdict(r.hilbert_ok) << "\n";
  if (!r.hilbert.empty()) {
    out << "    counts:";
    for (auto c : r.hilbert) out << " " << c;
    out << "\n";
  }
  out << "  train of rank 4 with coefficients (1, -3/2, 1/2, 0): " << verdict(r.train_ok);
  if (r.algebra_dim) out << " (dim C = " << r.c_dim << ", dim A = " << r.algebra_dim << ")";
  out << "\n";
  if (r.train && r.train->train_poly) out << "    train polynomial (w = 1): " << to_string(*r.train->train_poly) << "\n";
  for (const auto& f : r.failures) out << "  failure: " << f << "\n";
  out << "kurosh demo: " << verdict(r.pass()) << "\n";
  Json j{{"command", "kurosh-demo"},
         {"max_deg", max_deg},
         {"trunc", trunc},
         {"pass", r.pass()},
         {"groebner", r.groebner_ok},
         {"complete_below", r.complete_below},
         {"nil_span", r.nil_span_ok},
         {"hilbert_ok", r.hilbert_ok},
         {"hilbert", r.hilbert},
         {"train", r.train_ok},
         {"algebra_dim", r.algebra_dim},
         {"failures", r.failures}};
  if (r.train && r.train->train_poly) j["train_poly"] = poly_to_json(*r.train->train_poly);
  finish(out, o, j);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of baric and Bernstein algebras", "baric"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "append a machine-readable JSON line");
  app.add_option("--seed", o.seed, "seed for random evaluation points")->default_val(0);

  std::string file, spec, carrier = "N", name, in_file, out_file;
  std::vector<std::string> params;
  std::size_t max_deg = 12, trunc = 6, list_upto = 4;

  auto* check = app.add_subcommand("check", "Bernstein test, Peirce decomposition and structure flags");
  check->add_option("file", file, "algebra file")->required();
  auto* element = app.add_subcommand("element", "degree, minimal polynomial and train rank of an element");
  element->add_option("file", file, "algebra file")->required();
  element->add_option("element", spec, "linear combination such as 'e + 2u1 - 1/2 v'")->required();
  auto* train = app.add_subcommand("train", "train, locally train and operator nilpotency verdicts");
  train->add_option("file", file, "algebra file")->required();
  auto* engel = app.add_subcommand("engel", "nil, Engel and Yagzhev verdicts on a subalgebra");
  engel->add_option("file", file, "algebra file")->required();
  engel->add_option("--carrier", carrier, "N, U, V, L, A or span:<spec>;<spec>...");
  auto* cons = app.add_subcommand("construct", "build a catalog algebra and emit its file");
  cons->add_option("name", name, "construction name")->required();
  cons->add_option("--param", params, "key=value")->allow_extra_args(false);
  cons->add_option("--in", in_file, "input algebra for derived constructions");
  cons->add_option("--out", out_file, "output file (stdout when absent)");
  auto* list = app.add_subcommand("list", "list catalog constructions");
  auto* gb = app.add_subcommand("groebner", "truncated Groebner basis, Hilbert counts and normal words");
  gb->add_option("file", file, "presentation file")->required();
  gb->add_option("--max-deg", max_deg, "obstruction degree bound")->default_val(12);
  gb->add_option("--list-upto", list_upto, "list normal words up to this degree")->default_val(4);
  auto* kd = app.add_subcommand("kurosh-demo", "end-to-end Kurosh counterexample check");
  kd->add_option("--max-deg", max_deg, "Groebner degree bound")->default_val(12);
  kd->add_option("--trunc", trunc, "truncation degree of C")->default_val(6);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*check) cmd_check(file, o, out);
    if (*element) cmd_element(file, spec, o, out);
    if (*train) cmd_train(file, o, out);
    if (*engel) cmd_engel(file, carrier, o, out);
    if (*cons) cmd_construct(name, params, in_file, out_file, o, out);
    if (*list)
      for (const auto& e : catalog_entries())
        out << e.name << (e.params.empty() ? "" : " [" + e.params + "]") << ": " << e.summary << "\n";
    if (*gb) cmd_groebner(file, max_deg, list_upto, o, out);
    if (*kd) cmd_kurosh(max_deg, trunc, o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace baric
