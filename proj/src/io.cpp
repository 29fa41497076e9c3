#include "baric/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "baric/errors.hpp"

namespace baric {

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const std::string& context) {
  require(j.is_object() && j.contains(key), context + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string string_of(const Json& j, const std::string& context) {
  require(j.is_string(), context + ": expected a string");
  return j.get<std::string>();
}

Scalar scalar_of(const Json& j, const std::string& context) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  require(j.is_string(), context + ": expected a scalar string \"p/q\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(context + ": " + e.what());
  }
}

Vector combination(const std::vector<std::string>& labels, const Json& j, const std::string& context) {
  require(j.is_object(), context + ": expected a map from labels to scalars");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
  Vector v(labels.size());
  for (const auto& [label, value] : j.items()) {
    auto it = index.find(label);
    require(it != index.end(), context + ": unknown label '" + label + "'");
    v[it->second] = scalar_of(value, context + ", label '" + label + "'");
  }
  return v;
}

}  // namespace

Json vector_to_json(const AlgebraTable& a, const Vector& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[a.labels()[i]] = to_string(v[i]);
  return out;
}

Json poly_to_json(const UnivariatePoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Json algebra_to_json(const AlgebraTable& a) {
  Json j;
  j["name"] = a.name();
  j["basis"] = a.labels();
  if (a.has_weight()) j["weight"] = vector_to_json(a, a.weight());
  Json prods = Json::array();
  for (const auto& [key, value] : a.products()) {
    if (is_zero(value)) continue;
    prods.push_back({{"left", a.labels()[key.first]}, {"right", a.labels()[key.second]}, {"value", vector_to_json(a, value)}});
  }
  j["products"] = prods;
  return j;
}

TablePtr algebra_from_json(const Json& j) {
  require(j.is_object(), "algebra file: expected a JSON object");
  std::string name = j.contains("name") ? string_of(j.at("name"), "name") : "algebra";
  const Json& basis = field(j, "basis", "algebra file");
  require(basis.is_array() && !basis.empty(), "basis: expected a nonempty list of labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) labels.push_back(string_of(l, "basis"));
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require(index.emplace(labels[i], i).second, "basis: duplicate label '" + labels[i] + "'");
  }
  auto lookup = [&](const Json& l, const std::string& context) {
    std::string s = string_of(l, context);
    auto it = index.find(s);
    require(it != index.end(), context + ": unknown label '" + s + "'");
    return it->second;
  };
  ProductMap products;
  if (j.contains("products")) {
    const Json& ps = j.at("products");
    require(ps.is_array(), "products: expected a list");
    for (std::size_t k = 0; k < ps.size(); ++k) {
      std::string ctx = "products[" + std::to_string(k) + "]";
      std::size_t l = lookup(field(ps[k], "left", ctx), ctx + ".left");
      std::size_t r = lookup(field(ps[k], "right", ctx), ctx + ".right");
      ctx += " (" + labels[l] + "*" + labels[r] + ")";
      auto key = std::minmax(l, r);
      require(!products.count(key), ctx + ": product listed twice");
      products[key] = combination(labels, field(ps[k], "value", ctx), ctx);
    }
  }
  std::optional<Vector> weight;
  if (j.contains("weight") && !j.at("weight").is_null())
    weight = combination(labels, j.at("weight"), "weight");
  return make_table(name, labels, products, weight);
}

TablePtr load_algebra(const std::string& path) { return algebra_from_json(read_json(path)); }

void save_algebra(const AlgebraTable& a, const std::string& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write " + path);
  out << algebra_to_json(a).dump(2) << "\n";
}

Json presentation_to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations) {
    Json terms = Json::array();
    for (const auto& [w, c] : r.terms()) terms.push_back({{"coeff", to_string(c)}, {"word", word_to_string(w, p.generators)}});
    rels.push_back(terms);
  }
  return {{"generators", p.generators}, {"relations", rels}};
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  const Json& gens = field(j, "generators", "presentation");
  require(gens.is_array() && !gens.empty(), "generators: expected a nonempty list");
  std::set<std::string> seen;
  for (const auto& g : gens) {
    p.generators.push_back(string_of(g, "generators"));
    require(seen.insert(p.generators.back()).second, "generators: duplicate '" + p.generators.back() + "'");
  }
  const Json& rels = field(j, "relations", "presentation");
  require(rels.is_array(), "relations: expected a list");
  for (std::size_t k = 0; k < rels.size(); ++k) {
    std::string ctx = "relations[" + std::to_string(k) + "]";
    require(rels[k].is_array(), ctx + ": expected a list of terms");
    std::vector<NcPoly::Term> terms;
    for (std::size_t t = 0; t < rels[k].size(); ++t) {
      std::string tctx = ctx + "[" + std::to_string(t) + "]";
      Scalar c = rels[k][t].contains("coeff") ? scalar_of(rels[k][t].at("coeff"), tctx + ".coeff") : Scalar(1);
      try {
        terms.emplace_back(parse_word(string_of(field(rels[k][t], "word", tctx), tctx + ".word"), p.generators), c);
      } catch (const InputError& e) {
        throw InputError(tctx + ": " + e.what());
      }
    }
    NcPoly r = NcPoly::from_terms(std::move(terms));
    require(!r.is_zero(), ctx + ": relation is zero");
    p.relations.push_back(std::move(r));
  }
  return p;
}

Presentation load_presentation(const std::string& path) { return presentation_from_json(read_json(path)); }

Element parse_element(const TablePtr& a, const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), "empty element spec");
  if (s == "0") return Element::zero(a);
  Vector v(a->dim());
  std::size_t i = 0;
  while (i < s.size()) {
    Scalar sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i > 0) {
      throw InputError("element spec '" + spec + "': expected + or - at offset " + std::to_string(i));
    }
    std::size_t end = s.find_first_of("+-", i);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(i, end - i);
    require(!term.empty(), "element spec '" + spec + "': empty term");
    std::size_t k = 0;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    if (k < term.size() && term[k] == '/') {
      ++k;
      while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    }
    Scalar coeff = 1;
    std::string label;
    if (k > 0) {
      coeff = parse_scalar(term.substr(0, k));
      label = term.substr(k);
      if (!label.empty() && label[0] == '*') label = label.substr(1);
    } else {
      label = term;
    }
    // A label may itself start with digits; prefer the whole term if it is one.
    if (k > 0 && a->index_of(term)) {
      coeff = 1;
      label = term;
    }
    auto idx = a->index_of(label);
    require(idx.has_value(), "element spec '" + spec + "': unknown label '" + label + "'");
    v[*idx] += sign * coeff;
    i = end;
  }
  return Element(a, v);
}

}  // namespace baric
