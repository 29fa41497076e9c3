#include "baric/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "baric/errors.hpp"

namespace baric {

bool word_greater(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return word_greater(a, b); }
};

using TermMap = std::map<Word, Scalar, WordGreater>;

void add_term(TermMap& m, const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

NcPoly from_map(const TermMap& m) {
  std::vector<NcPoly::Term> terms(m.begin(), m.end());
  return NcPoly::from_terms(std::move(terms));
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

bool occurs_at(const Word& w, std::size_t pos, const Word& f) {
  return pos + f.size() <= w.size() && std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

// Leftmost position, then first basis element.
std::optional<std::pair<std::size_t, std::size_t>> find_factor(const Word& w, const std::vector<NcPoly>& basis) {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (occurs_at(w, pos, basis[k].leading_word())) return std::make_pair(pos, k);
  return std::nullopt;
}

NcPoly reduce_by(const NcPoly& p, const std::vector<NcPoly>& basis) {
  TermMap m(p.terms().begin(), p.terms().end());
  auto it = m.begin();
  while (it != m.end()) {
    auto hit = find_factor(it->first, basis);
    if (!hit) {
      ++it;
      continue;
    }
    const Word w = it->first;
    const Scalar c = it->second;
    const NcPoly& h = basis[hit->second];
    Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(hit->first));
    Word right(w.begin() + static_cast<std::ptrdiff_t>(hit->first + h.leading_word().size()), w.end());
    for (const auto& [u, d] : h.terms()) add_term(m, concat(concat(left, u), right), -c * d);
    it = m.upper_bound(w);
  }
  return from_map(m);
}

bool has_factor_suffix(const Word& w, const std::vector<NcPoly>& basis) {
  for (const auto& g : basis) {
    const auto& l = g.leading_word();
    if (l.size() <= w.size() && occurs_at(w, w.size() - l.size(), l)) return true;
  }
  return false;
}

// Monic, leading words pairwise non-divisible, tails reduced; sorted by
// decreasing leading word.
std::vector<NcPoly> interreduce(std::vector<NcPoly> todo) {
  std::vector<NcPoly> basis;
  std::reverse(todo.begin(), todo.end());
  while (!todo.empty()) {
    NcPoly p = reduce_by(todo.back(), basis);
    todo.pop_back();
    if (p.is_zero()) continue;
    p = p.monic();
    const Word& l = p.leading_word();
    std::vector<NcPoly> keep;
    for (auto& g : basis) {
      const Word& gl = g.leading_word();
      bool contains = false;
      for (std::size_t pos = 0; pos + l.size() <= gl.size() && !contains; ++pos) contains = occurs_at(gl, pos, l);
      if (contains)
        todo.push_back(std::move(g));
      else
        keep.push_back(std::move(g));
    }
    keep.push_back(std::move(p));
    basis = std::move(keep);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<NcPoly> others;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(basis[j]);
    basis[i] = reduce_by(basis[i], others).monic();
  }
  std::sort(basis.begin(), basis.end(),
            [](const NcPoly& a, const NcPoly& b) { return word_greater(a.leading_word(), b.leading_word()); });
  return basis;
}

void require_complete(const GroebnerState& g, std::size_t degree) {
  if (degree >= g.complete_below)
    throw InputError("completeness bound insufficient: degree " + std::to_string(degree) +
                     " needs a basis complete below " + std::to_string(degree + 1) + ", have " +
                     std::to_string(g.complete_below));
}

}  // namespace

NcPoly NcPoly::word(Word w, const Scalar& c) {
  NcPoly p;
  if (c != 0) p.terms_.emplace_back(std::move(w), c);
  return p;
}

NcPoly NcPoly::from_terms(std::vector<Term> terms) {
  TermMap m;
  for (auto& [w, c] : terms) add_term(m, w, c);
  NcPoly p;
  p.terms_.assign(m.begin(), m.end());
  return p;
}

std::size_t NcPoly::degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.size());
  return d;
}

bool NcPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.first.size() == terms_.front().first.size(); });
}

NcPoly NcPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = 1 / leading_coeff();
  return inv * *this;
}

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
  auto terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return NcPoly::from_terms(std::move(terms));
}

NcPoly operator-(const NcPoly& a, const NcPoly& b) { return a + Scalar(-1) * b; }

NcPoly operator*(const Scalar& c, const NcPoly& a) {
  if (c == 0) return {};
  auto terms = a.terms();
  for (auto& t : terms) t.second *= c;
  return NcPoly::from_terms(std::move(terms));
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  TermMap m;
  for (const auto& [u, c] : a.terms())
    for (const auto& [w, d] : b.terms()) add_term(m, concat(u, w), c * d);
  return from_map(m);
}

NcPoly sandwich(const Word& left, const NcPoly& p, const Word& right) {
  auto terms = p.terms();
  for (auto& t : terms) t.first = concat(concat(left, t.first), right);
  return NcPoly::from_terms(std::move(terms));
}

std::string word_to_string(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  bool single = std::all_of(generators.begin(), generators.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += '*';
    out += generators.at(w[i]);
  }
  return out;
}

std::string to_string(const NcPoly& p, const std::vector<std::string>& generators) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Scalar a = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a) + " ";
    out += word_to_string(w, generators);
    first = false;
  }
  return out;
}

Word parse_word(const std::string& s, const std::vector<std::string>& generators) {
  Word w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '*')) ++i;
  };
  skip();
  if (s.substr(i) == "1") return w;
  while (i < s.size()) {
    std::size_t best = generators.size(), best_len = 0;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const auto& name = generators[g];
      if (name.size() > best_len && s.compare(i, name.size(), name) == 0) {
        best = g;
        best_len = name.size();
      }
    }
    require(best < generators.size(), "unknown generator in word '" + s + "' at offset " + std::to_string(i));
    i += best_len;
    std::size_t exp = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      require(i > start, "missing exponent in word '" + s + "'");
      exp = std::stoul(s.substr(start, i - start));
    }
    w.insert(w.end(), exp, static_cast<std::uint8_t>(best));
    skip();
  }
  return w;
}

Presentation kurosh_presentation() {
  const Word x3{0, 0, 0}, y3{1, 1, 1};
  return {{"x", "y"},
          {NcPoly::word(x3), NcPoly::word(y3),
           NcPoly::from_terms({{{0, 0, 1}, 1}, {{0, 1, 0}, 1}, {{1, 0, 0}, 1}}),
           NcPoly::from_terms({{{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 1}})}};
}

Presentation power_nil_presentation(std::size_t n, std::size_t k) {
  require(n >= 1 && n <= 255, "number of generators must be in 1..255");
  require(k >= 1, "power must be positive");
  Presentation p;
  if (n == 2) {
    p.generators = {"x", "y"};
  } else {
    for (std::size_t i = 1; i <= n; ++i) p.generators.push_back("x" + std::to_string(i));
  }
  // Contents in decreasing order of the first letters: x^k first.
  std::vector<std::size_t> counts(n, 0);
  auto emit = [&] {
    Word w;
    for (std::size_t g = 0; g < n; ++g) w.insert(w.end(), counts[g], static_cast<std::uint8_t>(g));
    std::vector<NcPoly::Term> terms;
    do {
      terms.emplace_back(w, 1);
    } while (std::next_permutation(w.begin(), w.end()));
    p.relations.push_back(NcPoly::from_terms(std::move(terms)));
  };
  auto rec = [&](auto&& self, std::size_t g, std::size_t left) -> void {
    if (g + 1 == n) {
      counts[g] = left;
      emit();
      return;
    }
    for (std::size_t c = left + 1; c-- > 0;) {
      counts[g] = c;
      self(self, g + 1, left - c);
    }
  };
  rec(rec, 0, k);
  return p;
}

NcPoly reduce(const NcPoly& p, const GroebnerState& g) { return reduce_by(p, g.basis); }

std::vector<Rewrite> available_rewrites(const NcPoly& p, const GroebnerState& g) {
  std::vector<Rewrite> out;
  for (const auto& [w, c] : p.terms())
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t k = 0; k < g.basis.size(); ++k)
        if (occurs_at(w, pos, g.basis[k].leading_word())) out.push_back({w, pos, k});
  return out;
}

NcPoly apply_rewrite(const NcPoly& p, const GroebnerState& g, const Rewrite& r) {
  const NcPoly& h = g.basis.at(r.element);
  require(occurs_at(r.word, r.position, h.leading_word()), "rewrite does not match its word");
  Scalar c = 0;
  for (const auto& [w, d] : p.terms())
    if (w == r.word) c = d;
  require(c != 0, "rewrite word is not a term");
  Word left(r.word.begin(), r.word.begin() + static_cast<std::ptrdiff_t>(r.position));
  Word right(r.word.begin() + static_cast<std::ptrdiff_t>(r.position + h.leading_word().size()), r.word.end());
  return p - c * sandwich(left, h, right);
}

GroebnerState buchberger_truncated(const Presentation& p, std::size_t max_deg) {
  require(!p.generators.empty(), "presentation has no generators");
  GroebnerState g;
  g.generators = p.generators;
  g.max_degree = max_deg;
  std::vector<NcPoly> rels;
  for (const auto& r : p.relations) {
    require(!r.is_zero(), "relations must be nonzero");
    for (const auto& [w, c] : r.terms())
      for (auto letter : w) require(letter < p.generators.size(), "relation uses an unknown generator");
    require(r.degree() <= max_deg, "max degree is below a relation degree");
    g.homogeneous = g.homogeneous && r.is_homogeneous();
    rels.push_back(r);
  }
  g.basis = interreduce(std::move(rels));
  for (;;) {
    std::vector<NcPoly> fresh;
    g.obstructions = 0;
    for (std::size_t i = 0; i < g.basis.size(); ++i)
      for (std::size_t j = 0; j < g.basis.size(); ++j) {
        const Word& li = g.basis[i].leading_word();
        const Word& lj = g.basis[j].leading_word();
        for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
          if (li.size() + lj.size() - k > max_deg) continue;
          if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin())) continue;
          ++g.obstructions;
          Word right(lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end());
          Word left(li.begin(), li.end() - static_cast<std::ptrdiff_t>(k));
          NcPoly s = sandwich({}, g.basis[i], right) - sandwich(left, g.basis[j], {});
          NcPoly r = reduce_by(s, g.basis);
          if (!r.is_zero()) fresh.push_back(r);
        }
      }
    if (fresh.empty()) break;
    g.added += fresh.size();
    auto all = g.basis;
    all.insert(all.end(), fresh.begin(), fresh.end());
    g.basis = interreduce(std::move(all));
  }
  g.complete_below = max_deg + 1;
  return g;
}

std::vector<Word> normal_words(const GroebnerState& g, std::size_t degree) {
  require_complete(g, degree);
  std::vector<Word> out;
  Word w;
  auto dfs = [&](auto&& self) -> void {
    if (w.size() == degree) {
      out.push_back(w);
      return;
    }
    for (std::size_t a = 0; a < g.generators.size(); ++a) {
      w.push_back(static_cast<std::uint8_t>(a));
      if (!has_factor_suffix(w, g.basis)) self(self);
      w.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

std::vector<std::size_t> hilbert_counts(const GroebnerState& g, std::size_t up_to) {
  require_complete(g, up_to);
  std::vector<std::size_t> counts(up_to + 1, 0);
  Word w;
  auto dfs = [&](auto&& self) -> void {
    ++counts[w.size()];
    if (w.size() == up_to) return;
    for (std::size_t a = 0; a < g.generators.size(); ++a) {
      w.push_back(static_cast<std::uint8_t>(a));
      if (!has_factor_suffix(w, g.basis)) self(self);
      w.pop_back();
    }
  };
  dfs(dfs);
  return counts;
}

NilSpanResult nil_span_check(const std::vector<NcPoly>& span_gens, std::size_t power, const GroebnerState& g) {
  require(!span_gens.empty(), "empty span");
  require(power >= 1, "power must be positive");
  std::size_t maxdeg = 0;
  for (const auto& s : span_gens) maxdeg = std::max(maxdeg, s.degree());
  NilSpanResult r;
  r.needed_degree = power * maxdeg;
  require_complete(g, r.needed_degree);
  auto alphas = fresh_vars("a", span_gens.size());
  std::map<Word, MultiPoly, WordGreater> cur{{Word{}, MultiPoly(1)}};
  for (std::size_t p = 0; p < power; ++p) {
    std::map<Word, MultiPoly, WordGreater> next;
    for (const auto& [w, c] : cur)
      for (std::size_t i = 0; i < span_gens.size(); ++i) {
        MultiPoly ca = c * MultiPoly::var(alphas[i]);
        for (const auto& [u, d] : span_gens[i].terms()) next[concat(w, u)] += d * ca;
      }
    cur = std::move(next);
  }
  std::map<Word, MultiPoly, WordGreater> out;
  for (const auto& [w, c] : cur) {
    if (c.is_zero()) continue;
    NcPoly nf = reduce_by(NcPoly::word(w), g.basis);
    for (const auto& [u, d] : nf.terms()) out[u] += d * c;
  }
  for (auto& [w, c] : out)
    if (!c.is_zero()) r.residual.emplace_back(w, c);
  r.holds = r.residual.empty();
  return r;
}

AssociativeTable truncated_algebra_table(const GroebnerState& g, std::size_t up_to) {
  require(g.homogeneous, "degree truncation needs a homogeneous presentation");
  require(up_to >= 1, "truncation degree must be positive");
  require_complete(g, up_to);
  std::vector<Word> words;
  for (std::size_t d = 1; d <= up_to; ++d) {
    auto nw = normal_words(g, d);
    words.insert(words.end(), nw.begin(), nw.end());
  }
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  AssociativeTable t;
  for (const auto& w : words) t.labels.push_back(word_to_string(w, g.generators));
  const std::size_t n = words.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (words[i].size() + words[j].size() > up_to) continue;
      NcPoly nf = reduce_by(NcPoly::word(concat(words[i], words[j])), g.basis);
      if (nf.is_zero()) continue;
      Vector v(n);
      for (const auto& [u, c] : nf.terms()) v[index.at(u)] = c;
      t.products[{i, j}] = std::move(v);
    }
  t.truncated = true;
  t.truncation_degree = up_to;
  return t;
}

}  // namespace baric
