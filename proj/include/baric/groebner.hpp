#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "baric/associative.hpp"
#include "baric/multipoly.hpp"
#include "baric/scalar.hpp"

namespace baric {

// Word in the free monoid; letters are generator indices.
using Word = std::vector<std::uint8_t>;

// Degree-lexicographic order; generator 0 is the largest letter.
bool word_greater(const Word& a, const Word& b);

// Element of the free associative algebra, terms in decreasing order.
class NcPoly {
 public:
  using Term = std::pair<Word, Scalar>;

  NcPoly() = default;
  static NcPoly word(Word w, const Scalar& c = 1);
  static NcPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Word& leading_word() const { return terms_.front().first; }
  const Scalar& leading_coeff() const { return terms_.front().second; }
  std::size_t degree() const;
  bool is_homogeneous() const;
  NcPoly monic() const;

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  std::vector<Term> terms_;
};

NcPoly operator+(const NcPoly& a, const NcPoly& b);
NcPoly operator-(const NcPoly& a, const NcPoly& b);
NcPoly operator*(const Scalar& c, const NcPoly& a);
NcPoly operator*(const NcPoly& a, const NcPoly& b);
// left * p * right for words.
NcPoly sandwich(const Word& left, const NcPoly& p, const Word& right);

std::string word_to_string(const Word& w, const std::vector<std::string>& generators);
std::string to_string(const NcPoly& p, const std::vector<std::string>& generators);
// Inverse of word_to_string; names may be juxtaposed when unambiguous.
Word parse_word(const std::string& s, const std::vector<std::string>& generators);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<NcPoly> relations;
};

// K<x, y | x^3, y^3, x^2y + xyx + yx^2, xy^2 + yxy + y^2x>.
Presentation kurosh_presentation();
// n generators x1..xn (x, y when n = 2) and the relations that make the k-th
// power of every linear combination of generators vanish: for each content
// of k letters, the sum of all words with that content.
Presentation power_nil_presentation(std::size_t n, std::size_t k);

struct GroebnerState {
  std::vector<std::string> generators;
  std::vector<NcPoly> basis;  // monic, tails reduced
  std::size_t max_degree = 0;
  // Every obstruction of degree < complete_below reduces to zero.
  std::size_t complete_below = 0;
  // Elements added while resolving obstructions.
  std::size_t added = 0;
  std::size_t obstructions = 0;
  bool homogeneous = true;
};

// Normal form; reduces the highest reducible word first, at its leftmost
// reducible position, by the first basis element that fits there.
NcPoly reduce(const NcPoly& p, const GroebnerState& g);

// One rewrite: term `word` of p, basis element `element` at offset `position`.
struct Rewrite {
  Word word;
  std::size_t position = 0;
  std::size_t element = 0;
};
std::vector<Rewrite> available_rewrites(const NcPoly& p, const GroebnerState& g);
NcPoly apply_rewrite(const NcPoly& p, const GroebnerState& g, const Rewrite& r);

// Resolves every overlap obstruction of degree <= max_deg.
GroebnerState buchberger_truncated(const Presentation& p, std::size_t max_deg);

// Words of the given degree with no leading word as a factor.
std::vector<Word> normal_words(const GroebnerState& g, std::size_t degree);
// counts[d] = number of normal words of degree d, counts[0] = 1.
std::vector<std::size_t> hilbert_counts(const GroebnerState& g, std::size_t up_to);

struct NilSpanResult {
  bool holds = false;
  std::size_t needed_degree = 0;
  // Words whose coefficient did not vanish, with that coefficient.
  std::vector<std::pair<Word, MultiPoly>> residual;
};

// (sum a_i g_i)^power with symbolic a_i reduces to zero modulo g.
NilSpanResult nil_span_check(const std::vector<NcPoly>& span_gens, std::size_t power, const GroebnerState& g);

// C / C_{> up_to} on the normal words of degree 1..up_to. Products of higher
// degree are zero; the table is flagged as truncated.
AssociativeTable truncated_algebra_table(const GroebnerState& g, std::size_t up_to);

}  // namespace baric
