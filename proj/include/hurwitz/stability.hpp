#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/perm.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Word over free-group generators a_1..a_m; letters carry exponent +1 or -1.
class Word {
 public:
  struct Letter {
    int generator;  // 0-based
    int exponent;   // +1 or -1
  };

  Word() = default;
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int max_generator() const;  // -1 for the empty word

 private:
  std::vector<Letter> letters_;
};

// Grammar: comma-separated words, each a whitespace-separated product of
// letters "a<i>" with an optional integer exponent "a<i>^<e>", 1-based
// generators. Example: "a1^2, a2^2, a1 a2 a3 a4".
Word parse_word(std::string_view text);
std::vector<Word> parse_relators(std::string_view text);
std::string format_word(const Word& w);

// Image of the word under a_i -> tuple[i], multiplied with the fixed
// composition convention (rightmost letter acts first).
Perm eval_word(const Word& w, const std::vector<Perm>& tuple);

// Normalized Hamming distance |{x : p(x) != q(x)}| / n.
Rat hamming(const Perm& p, const Perm& q);

struct DeltaReport {
  bool ok = false;
  std::vector<Rat> defects;  // one per relator, in order
};

// True iff every relator evaluates within normalized Hamming distance
// strictly less than delta from the identity.
DeltaReport is_delta_solution(const std::vector<Word>& relators, const std::vector<Perm>& tuple,
                              const Rat& delta);

// Relators of the Euclidean group with the given orders: a_i^{k_i} for each
// slot plus the product a_1...a_r.
std::vector<Word> triangle_relators(const std::vector<int>& base);

struct RateVerdict {
  Rat max_ratio;
  // Finite-sample proxy: the mean ratio over the later half of the sample is
  // strictly below the mean over the earlier half.
  bool decreasing_tail = false;
};

// Samples are (degree, change count) pairs with strictly increasing degrees.
RateVerdict quasi_local_rate(const std::vector<std::pair<long long, long long>>& samples);

}  // namespace hurwitz
