#include "hurwitz/stability.hpp"

#include <cctype>
#include <stdexcept>

namespace hurwitz {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.generator < 0) throw std::invalid_argument("generator index out of range");
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("letter exponents must be +1 or -1");
  }
}

int Word::max_generator() const {
  int m = -1;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

Word parse_word(std::string_view text) {
  std::vector<Word::Letter> letters;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != 'a')
      throw std::invalid_argument("expected a generator like a1 at position " +
                                  std::to_string(pos));
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("generator needs an index");
    int gen = std::stoi(std::string(text.substr(start, pos - start))) - 1;
    if (gen < 0) throw std::invalid_argument("generator indices are 1-based");
    long long exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool neg = pos < text.size() && text[pos] == '-';
      if (neg) ++pos;
      start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("exponent needs digits");
      exp = std::stoll(std::string(text.substr(start, pos - start)));
      if (neg) exp = -exp;
    }
    int sign = exp >= 0 ? 1 : -1;
    for (long long i = 0; i < (exp >= 0 ? exp : -exp); ++i) letters.push_back({gen, sign});
  }
  return Word(std::move(letters));
}

std::vector<Word> parse_relators(std::string_view text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_word(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  const auto& ls = w.letters();
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j].generator == ls[i].generator &&
           ls[j].exponent == ls[i].exponent)
      ++j;
    if (!out.empty()) out += ' ';
    out += "a" + std::to_string(ls[i].generator + 1);
    long long e = static_cast<long long>(j - i) * ls[i].exponent;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Perm eval_word(const Word& w, const std::vector<Perm>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("empty permutation tuple");
  if (w.max_generator() >= static_cast<int>(tuple.size()))
    throw std::invalid_argument("word uses generator a" + std::to_string(w.max_generator() + 1) +
                                " beyond the tuple");
  int n = tuple.front().degree();
  Perm acc = Perm::identity(n);
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const Perm& g = tuple[it->generator];
    acc = it->exponent == 1 ? compose(g, acc) : compose(g.inverse(), acc);
  }
  return acc;
}

Rat hamming(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  long long moved = 0;
  for (int x = 0; x < p.degree(); ++x)
    if (p[x] != q[x]) ++moved;
  return Rat(moved, p.degree());
}

DeltaReport is_delta_solution(const std::vector<Word>& relators, const std::vector<Perm>& tuple,
                              const Rat& delta) {
  DeltaReport rep;
  rep.ok = true;
  Perm id = Perm::identity(tuple.front().degree());
  for (const auto& w : relators) {
    Rat defect = hamming(eval_word(w, tuple), id);
    if (!(defect < delta)) rep.ok = false;
    rep.defects.push_back(defect);
  }
  return rep;
}

std::vector<Word> triangle_relators(const std::vector<int>& base) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::vector<Word::Letter> ls(base[i], {static_cast<int>(i), 1});
    out.emplace_back(std::move(ls));
  }
  std::vector<Word::Letter> prod;
  for (std::size_t i = 0; i < base.size(); ++i) prod.push_back({static_cast<int>(i), 1});
  out.emplace_back(std::move(prod));
  return out;
}

RateVerdict quasi_local_rate(const std::vector<std::pair<long long, long long>>& samples) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].first <= 0) throw std::invalid_argument("degrees must be positive");
    if (i && samples[i].first <= samples[i - 1].first)
      throw std::invalid_argument("degrees must be strictly increasing");
  }
  RateVerdict v;
  v.max_ratio = Rat(samples[0].second, samples[0].first);
  for (const auto& [n, k] : samples) {
    Rat ratio(k, n);
    if (ratio > v.max_ratio) v.max_ratio = ratio;
  }
  if (samples.size() >= 2) {
    // Mean ratio of the later half vs. the earlier half; accumulated in
    // floating point since this is a diagnostic trend, not a certificate.
    std::size_t half = samples.size() / 2;
    long double first_mean = 0, second_mean = 0;
    for (std::size_t i = 0; i < half; ++i)
      first_mean += static_cast<long double>(samples[i].second) / samples[i].first;
    for (std::size_t i = half; i < samples.size(); ++i)
      second_mean += static_cast<long double>(samples[i].second) / samples[i].first;
    first_mean /= half;
    second_mean /= samples.size() - half;
    v.decreasing_tail = second_mean < first_mean;
  }
  return v;
}

}  // namespace hurwitz
