#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

// Fundamental group of a closed orientable genus-g surface, presented as
// <a_1,b_1,...,a_g,b_g | [a_1,b_1]...[a_g,b_g]>.  The generator order
// a_1,b_1,...,a_g,b_g fixes the Z^{2g} homology basis used everywhere else.
struct SurfaceGroup {
  int genus;

  explicit SurfaceGroup(int g) : genus(g) {
    if (g < 1) {
      throw ConditionNotMet("surface group requires genus >= 1");
    }
  }

  std::size_t h1_rank() const { return 2 * static_cast<std::size_t>(genus); }
};

enum class GenKind { A, B };

struct Letter {
  GenKind kind;
  int index;  // 1..g
  int sign;   // +1 or -1

  friend bool operator==(const Letter& x, const Letter& y) {
    return x.kind == y.kind && x.index == y.index && x.sign == y.sign;
  }
};

inline Letter inverse_of(const Letter& l) { return {l.kind, l.index, -l.sign}; }

inline Letter gen_a(int index, int sign = 1) { return {GenKind::A, index, sign}; }
inline Letter gen_b(int index, int sign = 1) { return {GenKind::B, index, sign}; }

// Position of a generator in the homology basis a_1,b_1,...,a_g,b_g.
inline std::size_t basis_position(const Letter& l) {
  return 2 * static_cast<std::size_t>(l.index - 1) + (l.kind == GenKind::B ? 1 : 0);
}

// Free reduction: cancels adjacent inverse pairs until none remain.
inline std::vector<Letter> reduce_letters(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back() == inverse_of(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// Freely reduced word; construction reduces, so the invariant always holds.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(reduce_letters(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const {
    std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
    for (Letter& l : rev) {
      l.sign = -l.sign;
    }
    Word w;
    w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
    return w;
  }

  friend Word operator*(const Word& u, const Word& v) {
    std::vector<Letter> cat = u.letters_;
    cat.insert(cat.end(), v.letters_.begin(), v.letters_.end());
    return Word(std::move(cat));
  }

  friend bool operator==(const Word& u, const Word& v) { return u.letters_ == v.letters_; }
  friend bool operator!=(const Word& u, const Word& v) { return !(u == v); }

 private:
  std::vector<Letter> letters_;
};

inline Word reduce(const Word& w) { return w; }  // idempotent by construction

inline Word reduce(std::vector<Letter> letters) { return Word(std::move(letters)); }

// [a_1,b_1][a_2,b_2]...[a_g,b_g]
inline Word relator(const SurfaceGroup& group) {
  std::vector<Letter> letters;
  letters.reserve(4 * static_cast<std::size_t>(group.genus));
  for (int i = 1; i <= group.genus; ++i) {
    letters.push_back(gen_a(i));
    letters.push_back(gen_b(i));
    letters.push_back(gen_a(i, -1));
    letters.push_back(gen_b(i, -1));
  }
  return Word(std::move(letters));
}

// Image of a word in Z^{2g}, coordinates ordered a_1,b_1,...,a_g,b_g.
struct HomologyClass {
  std::vector<long long> coordinates;

  friend bool operator==(const HomologyClass& x, const HomologyClass& y) {
    return x.coordinates == y.coordinates;
  }
};

inline HomologyClass abelianize(const Word& w, const SurfaceGroup& group) {
  HomologyClass h{std::vector<long long>(group.h1_rank(), 0)};
  for (const Letter& l : w.letters()) {
    if (l.index < 1 || l.index > group.genus) {
      throw ConditionNotMet("letter index outside 1..genus");
    }
    h.coordinates[basis_position(l)] += l.sign;
  }
  return h;
}

// Evaluates a word on generator images ordered a_1,b_1,...,a_g,b_g.
inline Matrix evaluate_word(const std::vector<Matrix>& images, const Word& w,
                            const SurfaceGroup& group) {
  if (images.size() != group.h1_rank()) {
    throw DimensionMismatch("expected 2*genus generator images");
  }
  const std::size_t n = images.empty() ? 0 : images.front().rows();
  std::vector<Matrix> inverses(images.size());
  Matrix acc = Matrix::identity(n);
  for (const Letter& l : w.letters()) {
    if (l.index < 1 || l.index > group.genus) {
      throw ConditionNotMet("letter index outside 1..genus");
    }
    const std::size_t pos = basis_position(l);
    if (l.sign > 0) {
      acc = acc * images[pos];
    } else {
      if (inverses[pos].rows() == 0) {
        inverses[pos] = inverse(images[pos]);
      }
      acc = acc * inverses[pos];
    }
  }
  return acc;
}

// True iff the generator images kill the surface relator, i.e. define a
// representation of the group.
inline bool check_relation(const std::vector<Matrix>& images, const SurfaceGroup& group) {
  if (images.size() != group.h1_rank()) {
    throw DimensionMismatch("expected 2*genus generator images");
  }
  for (const Matrix& m : images) {
    if (!m.is_square() || m.rows() != images.front().rows()) {
      throw DimensionMismatch("generator images must be square of equal size");
    }
    if (!is_invertible(m)) {
      throw SingularMatrix("generator image is not invertible");
    }
  }
  return evaluate_word(images, relator(group), group).is_identity();
}

// Text form used in configs: `a1 b1 A1 B1`, uppercase meaning inverse.
inline Word parse_word(std::string_view text, int genus) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) {
      break;
    }
    const char c = text[pos];
    GenKind kind;
    int sign;
    switch (c) {
      case 'a': kind = GenKind::A; sign = 1; break;
      case 'b': kind = GenKind::B; sign = 1; break;
      case 'A': kind = GenKind::A; sign = -1; break;
      case 'B': kind = GenKind::B; sign = -1; break;
      default:
        throw ConfigError("/word", std::string("unexpected character '") + c + "'");
    }
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) {
      throw ConfigError("/word", "generator letter without index");
    }
    const int index = std::stoi(std::string(text.substr(start, pos - start)));
    if (index < 1 || index > genus) {
      throw ConfigError("/word", "generator index outside 1..genus");
    }
    letters.push_back({kind, index, sign});
  }
  return Word(std::move(letters));
}

inline std::string format_word(const Word& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    char c = l.kind == GenKind::A ? 'a' : 'b';
    if (l.sign < 0) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    out += c;
    out += std::to_string(l.index);
  }
  return out;
}

}  // namespace hecke
