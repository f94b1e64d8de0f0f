#ifndef EMKV_WORDS_HPP
#define EMKV_WORDS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "emkv/rational.hpp"

namespace emkv {

/// A monomial of the free associative algebra: a sequence of generator
/// indices (0-based internally). The empty word is the unit.
using Word = std::vector<uint8_t>;

std::string render_word(const Word& w, int alphabet);
Word parse_word(const std::string& s, int alphabet);

/// Lexicographically least rotation of w (canonical representative of the
/// cyclic class).
Word canonical_rotation(const Word& w);

/// Element of ass_n: finite map word -> coefficient, no zero coefficients
/// stored.
struct NCPoly {
  int alphabet = 0;
  std::map<Word, Rational> terms;

  NCPoly() = default;
  explicit NCPoly(int n) : alphabet(n) {}

  static NCPoly unit(int n);
  static NCPoly gen(int n, int i);  // 0-based generator index
  static NCPoly monomial(int n, Word w, Rational c = Rational(1));

  bool is_zero() const { return terms.empty(); }
  void add_term(const Word& w, const Rational& c);

  /// Degree of a homogeneous element; -1 for zero; throws if mixed.
  int homogeneous_degree() const;
  bool is_homogeneous() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(const NCPoly& a);
  friend NCPoly operator*(const Rational& c, const NCPoly& a);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);  // concatenation product
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.alphabet == b.alphabet && a.terms == b.terms;
  }

  std::string str() const;
};

/// Commutator ab - ba.
NCPoly bracket(const NCPoly& a, const NCPoly& b);

/// Antipode: anti-automorphism with x_i -> -x_i; on a word of length d,
/// reverse and multiply by (-1)^d.
NCPoly antipode(const NCPoly& a);

/// Counit: coefficient of the empty word.
Rational counit(const NCPoly& a);

/// Formal sum of word (x) word tensors.
struct Tensor2 {
  int alphabet = 0;
  std::map<std::pair<Word, Word>, Rational> terms;

  Tensor2() = default;
  explicit Tensor2(int n) : alphabet(n) {}
  bool is_zero() const { return terms.empty(); }
  void add_term(const Word& a, const Word& b, const Rational& c);
  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  friend bool operator==(const Tensor2& a, const Tensor2& b) {
    return a.alphabet == b.alphabet && a.terms == b.terms;
  }
};

/// Coproduct: algebra homomorphism with Delta(x_i) = x_i (x) 1 + 1 (x) x_i.
Tensor2 coproduct(const NCPoly& a);

/// True iff Delta(a) = a (x) 1 + 1 (x) a.
bool is_primitive(const NCPoly& a);

/// Algebra-homomorphic substitution: x_i -> images[i]. The target alphabet is
/// inferred from the images; pass it explicitly when the image list is empty.
NCPoly nc_substitute(const NCPoly& a, const std::vector<NCPoly>& images,
                     int target_alphabet = -1);

/// Left Fox derivative on all of ass_n: a - counit(a) = sum_i fox_left(a,i) x_i.
NCPoly fox_left(const NCPoly& a, int i);

/// Right Fox derivative, defined as antipode(fox_left(a, i)); for Lie inputs
/// this is the prefix coefficient in a = sum_i x_i (fox_right(a,i)).
NCPoly fox_right(const NCPoly& a, int i);

/// Element of tr_n = |ass_n|: map from canonical cyclic words to rationals.
struct TracePoly {
  int alphabet = 0;
  std::map<Word, Rational> terms;  // keys are canonical rotations

  TracePoly() = default;
  explicit TracePoly(int n) : alphabet(n) {}
  bool is_zero() const { return terms.empty(); }
  void add_word(const Word& w, const Rational& c);  // canonicalizes w

  TracePoly& operator+=(const TracePoly& o);
  TracePoly& operator-=(const TracePoly& o);
  friend TracePoly operator-(const TracePoly& a);
  friend TracePoly operator*(const Rational& c, const TracePoly& a);
  friend bool operator==(const TracePoly& a, const TracePoly& b) {
    return a.alphabet == b.alphabet && a.terms == b.terms;
  }

  std::string str() const;
};

/// Natural projection | | : ass_n -> tr_n.
TracePoly trace_project(const NCPoly& a);

/// Formal sum in tr_n (x) ass_n (first slot cyclic-canonical).
struct TraceAssTensor {
  int alphabet = 0;
  std::map<std::pair<Word, Word>, Rational> terms;

  TraceAssTensor() = default;
  explicit TraceAssTensor(int n) : alphabet(n) {}
  bool is_zero() const { return terms.empty(); }
  void add_term(const Word& cyc, const Word& w, const Rational& c);  // canonicalizes cyc
  TraceAssTensor& operator+=(const TraceAssTensor& o);
  TraceAssTensor& operator-=(const TraceAssTensor& o);
  friend bool operator==(const TraceAssTensor& a, const TraceAssTensor& b) {
    return a.alphabet == b.alphabet && a.terms == b.terms;
  }
};

/// Formal sum in tr_n (x) tr_n (both slots cyclic-canonical).
struct TraceTraceTensor {
  int alphabet = 0;
  std::map<std::pair<Word, Word>, Rational> terms;

  TraceTraceTensor() = default;
  explicit TraceTraceTensor(int n) : alphabet(n) {}
  bool is_zero() const { return terms.empty(); }
  void add_term(const Word& a, const Word& b, const Rational& c);
  TraceTraceTensor& operator+=(const TraceTraceTensor& o);
  TraceTraceTensor& operator-=(const TraceTraceTensor& o);
  friend bool operator==(const TraceTraceTensor& a, const TraceTraceTensor& b) {
    return a.alphabet == b.alphabet && a.terms == b.terms;
  }
};

}  // namespace emkv

#endif
