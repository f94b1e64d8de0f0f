#ifndef EMKV_LIE_HPP
#define EMKV_LIE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "emkv/words.hpp"

namespace emkv {

/// True iff w is strictly smaller than all of its proper rotations.
bool is_lyndon(const Word& w);

/// All Lyndon words of length d over n letters, in lexicographic order
/// (Duval's algorithm).
std::vector<Word> lyndon_words(int n, int d);

/// Right standard factorization w = uv of a Lyndon word of length >= 2:
/// v is the longest proper Lyndon suffix (equivalently the lexicographically
/// least proper suffix), u the complementary prefix. Both parts are Lyndon.
std::pair<Word, Word> std_factorization(const Word& w);

/// Standard bracketing of a Lyndon word with explicit brackets, e.g.
/// "xxy" -> "[x,[x,y]]".
std::string render_bracketing(const Word& w, int alphabet);

struct NotPrimitiveError : std::invalid_argument {
  NotPrimitiveError() : std::invalid_argument("lie_from_primitive: input is not primitive") {}
};

/// Element of lie_n in Lyndon-basis coordinates: each key is a Lyndon word,
/// standing for its standard bracketing.
struct LiePoly {
  int alphabet = 0;
  std::map<Word, Rational> coords;

  LiePoly() = default;
  explicit LiePoly(int n) : alphabet(n) {}

  static LiePoly gen(int n, int i);
  static LiePoly monomial(int n, const Word& lyndon, Rational c = Rational(1));

  bool is_zero() const { return coords.empty(); }
  void add_coord(const Word& w, const Rational& c);

  int homogeneous_degree() const;  // -1 for zero; throws if mixed
  bool is_homogeneous() const;

  LiePoly& operator+=(const LiePoly& o);
  LiePoly& operator-=(const LiePoly& o);
  friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
  friend LiePoly operator-(LiePoly a, const LiePoly& b) { return a -= b; }
  friend LiePoly operator-(const LiePoly& a);
  friend LiePoly operator*(const Rational& c, const LiePoly& a);
  friend bool operator==(const LiePoly& a, const LiePoly& b) {
    return a.alphabet == b.alphabet && a.coords == b.coords;
  }

  std::string str() const;
};

/// Lie bracket in Lyndon coordinates. Products of basis bracketings are
/// rewritten into the basis by the classical triangular algorithm
/// ([[a,b],c] -> [a,[b,c]] + [[a,c],b]), with a global memo table.
LiePoly bracket(const LiePoly& a, const LiePoly& b);

/// Expansion into ass_n (standard bracketings multiplied out). The result is
/// primitive.
NCPoly expand(const LiePoly& u);

/// Inverse of expand on primitive elements, by triangular coefficient
/// extraction in lexicographic order. Throws NotPrimitiveError otherwise.
LiePoly lie_from_primitive(const NCPoly& a);

NCPoly fox_left(const LiePoly& u, int i);
NCPoly fox_right(const LiePoly& u, int i);

/// Unique Lie-homomorphism image of u under x_i -> images[i]. The carrier
/// needs operator+, scalar multiplication by Rational, and a free function
/// bracket(C, C).
template <class C>
C substitute(const LiePoly& u, const std::vector<C>& images) {
  if (static_cast<int>(images.size()) != u.alphabet)
    throw std::invalid_argument("substitute: arity mismatch");
  if (images.empty()) throw std::invalid_argument("substitute: empty image list");
  C result = Rational(0) * images[0];
  std::map<Word, C> memo;
  // Evaluates the standard bracketing of a Lyndon word on the images.
  auto eval = [&](auto&& self, const Word& w) -> const C& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    C val = Rational(0) * images[0];
    if (w.size() == 1) {
      val = images[w[0]];
    } else {
      auto [l, r] = std_factorization(w);
      val = bracket(self(self, l), self(self, r));
    }
    return memo.emplace(w, std::move(val)).first->second;
  };
  for (const auto& [w, c] : u.coords) result = result + c * eval(eval, w);
  return result;
}

/// Applies the derivation D with D(x_i) = gen_images[i] to p (Leibniz over
/// standard bracketings). All values live over p's alphabet.
LiePoly apply_derivation(const std::vector<LiePoly>& gen_images, const LiePoly& p);

}  // namespace emkv

#endif
