#include "emkv/lie.hpp"

#include <algorithm>
#include <mutex>

namespace emkv {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  Word rot = w;
  for (size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("lyndon_words: need n >= 1, d >= 1");
  std::vector<Word> out;
  // Duval's algorithm, restricted to words of length exactly d.
  Word w{0};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == d) out.push_back(w);
    size_t len = w.size();
    while (w.size() < static_cast<size_t>(d)) w.push_back(w[w.size() % len]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::pair<Word, Word> std_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("std_factorization: word too short");
  // The lexicographically least proper suffix.
  size_t best = 1;
  for (size_t k = 2; k < w.size(); ++k) {
    if (std::lexicographical_compare(w.begin() + k, w.end(), w.begin() + best, w.end()))
      best = k;
  }
  return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

std::string render_bracketing(const Word& w, int alphabet) {
  if (!is_lyndon(w)) throw std::invalid_argument("render_bracketing: not a Lyndon word");
  if (w.size() == 1) return render_word(w, alphabet);
  auto [u, v] = std_factorization(w);
  return "[" + render_bracketing(u, alphabet) + "," + render_bracketing(v, alphabet) + "]";
}

LiePoly LiePoly::gen(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("LiePoly::gen: index out of range");
  LiePoly p(n);
  p.coords.emplace(Word{static_cast<uint8_t>(i)}, Rational(1));
  return p;
}

LiePoly LiePoly::monomial(int n, const Word& w, Rational c) {
  if (!is_lyndon(w)) throw std::invalid_argument("LiePoly::monomial: not a Lyndon word");
  for (uint8_t l : w)
    if (l >= n) throw std::invalid_argument("LiePoly::monomial: letter out of range");
  LiePoly p(n);
  if (!c.is_zero()) p.coords.emplace(w, std::move(c));
  return p;
}

void LiePoly::add_coord(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto it = coords.find(w);
  if (it == coords.end()) {
    coords.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
  }
}

int LiePoly::homogeneous_degree() const {
  if (coords.empty()) return -1;
  size_t d = coords.begin()->first.size();
  for (const auto& [w, c] : coords)
    if (w.size() != d) throw std::logic_error("LiePoly: not homogeneous");
  return static_cast<int>(d);
}

bool LiePoly::is_homogeneous() const {
  if (coords.empty()) return true;
  size_t d = coords.begin()->first.size();
  for (const auto& [w, c] : coords)
    if (w.size() != d) return false;
  return true;
}

LiePoly& LiePoly::operator+=(const LiePoly& o) {
  if (alphabet != o.alphabet) throw std::invalid_argument("LiePoly+: alphabet mismatch");
  for (const auto& [w, c] : o.coords) add_coord(w, c);
  return *this;
}

LiePoly& LiePoly::operator-=(const LiePoly& o) {
  if (alphabet != o.alphabet) throw std::invalid_argument("LiePoly-: alphabet mismatch");
  for (const auto& [w, c] : o.coords) add_coord(w, -c);
  return *this;
}

LiePoly operator-(const LiePoly& a) {
  LiePoly r(a.alphabet);
  for (const auto& [w, c] : a.coords) r.coords.emplace(w, -c);
  return r;
}

LiePoly operator*(const Rational& c, const LiePoly& a) {
  LiePoly r(a.alphabet);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : a.coords) r.coords.emplace(w, c * k);
  return r;
}

std::string LiePoly::str() const {
  NCPoly view(alphabet);
  view.terms = coords;
  return view.str();
}

namespace {

// Alphabet-independent coefficient maps, shared across LiePoly alphabets.
using CoordMap = std::map<Word, Rational>;

std::mutex memo_mutex;

void coord_add(CoordMap& into, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto it = into.find(w);
  if (it == into.end()) {
    into.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

// [b(u), b(v)] for Lyndon words u < v expressed in the Lyndon basis.
// (u, v) is the standard pair of uv iff u is a letter or the standard
// factorization u = u1 u2 has u2 >= v; otherwise rewrite by Jacobi.
const CoordMap& bracket_lyndon(const Word& u, const Word& v);

CoordMap bracket_maps(const CoordMap& a, const CoordMap& b) {
  CoordMap out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      if (u == v) continue;
      Rational c = cu * cv;
      if (v < u) {
        for (const auto& [w, k] : bracket_lyndon(v, u)) coord_add(out, w, -(c * k));
      } else {
        for (const auto& [w, k] : bracket_lyndon(u, v)) coord_add(out, w, c * k);
      }
    }
  }
  return out;
}

const CoordMap& bracket_lyndon(const Word& u, const Word& v) {
  static std::map<std::pair<Word, Word>, CoordMap> memo;
  auto key = std::make_pair(u, v);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  CoordMap result;
  bool standard_pair = false;
  Word u1, u2;
  if (u.size() == 1) {
    standard_pair = true;
  } else {
    std::tie(u1, u2) = std_factorization(u);
    standard_pair = !(u2 < v);
  }
  if (standard_pair) {
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    result.emplace(std::move(uv), Rational(1));
  } else {
    // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
    CoordMap m_u1{{u1, Rational(1)}};
    CoordMap m_u2{{u2, Rational(1)}};
    CoordMap inner = bracket_maps(m_u2, {{v, Rational(1)}});
    result = bracket_maps(m_u1, inner);
    CoordMap outer = bracket_maps(bracket_maps(m_u1, {{v, Rational(1)}}), m_u2);
    for (const auto& [w, c] : outer) coord_add(result, w, c);
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

const CoordMap& expand_lyndon(const Word& w) {
  static std::map<Word, CoordMap> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
  }

  CoordMap result;
  if (w.size() == 1) {
    result.emplace(w, Rational(1));
  } else {
    auto [u, v] = std_factorization(w);
    const CoordMap eu = expand_lyndon(u);
    const CoordMap ev = expand_lyndon(v);
    auto mul_into = [&result](const CoordMap& a, const CoordMap& b, int sign) {
      for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
          Word prod = wa;
          prod.insert(prod.end(), wb.begin(), wb.end());
          coord_add(result, prod, sign > 0 ? ca * cb : -(ca * cb));
        }
      }
    };
    mul_into(eu, ev, +1);
    mul_into(ev, eu, -1);
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(w, std::move(result)).first->second;
}

}  // namespace

LiePoly bracket(const LiePoly& a, const LiePoly& b) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("bracket: alphabet mismatch");
  LiePoly r(a.alphabet);
  r.coords = bracket_maps(a.coords, b.coords);
  return r;
}

NCPoly expand(const LiePoly& u) {
  NCPoly r(u.alphabet);
  for (const auto& [w, c] : u.coords) {
    for (const auto& [word, k] : expand_lyndon(w)) r.add_term(word, c * k);
  }
  return r;
}

LiePoly lie_from_primitive(const NCPoly& a) {
  if (!is_primitive(a)) throw NotPrimitiveError();
  LiePoly result(a.alphabet);
  std::map<Word, Rational> rem = a.terms;
  while (!rem.empty()) {
    // Least remaining word; triangularity guarantees it is Lyndon and that
    // subtracting its bracketing only touches lexicographically later words.
    const auto& [w, c] = *rem.begin();
    if (!is_lyndon(w)) throw std::logic_error("lie_from_primitive: triangular extraction failed");
    Rational coeff = c;
    result.add_coord(w, coeff);
    for (const auto& [word, k] : expand_lyndon(w)) {
      auto it = rem.find(word);
      Rational delta = coeff * k;
      if (it == rem.end()) {
        rem.emplace(word, -delta);
      } else {
        it->second -= delta;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
  }
  return result;
}

NCPoly fox_left(const LiePoly& u, int i) { return fox_left(expand(u), i); }

NCPoly fox_right(const LiePoly& u, int i) { return fox_right(expand(u), i); }

LiePoly apply_derivation(const std::vector<LiePoly>& gen_images, const LiePoly& p) {
  if (static_cast<int>(gen_images.size()) != p.alphabet)
    throw std::invalid_argument("apply_derivation: arity mismatch");
  for (const auto& g : gen_images)
    if (g.alphabet != p.alphabet)
      throw std::invalid_argument("apply_derivation: image alphabet mismatch");
  LiePoly result(p.alphabet);
  std::map<Word, LiePoly> memo;
  auto der = [&](auto&& self, const Word& w) -> const LiePoly& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    LiePoly val(p.alphabet);
    if (w.size() == 1) {
      val = gen_images[w[0]];
    } else {
      auto [u, v] = std_factorization(w);
      LiePoly bu = LiePoly::monomial(p.alphabet, u);
      LiePoly bv = LiePoly::monomial(p.alphabet, v);
      val = bracket(self(self, u), bv) + bracket(bu, self(self, v));
    }
    return memo.emplace(w, std::move(val)).first->second;
  };
  for (const auto& [w, c] : p.coords) result += c * der(der, w);
  return result;
}

}  // namespace emkv
