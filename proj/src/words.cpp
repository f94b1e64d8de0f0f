#include "emkv/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace emkv {

namespace {

const char kLetters[] = "xyz";

void check_same_alphabet(int a, int b, const char* op) {
  if (a != b) throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}

template <typename MapT>
void map_add(MapT& into, const MapT& from, bool negate = false) {
  for (const auto& [k, c] : from) {
    auto it = into.find(k);
    if (it == into.end()) {
      into.emplace(k, negate ? -c : c);
    } else {
      if (negate) it->second -= c; else it->second += c;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

}  // namespace

std::string render_word(const Word& w, int alphabet) {
  if (w.empty()) return "1";
  std::string s;
  for (uint8_t l : w) {
    if (alphabet <= 3) {
      s += kLetters[l];
    } else {
      s += 'x';
      s += std::to_string(static_cast<int>(l) + 1);
    }
  }
  return s;
}

Word parse_word(const std::string& s, int alphabet) {
  Word w;
  if (s == "1") return w;
  for (size_t i = 0; i < s.size();) {
    char ch = s[i];
    if (alphabet <= 3) {
      const char* p = std::find(kLetters, kLetters + 3, ch);
      if (p == kLetters + 3 || p - kLetters >= alphabet)
        throw std::invalid_argument("parse_word: bad letter in \"" + s + "\"");
      w.push_back(static_cast<uint8_t>(p - kLetters));
      ++i;
    } else {
      if (ch != 'x') throw std::invalid_argument("parse_word: bad letter");
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      int idx = std::stoi(s.substr(i + 1, j - i - 1));
      if (idx < 1 || idx > alphabet) throw std::invalid_argument("parse_word: index out of range");
      w.push_back(static_cast<uint8_t>(idx - 1));
      i = j;
    }
  }
  return w;
}

Word canonical_rotation(const Word& w) {
  if (w.size() <= 1) return w;
  Word best = w;
  Word rot = w;
  for (size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

NCPoly NCPoly::unit(int n) {
  NCPoly p(n);
  p.terms.emplace(Word{}, Rational(1));
  return p;
}

NCPoly NCPoly::gen(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("NCPoly::gen: index out of range");
  NCPoly p(n);
  p.terms.emplace(Word{static_cast<uint8_t>(i)}, Rational(1));
  return p;
}

NCPoly NCPoly::monomial(int n, Word w, Rational c) {
  NCPoly p(n);
  for (uint8_t l : w)
    if (l >= n) throw std::invalid_argument("NCPoly::monomial: letter out of range");
  if (!c.is_zero()) p.terms.emplace(std::move(w), std::move(c));
  return p;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

int NCPoly::homogeneous_degree() const {
  if (terms.empty()) return -1;
  size_t d = terms.begin()->first.size();
  for (const auto& [w, c] : terms)
    if (w.size() != d) throw std::logic_error("NCPoly: not homogeneous");
  return static_cast<int>(d);
}

bool NCPoly::is_homogeneous() const {
  if (terms.empty()) return true;
  size_t d = terms.begin()->first.size();
  for (const auto& [w, c] : terms)
    if (w.size() != d) return false;
  return true;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check_same_alphabet(alphabet, o.alphabet, "NCPoly+");
  map_add(terms, o.terms);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check_same_alphabet(alphabet, o.alphabet, "NCPoly-");
  map_add(terms, o.terms, true);
  return *this;
}

NCPoly operator-(const NCPoly& a) {
  NCPoly r(a.alphabet);
  for (const auto& [w, c] : a.terms) r.terms.emplace(w, -c);
  return r;
}

NCPoly operator*(const Rational& c, const NCPoly& a) {
  NCPoly r(a.alphabet);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : a.terms) r.terms.emplace(w, c * k);
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  check_same_alphabet(a.alphabet, b.alphabet, "nc_mul");
  NCPoly r(a.alphabet);
  for (const auto& [wa, ca] : a.terms) {
    for (const auto& [wb, cb] : b.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCPoly bracket(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly antipode(const NCPoly& a) {
  NCPoly r(a.alphabet);
  for (const auto& [w, c] : a.terms) {
    Word rw(w.rbegin(), w.rend());
    r.add_term(rw, (w.size() % 2 == 0) ? c : -c);
  }
  return r;
}

Rational counit(const NCPoly& a) {
  auto it = a.terms.find(Word{});
  return it == a.terms.end() ? Rational(0) : it->second;
}

void Tensor2::add_term(const Word& a, const Word& b, const Rational& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  check_same_alphabet(alphabet, o.alphabet, "Tensor2+");
  map_add(terms, o.terms);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  check_same_alphabet(alphabet, o.alphabet, "Tensor2-");
  map_add(terms, o.terms, true);
  return *this;
}

Tensor2 coproduct(const NCPoly& a) {
  Tensor2 t(a.alphabet);
  for (const auto& [w, c] : a.terms) {
    size_t d = w.size();
    // Distribute each letter to the left or right tensor factor.
    for (uint64_t mask = 0; mask < (uint64_t(1) << d); ++mask) {
      Word left, right;
      for (size_t p = 0; p < d; ++p) {
        if (mask & (uint64_t(1) << p)) left.push_back(w[p]);
        else right.push_back(w[p]);
      }
      t.add_term(left, right, c);
    }
  }
  return t;
}

bool is_primitive(const NCPoly& a) {
  Tensor2 t = coproduct(a);
  for (const auto& [w, c] : a.terms) {
    t.add_term(w, Word{}, -c);
    t.add_term(Word{}, w, -c);
  }
  return t.is_zero();
}

NCPoly nc_substitute(const NCPoly& a, const std::vector<NCPoly>& images) {
  if (static_cast<int>(images.size()) != a.alphabet)
    throw std::invalid_argument("nc_substitute: arity mismatch");
  int target = images.empty() ? 0 : images[0].alphabet;
  for (const auto& im : images) check_same_alphabet(im.alphabet, target, "nc_substitute");
  NCPoly r(target);
  for (const auto& [w, c] : a.terms) {
    NCPoly prod = NCPoly::unit(target);
    for (uint8_t l : w) {
      prod = prod * images[l];
      if (prod.is_zero()) break;
    }
    for (const auto& [pw, pc] : prod.terms) r.add_term(pw, c * pc);
  }
  return r;
}

NCPoly fox_left(const NCPoly& a, int i) {
  if (i < 0 || i >= a.alphabet) throw std::invalid_argument("fox_left: index out of range");
  NCPoly r(a.alphabet);
  for (const auto& [w, c] : a.terms) {
    if (!w.empty() && w.back() == i) r.add_term(Word(w.begin(), w.end() - 1), c);
  }
  return r;
}

NCPoly fox_right(const NCPoly& a, int i) { return antipode(fox_left(a, i)); }

void TracePoly::add_word(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  Word cw = canonical_rotation(w);
  auto it = terms.find(cw);
  if (it == terms.end()) {
    terms.emplace(std::move(cw), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TracePoly& TracePoly::operator+=(const TracePoly& o) {
  check_same_alphabet(alphabet, o.alphabet, "TracePoly+");
  map_add(terms, o.terms);
  return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& o) {
  check_same_alphabet(alphabet, o.alphabet, "TracePoly-");
  map_add(terms, o.terms, true);
  return *this;
}

TracePoly operator-(const TracePoly& a) {
  TracePoly r(a.alphabet);
  for (const auto& [w, c] : a.terms) r.terms.emplace(w, -c);
  return r;
}

TracePoly operator*(const Rational& c, const TracePoly& a) {
  TracePoly r(a.alphabet);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : a.terms) r.terms.emplace(w, c * k);
  return r;
}

TracePoly trace_project(const NCPoly& a) {
  TracePoly t(a.alphabet);
  for (const auto& [w, c] : a.terms) t.add_word(w, c);
  return t;
}

void TraceAssTensor::add_term(const Word& cyc, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(canonical_rotation(cyc), w);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TraceAssTensor& TraceAssTensor::operator+=(const TraceAssTensor& o) {
  check_same_alphabet(alphabet, o.alphabet, "TraceAssTensor+");
  map_add(terms, o.terms);
  return *this;
}

TraceAssTensor& TraceAssTensor::operator-=(const TraceAssTensor& o) {
  check_same_alphabet(alphabet, o.alphabet, "TraceAssTensor-");
  map_add(terms, o.terms, true);
  return *this;
}

void TraceTraceTensor::add_term(const Word& a, const Word& b, const Rational& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(canonical_rotation(a), canonical_rotation(b));
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TraceTraceTensor& TraceTraceTensor::operator+=(const TraceTraceTensor& o) {
  check_same_alphabet(alphabet, o.alphabet, "TraceTraceTensor+");
  map_add(terms, o.terms);
  return *this;
}

TraceTraceTensor& TraceTraceTensor::operator-=(const TraceTraceTensor& o) {
  check_same_alphabet(alphabet, o.alphabet, "TraceTraceTensor-");
  map_add(terms, o.terms, true);
  return *this;
}

namespace {

std::string render_terms(const std::map<Word, Rational>& terms, int alphabet, bool trace_bars) {
  if (terms.empty()) return "0";
  // Sort by degree, then lexicographically.
  std::vector<const std::pair<const Word, Rational>*> sorted;
  sorted.reserve(terms.size());
  for (const auto& t : terms) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return a->first < b->first;
  });
  std::string s;
  bool first = true;
  for (auto* t : sorted) {
    const Rational& c = t->second;
    Rational abs = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) s += "-";
      first = false;
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    std::string body = render_word(t->first, alphabet);
    if (trace_bars) body = "|" + body + "|";
    if (abs == Rational(1)) s += body;
    else s += abs.str() + "*" + body;
  }
  return s;
}

}  // namespace

std::string NCPoly::str() const { return render_terms(terms, alphabet, false); }

std::string TracePoly::str() const { return render_terms(terms, alphabet, true); }

}  // namespace emkv
