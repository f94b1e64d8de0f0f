#include "emkv/edk.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace emkv {

namespace {

void check_shape(const EdkElement& a, const EdkElement& b, const char* op) {
  if (a.poles != b.poles || a.strands != b.strands)
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

}  // namespace

void EdkElement::add_lie(int slot, const LiePoly& u) {
  if (slot < 1 || slot > strands) throw std::invalid_argument("EdkElement: slot out of range");
  if (u.alphabet != poles) throw std::invalid_argument("EdkElement: lie part alphabet mismatch");
  if (u.is_zero()) return;
  auto it = lie_parts.find(slot);
  if (it == lie_parts.end()) {
    lie_parts.emplace(slot, u);
  } else {
    it->second += u;
    if (it->second.is_zero()) lie_parts.erase(it);
  }
}

void EdkElement::add_ass(int i, int j, const NCPoly& w) {
  if (!(1 <= i && i < j && j <= strands))
    throw std::invalid_argument("EdkElement: ass slot out of range");
  if (w.alphabet != poles) throw std::invalid_argument("EdkElement: ass part alphabet mismatch");
  if (w.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = ass_parts.find(key);
  if (it == ass_parts.end()) {
    ass_parts.emplace(key, w);
  } else {
    it->second += w;
    if (it->second.is_zero()) ass_parts.erase(it);
  }
}

const LiePoly* EdkElement::lie_part(int slot) const {
  auto it = lie_parts.find(slot);
  return it == lie_parts.end() ? nullptr : &it->second;
}

const NCPoly* EdkElement::ass_part(int i, int j) const {
  auto it = ass_parts.find(std::make_pair(i, j));
  return it == ass_parts.end() ? nullptr : &it->second;
}

bool EdkElement::is_homogeneous() const {
  int d = -1;
  for (const auto& [slot, u] : lie_parts) {
    if (!u.is_homogeneous()) return false;
    int ud = u.homogeneous_degree();
    if (d >= 0 && ud != d) return false;
    d = ud;
  }
  for (const auto& [ij, w] : ass_parts) {
    if (!w.is_homogeneous()) return false;
    int wd = w.homogeneous_degree() + 1;
    if (d >= 0 && wd != d) return false;
    d = wd;
  }
  return true;
}

int EdkElement::homogeneous_degree() const {
  if (!is_homogeneous()) throw std::logic_error("EdkElement: not homogeneous");
  if (!lie_parts.empty()) return lie_parts.begin()->second.homogeneous_degree();
  if (!ass_parts.empty()) return ass_parts.begin()->second.homogeneous_degree() + 1;
  return -1;
}

EdkElement& EdkElement::operator+=(const EdkElement& o) {
  check_shape(*this, o, "EdkElement+");
  for (const auto& [slot, u] : o.lie_parts) add_lie(slot, u);
  for (const auto& [ij, w] : o.ass_parts) add_ass(ij.first, ij.second, w);
  return *this;
}

EdkElement& EdkElement::operator-=(const EdkElement& o) {
  check_shape(*this, o, "EdkElement-");
  for (const auto& [slot, u] : o.lie_parts) add_lie(slot, -u);
  for (const auto& [ij, w] : o.ass_parts) add_ass(ij.first, ij.second, -w);
  return *this;
}

EdkElement operator-(const EdkElement& a) {
  EdkElement r(a.poles, a.strands);
  for (const auto& [slot, u] : a.lie_parts) r.lie_parts.emplace(slot, -u);
  for (const auto& [ij, w] : a.ass_parts) r.ass_parts.emplace(ij, -w);
  return r;
}

EdkElement operator*(const Rational& c, const EdkElement& a) {
  EdkElement r(a.poles, a.strands);
  if (c.is_zero()) return r;
  for (const auto& [slot, u] : a.lie_parts) r.lie_parts.emplace(slot, c * u);
  for (const auto& [ij, w] : a.ass_parts) r.ass_parts.emplace(ij, c * w);
  return r;
}

std::string EdkElement::str() const {
  std::string s;
  for (const auto& [slot, u] : lie_parts) {
    if (!s.empty()) s += "  ";
    s += "(" + u.str() + ")_" + std::to_string(slot);
  }
  for (const auto& [ij, w] : ass_parts) {
    if (!s.empty()) s += "  ";
    s += "(" + w.str() + ")_{" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "}";
  }
  return s.empty() ? "0" : s;
}

std::string EdkElement::to_json() const {
  nlohmann::json j;
  j["m"] = poles;
  j["n"] = strands;
  j["lie"] = nlohmann::json::object();
  for (const auto& [slot, u] : lie_parts) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [w, c] : u.coords) terms[render_word(w, poles)] = c.str();
    j["lie"][std::to_string(slot)] = terms;
  }
  j["ass"] = nlohmann::json::object();
  for (const auto& [ij, poly] : ass_parts) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [w, c] : poly.terms) terms[render_word(w, poles)] = c.str();
    j["ass"][std::to_string(ij.first) + "," + std::to_string(ij.second)] = terms;
  }
  return j.dump();
}

EdkElement edk_lie(int m, int n, int slot, const LiePoly& u) {
  EdkElement e(m, n);
  e.add_lie(slot, u);
  return e;
}

EdkElement edk_ass(int m, int n, int i, int j, const NCPoly& w) {
  EdkElement e(m, n);
  e.add_ass(i, j, w);
  return e;
}

namespace {

// sum_i (d_i v) x_i iota(d_i u), the word part of [u_j, v_k] for j < k.
NCPoly cross_slot_word(const LiePoly& u, const LiePoly& v) {
  int m = u.alphabet;
  NCPoly eu = expand(u), ev = expand(v);
  NCPoly out(m);
  for (int i = 0; i < m; ++i) {
    out += fox_left(ev, i) * NCPoly::gen(m, i) * antipode(fox_left(eu, i));
  }
  return out;
}

}  // namespace

EdkElement bracket(const EdkElement& a, const EdkElement& b) {
  check_shape(a, b, "edk bracket");
  int m = a.poles;
  EdkElement r(m, a.strands);

  for (const auto& [j, u] : a.lie_parts) {
    for (const auto& [k, v] : b.lie_parts) {
      if (j == k) {
        r.add_lie(j, bracket(u, v));
      } else if (j < k) {
        r.add_ass(j, k, cross_slot_word(u, v));
      } else {
        r.add_ass(k, j, -cross_slot_word(v, u));
      }
    }
  }

  auto lie_on_ass = [&](const std::map<int, LiePoly>& lies,
                        const std::map<std::pair<int, int>, NCPoly>& asses, int sign) {
    for (const auto& [i, u] : lies) {
      NCPoly eu = expand(u);
      for (const auto& [jk, w] : asses) {
        if (i == jk.second) {
          r.add_ass(jk.first, jk.second, sign > 0 ? eu * w : -(eu * w));
        } else if (i == jk.first) {
          r.add_ass(jk.first, jk.second, sign > 0 ? -(w * eu) : w * eu);
        }
      }
    }
  };
  lie_on_ass(a.lie_parts, b.ass_parts, +1);
  lie_on_ass(b.lie_parts, a.ass_parts, -1);
  // ass-ass brackets vanish.
  return r;
}

EdkElement delta_pole(int k, const EdkElement& a) {
  int m = a.poles;
  if (k < 0 || k > m) throw std::invalid_argument("delta_pole: k out of range");
  // Generator substitution into m+1 letters: left shift for k = 0, otherwise
  // x_k -> x_k + x_{k+1}.
  std::vector<LiePoly> lie_images;
  std::vector<NCPoly> nc_images;
  for (int i = 1; i <= m; ++i) {
    int shifted = (k == 0 || i > k) ? i + 1 : i;
    LiePoly li = LiePoly::gen(m + 1, shifted - 1);
    NCPoly ni = NCPoly::gen(m + 1, shifted - 1);
    if (i == k) {
      li += LiePoly::gen(m + 1, k);  // x_k + x_{k+1}
      ni += NCPoly::gen(m + 1, k);
    }
    lie_images.push_back(li);
    nc_images.push_back(ni);
  }

  EdkElement r(m + 1, a.strands);
  for (const auto& [slot, u] : a.lie_parts) r.add_lie(slot, substitute(u, lie_images));
  for (const auto& [ij, w] : a.ass_parts)
    r.add_ass(ij.first, ij.second, nc_substitute(w, nc_images));
  return r;
}

EdkElement delta_strand(int k, const EdkElement& a) {
  int n = a.strands;
  if (k < 1 || k > n) throw std::invalid_argument("delta_strand: k out of range");
  EdkElement r(a.poles, n + 1);
  for (const auto& [i, u] : a.lie_parts) {
    if (i < k) {
      r.add_lie(i, u);
    } else if (i == k) {
      r.add_lie(k, u);
      r.add_lie(k + 1, u);
      r.add_ass(k, k + 1, r_map(u));
    } else {
      r.add_lie(i + 1, u);
    }
  }
  for (const auto& [ij, w] : a.ass_parts) {
    auto [i, j] = ij;
    if (j < k) {
      r.add_ass(i, j, w);
    } else if (j == k) {
      r.add_ass(i, k, w);
      r.add_ass(i, k + 1, w);
    } else if (i < k && k < j) {
      r.add_ass(i, j + 1, w);
    } else if (i == k) {
      r.add_ass(k, j + 1, w);
      r.add_ass(k + 1, j + 1, w);
    } else {
      r.add_ass(i + 1, j + 1, w);
    }
  }
  return r;
}

EdkElement extend_strand(const EdkElement& a) {
  EdkElement r(a.poles, a.strands + 1);
  for (const auto& [slot, u] : a.lie_parts) r.add_lie(slot, u);
  for (const auto& [ij, w] : a.ass_parts) r.add_ass(ij.first, ij.second, w);
  return r;
}

EdkElement theta_last(const EdkElement& a) {
  int m = a.poles;
  if (m < 1) throw std::invalid_argument("theta_last: no pole to convert");
  // Substitution (x_1, ..., x_{m-1}, 0) into m-1 letters.
  std::vector<LiePoly> lie_images;
  std::vector<NCPoly> nc_images;
  for (int i = 1; i < m; ++i) {
    lie_images.push_back(LiePoly::gen(m - 1, i - 1));
    nc_images.push_back(NCPoly::gen(m - 1, i - 1));
  }
  lie_images.push_back(LiePoly(m - 1));
  nc_images.push_back(NCPoly(m - 1));

  EdkElement r(m - 1, a.strands + 1);
  for (const auto& [i, u] : a.lie_parts) {
    if (m > 1) r.add_lie(i + 1, substitute(u, lie_images));
    r.add_ass(1, i + 1, nc_substitute(fox_left(u, m - 1), nc_images));
  }
  for (const auto& [ij, w] : a.ass_parts) {
    r.add_ass(ij.first + 1, ij.second + 1, nc_substitute(w, nc_images));
  }
  return r;
}

EdkElement coface(int k, const EdkElement& a) {
  int m = a.poles, n = a.strands;
  if (k < 0 || k > m + n + 1) throw std::invalid_argument("coface: k out of range");
  if (k <= m) return theta_last(delta_pole(k, a));
  if (k <= m + n) return delta_strand(k - m, a);
  return extend_strand(a);
}

EdkElement differential(const EdkElement& a) {
  EdkElement r(a.poles, a.strands + 1);
  for (int k = 0; k <= a.poles + a.strands + 1; ++k) {
    EdkElement term = coface(k, a);
    if (k % 2 == 0) r += term; else r -= term;
  }
  return r;
}

GrtEmResidues emergent_defects(const LiePoly& phi) {
  if (phi.alphabet != 2)
    throw std::invalid_argument("emergent_defects: need a two-letter input");
  LiePoly x = LiePoly::gen(2, 0), y = LiePoly::gen(2, 1);
  LiePoly zero_lie(2);
  NCPoly nx = NCPoly::gen(2, 0), ny = NCPoly::gen(2, 1);
  NCPoly nzero(2);

  GrtEmResidues res;
  res.pentagon_lie = substitute(phi, std::vector<LiePoly>{y, zero_lie}) -
                     substitute(phi, std::vector<LiePoly>{x + y, zero_lie});

  NCPoly dyphi = fox_left(phi, 1);
  res.pentagon_word = dyphi + nc_substitute(dyphi, {ny, nzero}) -
                      nc_substitute(dyphi, {nx + ny, nzero}) - r_map(phi);

  res.symmetry = bracket(x, substitute(phi, std::vector<LiePoly>{y, x})) +
                 bracket(y, phi);
  return res;
}

}  // namespace emkv
