#include "emkv/spaces.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "emkv/dk.hpp"
#include "emkv/edk.hpp"
#include "json.hpp"

namespace emkv {

namespace {

// Sparse residue row bundle: canonical string key -> coordinate value.
using RowMap = std::map<std::string, Rational>;

void row_add(RowMap& rows, const std::string& prefix, const Word& w, int alphabet,
             const Rational& c) {
  if (c.is_zero()) return;
  std::string key = prefix + render_word(w, alphabet);
  auto it = rows.find(key);
  if (it == rows.end()) {
    rows.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) rows.erase(it);
  }
}

void add_lie_rows(RowMap& rows, const std::string& prefix, const LiePoly& p) {
  for (const auto& [w, c] : p.coords) row_add(rows, prefix, w, p.alphabet, c);
}

void add_nc_rows(RowMap& rows, const std::string& prefix, const NCPoly& p) {
  for (const auto& [w, c] : p.terms) row_add(rows, prefix, w, p.alphabet, c);
}

void add_trace_rows(RowMap& rows, const std::string& prefix, const TracePoly& p) {
  for (const auto& [w, c] : p.terms) row_add(rows, prefix, w, p.alphabet, c);
}

void add_dk_rows(RowMap& rows, const std::string& prefix, const DkElement& e) {
  for (size_t k = 0; k < e.factors.size(); ++k) {
    const LiePoly& f = e.factors[k];
    add_lie_rows(rows, prefix + std::to_string(k + 1) + ":", f);
  }
}

// Residues of one ambient slot. Lie tags: slot s is the s-th Lyndon word of
// lie_2(d). Krv tags: slots 0..L-1 are the u components, L..2L-1 the v
// components, and slot 2L (present for the span tags at degree >= 2) is the
// coefficient of the divergence span vector.
RowMap slot_residues(SpaceTag tag, int degree, int slot, const std::vector<Word>& lyndon) {
  RowMap rows;
  int L = static_cast<int>(lyndon.size());
  if (is_lie_tag(tag)) {
    LiePoly e = LiePoly::monomial(2, lyndon[slot]);
    if (tag == SpaceTag::Grt1) {
      auto [hex1, hex2] = hexagon_defects(e);
      add_lie_rows(rows, "H1:", hex1);
      add_lie_rows(rows, "H2:", hex2);
      add_dk_rows(rows, "P:", detail::pentagon_defect_unchecked(e));
    } else {
      GrtEmResidues res = emergent_defects(e);
      add_nc_rows(rows, "P5:", res.pentagon_word);
      if (tag == SpaceTag::Grt1Em) {
        add_lie_rows(rows, "P1:", res.pentagon_lie);
        add_lie_rows(rows, "VS:", res.symmetry);
      }
    }
    return rows;
  }

  // krv-type tags
  bool has_span_col = (tag == SpaceTag::Krv2 || tag == SpaceTag::Krv2Sym) && degree >= 2;
  if (has_span_col && slot == 2 * L) {
    TracePoly span = krv_span_vector(degree);
    add_trace_rows(rows, "DV:", -span);
    return rows;
  }
  TangentialDerivation td(2);
  if (slot < L) td.components[0] = LiePoly::monomial(2, lyndon[slot]);
  else td.components[1] = LiePoly::monomial(2, lyndon[slot - L]);

  // Special-derivation rows: sum_i [x_i, u_i] = 0.
  LiePoly sder(2);
  for (int i = 0; i < 2; ++i) sder += bracket(LiePoly::gen(2, i), td.components[i]);
  add_lie_rows(rows, "SD:", sder);

  // Divergence rows. At degree 1 the span condition is vacuous (the whole
  // degree-1 trace space is spanned by |x|, |y|), so no rows are emitted.
  if (degree >= 2) add_trace_rows(rows, "DV:", div(td));

  // Symmetry rows: v - u(y,x) = 0.
  if (tag == SpaceTag::Krv2Sym) {
    std::vector<LiePoly> swap{LiePoly::gen(2, 1), LiePoly::gen(2, 0)};
    LiePoly sym = td.components[1] - substitute(td.components[0], swap);
    add_lie_rows(rows, "SY:", sym);
  }
  return rows;
}

int ambient_size(SpaceTag tag, int degree, int lyndon_count) {
  if (is_lie_tag(tag)) return lyndon_count;
  bool has_span_col = (tag == SpaceTag::Krv2 || tag == SpaceTag::Krv2Sym) && degree >= 2;
  return 2 * lyndon_count + (has_span_col ? 1 : 0);
}

// Stack vectors as rows and bring to reduced echelon form.
std::vector<std::vector<Rational>> canonical_rows(const std::vector<std::vector<Rational>>& vecs,
                                                  int cols) {
  if (vecs.empty()) return {};
  QMatrix m(static_cast<int>(vecs.size()), cols);
  for (size_t r = 0; r < vecs.size(); ++r)
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = vecs[r][c];
  RrefResult rr = rref(m);
  std::vector<std::vector<Rational>> out;
  for (size_t r = 0; r < rr.pivots.size(); ++r) {
    std::vector<Rational> row(cols);
    for (int c = 0; c < cols; ++c) row[c] = rr.matrix.at(static_cast<int>(r), c);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::string tag_name(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::Grt1: return "grt1";
    case SpaceTag::Grt1Em: return "grt1em";
    case SpaceTag::PpssOnly: return "ppss-only";
    case SpaceTag::Krv2: return "krv2";
    case SpaceTag::Krv2Sym: return "krv2sym";
    case SpaceTag::Krv2Zero: return "krv2zero";
  }
  return "?";
}

std::optional<SpaceTag> tag_from_name(const std::string& name) {
  for (SpaceTag t : {SpaceTag::Grt1, SpaceTag::Grt1Em, SpaceTag::PpssOnly, SpaceTag::Krv2,
                     SpaceTag::Krv2Sym, SpaceTag::Krv2Zero}) {
    if (tag_name(t) == name) return t;
  }
  return std::nullopt;
}

bool is_lie_tag(SpaceTag tag) {
  return tag == SpaceTag::Grt1 || tag == SpaceTag::Grt1Em || tag == SpaceTag::PpssOnly;
}

std::vector<LiePoly> GradedSubspace::lie_basis() const {
  if (!is_lie_tag(tag)) throw std::logic_error("lie_basis: not a lie-ambient tag");
  std::vector<Word> lyndon = lyndon_words(2, degree);
  std::vector<LiePoly> out;
  for (const auto& vec : basis) {
    LiePoly p(2);
    for (size_t i = 0; i < lyndon.size(); ++i) p.add_coord(lyndon[i], vec[i]);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<TangentialDerivation> GradedSubspace::tder_basis() const {
  if (is_lie_tag(tag)) throw std::logic_error("tder_basis: not a tder-ambient tag");
  std::vector<Word> lyndon = lyndon_words(2, degree);
  size_t L = lyndon.size();
  std::vector<TangentialDerivation> out;
  for (const auto& vec : basis) {
    TangentialDerivation td(2);
    for (size_t i = 0; i < L; ++i) {
      td.components[0].add_coord(lyndon[i], vec[i]);
      td.components[1].add_coord(lyndon[i], vec[L + i]);
    }
    out.push_back(std::move(td));
  }
  return out;
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

Solver::Solver(std::string cache_dir) : cache_dir_(std::move(cache_dir)) {
  // Self-test vector: the residues of every tag on the full degree-3 ambient
  // basis. Any change in a residue implementation changes the hash and
  // invalidates cached bases.
  std::string probe = "v1;";
  std::vector<Word> lyndon = lyndon_words(2, 3);
  for (SpaceTag t : {SpaceTag::Grt1, SpaceTag::Grt1Em, SpaceTag::PpssOnly, SpaceTag::Krv2,
                     SpaceTag::Krv2Sym, SpaceTag::Krv2Zero}) {
    probe += tag_name(t) + "{";
    int n = ambient_size(t, 3, static_cast<int>(lyndon.size()));
    for (int s = 0; s < n; ++s) {
      for (const auto& [key, value] : slot_residues(t, 3, s, lyndon)) {
        probe += key + "=" + value.str() + ";";
      }
    }
    probe += "}";
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(probe)));
  residue_hash_ = buf;
}

GradedSubspace Solver::compute(SpaceTag tag, int degree) const {
  std::vector<Word> lyndon = lyndon_words(2, degree);
  int L = static_cast<int>(lyndon.size());
  int n = ambient_size(tag, degree, L);
  bool has_span_col = !is_lie_tag(tag) &&
                      (tag == SpaceTag::Krv2 || tag == SpaceTag::Krv2Sym) && degree >= 2;

  // Assemble the stacked residue matrix column by column.
  std::vector<RowMap> cols;
  cols.reserve(n);
  std::map<std::string, int> row_index;
  for (int s = 0; s < n; ++s) {
    cols.push_back(slot_residues(tag, degree, s, lyndon));
    for (const auto& [key, value] : cols.back()) {
      row_index.emplace(key, 0);
    }
  }
  int r = 0;
  for (auto& [key, idx] : row_index) idx = r++;

  QMatrix m(r, n);
  for (int s = 0; s < n; ++s) {
    for (const auto& [key, value] : cols[s]) m.at(row_index[key], s) = value;
  }

  std::vector<std::vector<Rational>> kernel = kernel_basis(m);
  if (has_span_col) {
    // Drop the auxiliary span coefficient; the projection is injective since
    // the span vector is nonzero at degree >= 2.
    for (auto& v : kernel) v.pop_back();
    n -= 1;
  }

  GradedSubspace out;
  out.tag = tag;
  out.degree = degree;
  out.ambient_dim = n;
  out.basis = canonical_rows(kernel, n);
  out.below_theorem_range = degree < 2 && (tag == SpaceTag::Grt1Em || !is_lie_tag(tag));
  return out;
}

std::string Solver::cache_path(SpaceTag tag, int degree) const {
  return cache_dir_ + "/" + tag_name(tag) + "-d" + std::to_string(degree) + ".json";
}

std::optional<GradedSubspace> Solver::load_cached(SpaceTag tag, int degree) const {
  std::ifstream in(cache_path(tag, degree));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("tag") != tag_name(tag) || j.at("degree") != degree ||
        j.at("residue_hash") != residue_hash_)
      return std::nullopt;
    GradedSubspace s;
    s.tag = tag;
    s.degree = degree;
    s.ambient_dim = j.at("ambient_dim").get<int>();
    for (const auto& el : j.at("basis")) {
      std::vector<Rational> v;
      for (const auto& c : el.at("coords")) v.emplace_back(c.get<std::string>());
      if (static_cast<int>(v.size()) != s.ambient_dim) return std::nullopt;
      s.basis.push_back(std::move(v));
    }
    s.below_theorem_range = degree < 2 && (tag == SpaceTag::Grt1Em || !is_lie_tag(tag));
    return s;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Solver::store_cached(const GradedSubspace& s) const {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir_, ec);
  nlohmann::json j;
  j["tag"] = tag_name(s.tag);
  j["degree"] = s.degree;
  j["ambient_dim"] = s.ambient_dim;
  j["basis"] = nlohmann::json::array();
  for (const auto& vec : s.basis) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : vec) coords.push_back(c.str());
    j["basis"].push_back(nlohmann::json{{"coords", coords}});
  }
  j["residue_hash"] = residue_hash_;

  std::string path = cache_path(s.tag, s.degree);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump(1);
  }
  std::filesystem::rename(tmp, path, ec);
}

GradedSubspace Solver::solve(SpaceTag tag, int degree) {
  if (degree < 1) throw std::invalid_argument("solve: degree >= 1 required");
  auto key = std::make_pair(static_cast<int>(tag), degree);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (!cache_dir_.empty()) {
    if (auto cached = load_cached(tag, degree)) {
      memo_.emplace(key, *cached);
      return *cached;
    }
  }
  GradedSubspace s = compute(tag, degree);
  if (!cache_dir_.empty()) store_cached(s);
  memo_.emplace(key, s);
  return s;
}

LiePoly emergent_bracket(const LiePoly& phi1, const LiePoly& phi2) {
  if (phi1.alphabet != 2 || phi2.alphabet != 2)
    throw std::invalid_argument("emergent_bracket: two-letter inputs required");
  return bracket(phi1, phi2) + apply(nu_em(phi1), phi2) - apply(nu_em(phi2), phi1);
}

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
  if (basis.empty()) {
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  }
  int cols = static_cast<int>(v.size());
  QMatrix a(static_cast<int>(basis.size()), cols);
  for (size_t r = 0; r < basis.size(); ++r)
    for (int c = 0; c < cols; ++c) a.at(static_cast<int>(r), c) = basis[r][c];
  QMatrix b(static_cast<int>(basis.size()) + 1, cols);
  b.entries = a.entries;
  b.entries.insert(b.entries.end(), v.begin(), v.end());
  return rank(a) == rank(b);
}

namespace {

std::vector<Rational> tder_coords(const TangentialDerivation& td, const std::vector<Word>& lyndon) {
  size_t L = lyndon.size();
  std::vector<Rational> v(2 * L);
  for (size_t i = 0; i < L; ++i) {
    auto it = td.components[0].coords.find(lyndon[i]);
    if (it != td.components[0].coords.end()) v[i] = it->second;
    it = td.components[1].coords.find(lyndon[i]);
    if (it != td.components[1].coords.end()) v[L + i] = it->second;
  }
  return v;
}

std::vector<Rational> lie_coords(const LiePoly& p, const std::vector<Word>& lyndon) {
  std::vector<Rational> v(lyndon.size());
  for (size_t i = 0; i < lyndon.size(); ++i) {
    auto it = p.coords.find(lyndon[i]);
    if (it != p.coords.end()) v[i] = it->second;
  }
  return v;
}

}  // namespace

TheoremReport verify_main_theorem(int d_max, Solver& solver) {
  if (d_max < 2) throw std::invalid_argument("verify_main_theorem: d_max >= 2 required");
  TheoremReport report;
  report.max_degree = d_max;
  for (int d = 2; d <= d_max; ++d) {
    DegreeReport dr;
    dr.degree = d;
    std::vector<Word> lyndon = lyndon_words(2, d);

    GradedSubspace grt1em = solver.solve(SpaceTag::Grt1Em, d);
    GradedSubspace krv2sym = solver.solve(SpaceTag::Krv2Sym, d);
    dr.dim_grt1em = grt1em.dim();
    dr.dim_krv2sym = krv2sym.dim();
    dr.dims_equal = dr.dim_grt1em == dr.dim_krv2sym;

    dr.images_sym_fixed = true;
    dr.images_krv_member = true;
    std::vector<std::vector<Rational>> image_coords;
    for (const LiePoly& phi : grt1em.lie_basis()) {
      TangentialDerivation im = nu_em(phi);
      if (!(sym_involution(im) == im)) dr.images_sym_fixed = false;
      KvWitness w = krv_class(im);
      if (w.cls != KvClass::Krv && w.cls != KvClass::Krv0) dr.images_krv_member = false;
      image_coords.push_back(tder_coords(im, lyndon));
    }

    // The images must be independent and must span krv2sym(d).
    bool form_basis = static_cast<int>(image_coords.size()) == dr.dim_krv2sym;
    if (form_basis && !image_coords.empty()) {
      form_basis = static_cast<int>(canonical_rows(image_coords, 2 * static_cast<int>(lyndon.size()))
                                        .size()) == dr.dim_krv2sym;
      for (const auto& v : image_coords) {
        if (!in_span(krv2sym.basis, v)) form_basis = false;
      }
    }
    dr.images_form_basis = form_basis;

    // Containment grt1 -> grt1em via psi(x,y) -> psi(-x-y, y).
    GradedSubspace grt1 = solver.solve(SpaceTag::Grt1, d);
    dr.dim_grt1 = grt1.dim();
    dr.grt1_injects = true;
    LiePoly x = LiePoly::gen(2, 0), y = LiePoly::gen(2, 1);
    for (const LiePoly& psi : grt1.lie_basis()) {
      LiePoly phi = substitute(psi, std::vector<LiePoly>{Rational(-1) * (x + y), y});
      if (!in_span(grt1em.basis, lie_coords(phi, lyndon))) dr.grt1_injects = false;
    }

    report.degrees.push_back(dr);
  }
  return report;
}

}  // namespace emkv
