#include "emkv/gtops.hpp"

#include <mutex>

namespace emkv {

NCPoly eta_gr(const NCPoly& a, const NCPoly& b) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("eta_gr: alphabet mismatch");
  NCPoly r(a.alphabet);
  for (const auto& [u, cu] : a.terms) {
    if (u.empty()) continue;
    for (const auto& [v, cv] : b.terms) {
      if (v.empty()) continue;
      if (u.back() != v.front()) continue;
      Word w = u;
      w.insert(w.end(), v.begin() + 1, v.end());
      r.add_term(w, -(cu * cv));
    }
  }
  return r;
}

NCPoly mu_f_gr(const NCPoly& a) {
  NCPoly r(a.alphabet);
  for (const auto& [w, c] : a.terms) {
    for (size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j] != w[j + 1]) continue;
      Word out;
      out.reserve(w.size() - 1);
      out.insert(out.end(), w.begin(), w.begin() + j + 1);
      out.insert(out.end(), w.begin() + j + 2, w.end());
      r.add_term(out, -c);
    }
  }
  return r;
}

namespace {

std::mutex r_mutex;

const NCPoly& r_of_lyndon(int n, const Word& w) {
  static std::map<std::pair<int, Word>, NCPoly> memo;
  auto key = std::make_pair(n, w);
  {
    std::lock_guard<std::mutex> lock(r_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  NCPoly result(n);
  if (w.size() >= 2) {
    auto [uw, vw] = std_factorization(w);
    LiePoly u = LiePoly::monomial(n, uw);
    LiePoly v = LiePoly::monomial(n, vw);
    NCPoly eu = expand(u);
    NCPoly ev = expand(v);
    result = bracket(r_of_lyndon(n, uw), ev) + bracket(eu, r_of_lyndon(n, vw));
    for (int i = 0; i < n; ++i) {
      NCPoly x = NCPoly::gen(n, i);
      NCPoly du = fox_left(eu, i);
      NCPoly dv = fox_left(ev, i);
      result += dv * x * antipode(du) - du * x * antipode(dv);
    }
  }

  std::lock_guard<std::mutex> lock(r_mutex);
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

NCPoly r_map(const LiePoly& u) {
  NCPoly r(u.alphabet);
  for (const auto& [w, c] : u.coords) {
    const NCPoly& rw = r_of_lyndon(u.alphabet, w);
    for (const auto& [word, k] : rw.terms) r.add_term(word, c * k);
  }
  return r;
}

TraceAssTensor mu_fr_gr(const NCPoly& a) {
  TraceAssTensor out(a.alphabet);
  Tensor2 cop = coproduct(a);
  for (const auto& [pq, c] : cop.terms) {
    const Word& p = pq.first;
    NCPoly mu = mu_f_gr(NCPoly::monomial(a.alphabet, pq.second));
    if (mu.is_zero()) continue;
    NCPoly pleft = NCPoly::monomial(a.alphabet, p);
    for (const auto& [q, cq] : mu.terms) {
      Tensor2 cq2 = coproduct(NCPoly::monomial(a.alphabet, q));
      for (const auto& [q12, c12] : cq2.terms) {
        NCPoly first = pleft * antipode(NCPoly::monomial(a.alphabet, q12.first));
        for (const auto& [fw, fc] : first.terms) {
          out.add_term(fw, q12.second, c * cq * c12 * fc);
        }
      }
    }
  }
  return out;
}

TraceTraceTensor delta_f_gr(const TracePoly& t, const NCPoly& lift) {
  if (t.alphabet != lift.alphabet) throw std::invalid_argument("delta_f_gr: alphabet mismatch");
  if (!(trace_project(lift) == t))
    throw std::invalid_argument("delta_f_gr: lift does not project onto the trace");
  TraceTraceTensor out(lift.alphabet);
  TraceAssTensor m = mu_fr_gr(lift);
  for (const auto& [pq, c] : m.terms) {
    out.add_term(pq.first, pq.second, c);
    out.add_term(pq.second, pq.first, -c);
  }
  return out;
}

}  // namespace emkv
