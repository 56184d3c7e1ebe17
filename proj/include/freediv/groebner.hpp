#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "derivation.hpp"
#include "gcd.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "saito.hpp"
#include "weights.hpp"

namespace freediv {

enum class OrderKind { grevlex, grlex, weighted_grevlex };

struct GroebnerLimits {
  std::size_t max_basis = 5000;
  std::int64_t max_degree = 500;
  std::size_t max_pairs = 500000;
};

namespace gb {

struct MTerm {
  Monomial m;
  std::uint32_t comp = 0;
  Rational c;
};

using MVec = std::vector<MTerm>;

/// Position over term: component 0 is the largest; inside a component the
/// chosen monomial order decides.
struct TermOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t n = 0;
  std::vector<std::int64_t> w;

  std::int64_t wdeg(const Monomial& m) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += std::int64_t(m.e[i]) * w[i];
    return s;
  }

  int mono(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::grlex:
        return cmp_grlex(a, b);
      case OrderKind::grevlex:
        return cmp_grevlex(a, b, n);
      case OrderKind::weighted_grevlex: {
        auto da = wdeg(a), db = wdeg(b);
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = n; i-- > 0;)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
      }
    }
    return 0;
  }

  int operator()(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (ca != cb) return ca < cb ? 1 : -1;
    return mono(a, b);
  }
};

inline void sort_vec(MVec& v, const TermOrder& ord) {
  std::sort(v.begin(), v.end(), [&](const MTerm& x, const MTerm& y) { return ord(x.m, x.comp, y.m, y.comp) > 0; });
  MVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().m == t.m && out.back().comp == t.comp) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  v = std::move(out);
}

// r - c * m * g
inline MVec sub_mul(const MVec& r, const Rational& c, const Monomial& m, const MVec& g, const TermOrder& ord) {
  MVec out;
  out.reserve(r.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < g.size()) {
    int cmp;
    Monomial gm;
    if (j < g.size()) gm = g[j].m * m;
    if (i == r.size()) cmp = -1;
    else if (j == g.size()) cmp = 1;
    else cmp = ord(r[i].m, r[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(r[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[j].comp, -c * g[j].c});
      ++j;
    } else {
      Rational s = r[i].c - c * g[j].c;
      if (s != 0) out.push_back({r[i].m, r[i].comp, s});
      ++i;
      ++j;
    }
  }
  return out;
}

inline void make_monic(MVec& v) {
  if (v.empty()) return;
  Rational inv = 1 / v.front().c;
  for (auto& t : v) t.c *= inv;
}

struct Options {
  // Keep elements whose leading term leaves component 0 (the syzygy part).
  bool keep_higher_components = true;
  // Elements with leading component >= this are dropped (syzygy-free mode).
  std::vector<std::int64_t> shifts;  // per component, for pair selection
  GroebnerLimits limits;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  std::int64_t deg;
};

class Engine {
 public:
  Engine(TermOrder ord, std::size_t ncomp, Options opt) : ord_(std::move(ord)), ncomp_(ncomp), opt_(std::move(opt)) {
    if (opt_.shifts.empty()) opt_.shifts.assign(ncomp_, 0);
  }

  const TermOrder& order() const { return ord_; }

  // Index of a basis element whose leading term divides (m, comp).
  std::optional<std::size_t> find_divisor(const Monomial& m, std::uint32_t comp) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (redundant_[k]) continue;
      const auto& lt = basis_[k].front();
      if (lt.comp == comp && lt.m.divides(m)) return k;
    }
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const auto& lt = basis_[k].front();
      if (lt.comp == comp && lt.m.divides(m)) return k;
    }
    return std::nullopt;
  }

  // Top reduction, or full reduction when `full` is set.
  MVec reduce(MVec r, bool full) const {
    MVec rem;
    while (!r.empty()) {
      auto k = find_divisor(r.front().m, r.front().comp);
      if (k) {
        const auto& g = basis_[*k];
        Rational c = r.front().c / g.front().c;
        Monomial q = r.front().m / g.front().m;
        r = sub_mul(r, c, q, g, ord_);
      } else {
        if (!full) break;
        rem.push_back(r.front());
        r.erase(r.begin());
      }
    }
    if (!full) return r;
    return rem;
  }

  void run(std::vector<MVec> gens) {
    for (auto& g : gens) {
      sort_vec(g, ord_);
      if (g.empty()) continue;
      g = reduce(std::move(g), false);
      if (g.empty()) continue;
      if (!opt_.keep_higher_components && g.front().comp != 0) continue;
      make_monic(g);
      add(std::move(g));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k];
        const auto& b = pairs_[best];
        if (a.deg < b.deg || (a.deg == b.deg && (a.j < b.j || (a.j == b.j && a.i < b.i)))) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (p.deg > opt_.limits.max_degree) throw ResourceLimit("Groebner degree cap exceeded");
      const auto& gi = basis_[p.i];
      const auto& gj = basis_[p.j];
      MVec s = sub_mul(MVec{}, Rational(-1), p.lcm / gi.front().m, gi, ord_);
      s = sub_mul(s, 1, p.lcm / gj.front().m, gj, ord_);
      s = reduce(std::move(s), false);
      if (s.empty()) continue;
      if (!opt_.keep_higher_components && s.front().comp != 0) continue;
      make_monic(s);
      add(std::move(s));
      if (basis_.size() > opt_.limits.max_basis) throw ResourceLimit("Groebner basis size cap exceeded");
      if (pairs_.size() > opt_.limits.max_pairs) throw ResourceLimit("Groebner pair cap exceeded");
    }
  }

  /// Minimal leading terms, each element tail-reduced and monic.
  std::vector<MVec> reduced_basis() const {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const auto& lk = basis_[k].front();
      bool drop = false;
      for (std::size_t o = 0; o < basis_.size() && !drop; ++o) {
        if (o == k) continue;
        const auto& lo = basis_[o].front();
        if (lo.comp != lk.comp || !lo.m.divides(lk.m)) continue;
        // equal leading terms: keep the earliest
        if (lo.m == lk.m && o > k) continue;
        drop = true;
      }
      if (!drop) keep.push_back(k);
    }
    Engine tmp(ord_, ncomp_, opt_);
    for (auto k : keep) {
      tmp.basis_.push_back(basis_[k]);
      tmp.redundant_.push_back(false);
    }
    std::vector<MVec> out;
    for (std::size_t a = 0; a < tmp.basis_.size(); ++a) {
      MVec head{tmp.basis_[a].front()};
      MVec tail(tmp.basis_[a].begin() + 1, tmp.basis_[a].end());
      Engine others(ord_, ncomp_, opt_);
      for (std::size_t b = 0; b < tmp.basis_.size(); ++b)
        if (b != a) {
          others.basis_.push_back(tmp.basis_[b]);
          others.redundant_.push_back(false);
        }
      MVec t = others.reduce(std::move(tail), true);
      head.insert(head.end(), t.begin(), t.end());
      make_monic(head);
      out.push_back(std::move(head));
    }
    std::sort(out.begin(), out.end(), [&](const MVec& x, const MVec& y) {
      return ord_(x.front().m, x.front().comp, y.front().m, y.front().comp) < 0;
    });
    return out;
  }

  const std::vector<MVec>& basis() const { return basis_; }

  void set_basis(std::vector<MVec> b) {
    basis_ = std::move(b);
    redundant_.assign(basis_.size(), false);
  }

 private:
  std::int64_t pair_degree(const Monomial& lcm, std::uint32_t comp) const {
    return ord_.wdeg(lcm) + opt_.shifts[comp];
  }

  void add(MVec h) {
    const std::size_t t = basis_.size();
    const auto& lh = h.front();
    const bool ideal = ncomp_ == 1;
    // Chain criterion on existing pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (p.comp == lh.comp && lh.m.divides(p.lcm)) {
        Monomial li = Monomial::lcm(basis_[p.i].front().m, lh.m);
        Monomial lj = Monomial::lcm(basis_[p.j].front().m, lh.m);
        if (li != p.lcm && lj != p.lcm) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    // New pairs, pruned by proper divisibility, equal lcms and coprimality.
    std::vector<Pair> fresh;
    std::vector<bool> coprime;
    for (std::size_t i = 0; i < t; ++i) {
      if (redundant_[i]) continue;
      const auto& li = basis_[i].front();
      if (li.comp != lh.comp) continue;
      Monomial l = Monomial::lcm(li.m, lh.m);
      fresh.push_back({i, t, l, lh.comp, pair_degree(l, lh.comp)});
      coprime.push_back(ideal && li.m.coprime(lh.m));
    }
    std::vector<bool> dead(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || dead[b]) continue;
        if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm)) {
          dead[a] = true;
          break;
        }
      }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (dead[a]) continue;
      bool any_coprime = coprime[a];
      for (std::size_t b = a + 1; b < fresh.size(); ++b)
        if (!dead[b] && fresh[b].lcm == fresh[a].lcm) {
          dead[b] = true;
          any_coprime = any_coprime || coprime[b];
        }
      if (any_coprime) dead[a] = true;
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (!dead[a]) pairs_.push_back(fresh[a]);
    for (std::size_t i = 0; i < t; ++i) {
      const auto& li = basis_[i].front();
      if (li.comp == lh.comp && lh.m.divides(li.m)) redundant_[i] = true;
    }
    basis_.push_back(std::move(h));
    redundant_.push_back(false);
  }

  TermOrder ord_;
  std::size_t ncomp_;
  Options opt_;
  std::vector<MVec> basis_;
  std::vector<bool> redundant_;
  std::vector<Pair> pairs_;
};

inline TermOrder make_order(const RingPtr& ring, OrderKind kind) {
  TermOrder o;
  o.kind = kind;
  o.n = ring->size();
  o.w = ring->weights();
  return o;
}

inline MVec to_vec(const Polynomial& p, std::uint32_t comp) {
  MVec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.mono, comp, t.coeff});
  return v;
}

inline std::vector<Polynomial> from_vec(const MVec& v, const RingPtr& ring, std::size_t ncomp) {
  std::vector<std::vector<Term>> parts(ncomp);
  for (const auto& t : v) parts[t.comp].push_back({t.m, t.c});
  std::vector<Polynomial> out;
  for (auto& ts : parts) out.push_back(Polynomial::from_terms(ring, std::move(ts)));
  return out;
}

}  // namespace gb

struct GroebnerBasis {
  RingPtr ring;
  OrderKind order = OrderKind::grevlex;
  std::vector<Polynomial> generators;  // reduced, monic, ascending leading terms
  bool reduced = true;
};

/// Reduced Groebner basis of the ideal generated by gens.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, OrderKind order = OrderKind::grevlex,
                                GroebnerLimits limits = {}) {
  if (gens.empty()) throw InvalidArgument("buchberger: no generators");
  const RingPtr& ring = gens.front().ring();
  gb::Options opt;
  opt.limits = limits;
  gb::Engine eng(gb::make_order(ring, order), 1, opt);
  std::vector<gb::MVec> vs;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    vs.push_back(gb::to_vec(g, 0));
  }
  eng.run(std::move(vs));
  GroebnerBasis out;
  out.ring = ring;
  out.order = order;
  for (const auto& v : eng.reduced_basis()) out.generators.push_back(gb::from_vec(v, ring, 1)[0]);
  return out;
}

struct NormalForm {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // f = sum cofactors[i] * gb[i] + remainder
};

inline NormalForm normal_form(const Polynomial& f, const GroebnerBasis& G) {
  const RingPtr& ring = G.ring;
  if (!same_ring(f.ring(), ring)) throw RingMismatch();
  auto ord = gb::make_order(ring, G.order);
  std::vector<gb::MVec> basis;
  for (const auto& g : G.generators) basis.push_back(gb::to_vec(g, 0));
  for (auto& b : basis) gb::sort_vec(b, ord);
  std::vector<std::vector<Term>> quot(basis.size());
  gb::MVec r = gb::to_vec(f, 0);
  gb::sort_vec(r, ord);
  std::vector<Term> rem;
  while (!r.empty()) {
    std::optional<std::size_t> k;
    for (std::size_t i = 0; i < basis.size() && !k; ++i)
      if (!basis[i].empty() && basis[i].front().m.divides(r.front().m)) k = i;
    if (!k) {
      rem.push_back({r.front().m, r.front().c});
      r.erase(r.begin());
      continue;
    }
    Rational c = r.front().c / basis[*k].front().c;
    Monomial q = r.front().m / basis[*k].front().m;
    quot[*k].push_back({q, c});
    r = gb::sub_mul(r, c, q, basis[*k], ord);
  }
  NormalForm nf;
  nf.remainder = Polynomial::from_terms(ring, std::move(rem));
  for (auto& q : quot) nf.cofactors.push_back(Polynomial::from_terms(ring, std::move(q)));
  return nf;
}

/// Cofactors h with f = sum h_i gens_i, or nullopt when f is not in the ideal.
inline std::optional<std::vector<Polynomial>> ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                                               GroebnerLimits limits = {}) {
  if (gens.empty()) throw InvalidArgument("ideal_membership: no generators");
  const RingPtr& ring = gens.front().ring();
  bool all_zero = true;
  for (const auto& g : gens) all_zero = all_zero && g.is_zero();
  if (all_zero) throw InvalidArgument("ideal_membership: all generators are zero");
  if (f.is_zero()) return std::vector<Polynomial>(gens.size(), Polynomial(ring));
  const std::size_t k = gens.size();
  gb::Options opt;
  opt.limits = limits;
  opt.keep_higher_components = false;
  auto hom = is_weighted_homogeneous(f);
  opt.shifts.assign(k + 1, 0);
  bool graded = true;
  for (std::size_t i = 0; i < k; ++i) {
    auto h = is_weighted_homogeneous(gens[i]);
    if (gens[i].is_zero()) continue;
    if (!h) graded = false;
    else opt.shifts[i + 1] = *h;
  }
  auto ord = gb::make_order(ring, (graded && hom) ? OrderKind::weighted_grevlex : OrderKind::grevlex);
  gb::Engine eng(ord, k + 1, opt);
  std::vector<gb::MVec> vs;
  for (std::size_t i = 0; i < k; ++i) {
    if (gens[i].is_zero()) continue;
    auto v = gb::to_vec(gens[i], 0);
    v.push_back({Monomial{}, static_cast<std::uint32_t>(i + 1), Rational(1)});
    vs.push_back(std::move(v));
  }
  eng.run(std::move(vs));
  gb::MVec r = gb::to_vec(f, 0);
  gb::sort_vec(r, ord);
  while (!r.empty() && r.front().comp == 0) {
    auto d = eng.find_divisor(r.front().m, 0);
    if (!d) return std::nullopt;
    const auto& g = eng.basis()[*d];
    r = gb::sub_mul(r, r.front().c / g.front().c, r.front().m / g.front().m, g, ord);
  }
  auto parts = gb::from_vec(r, ring, k + 1);
  std::vector<Polynomial> cof;
  for (std::size_t i = 0; i < k; ++i) cof.push_back(-parts[i + 1]);
  // f - sum h_i g_i must vanish exactly.
  Polynomial check = f;
  for (std::size_t i = 0; i < k; ++i) check -= cof[i] * gens[i];
  if (!check.is_zero()) throw Error("ideal_membership: cofactor check failed");
  return cof;
}

/// Codimension from the leading-term ideal: nvars minus the largest set of
/// variables containing the support of no leading monomial. The unit ideal
/// reports nvars + 1 and the zero ideal 0.
inline int ideal_codim(const std::vector<Polynomial>& gens, GroebnerLimits limits = {}) {
  if (gens.empty()) throw InvalidArgument("ideal_codim: no generators");
  const RingPtr& ring = gens.front().ring();
  std::vector<Polynomial> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  const int n = static_cast<int>(ring->size());
  if (nz.empty()) return 0;
  auto G = buchberger(nz, OrderKind::grevlex, limits);
  std::vector<std::uint32_t> supports;
  auto ord = gb::make_order(ring, OrderKind::grevlex);
  for (const auto& g : G.generators) {
    gb::MVec v = gb::to_vec(g, 0);
    gb::sort_vec(v, ord);
    const Monomial& lm = v.front().m;
    if (lm.is_one()) return n + 1;
    std::uint32_t s = 0;
    for (int i = 0; i < n; ++i)
      if (lm[i]) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int sz = __builtin_popcount(set);
    if (sz <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = sz;
  }
  return n - best;
}

namespace detail {

inline std::vector<std::int64_t> derivation_shifts(const RingPtr& ring) {
  std::vector<std::int64_t> s;
  for (std::size_t i = 0; i < ring->size(); ++i) s.push_back(1 - ring->weight(i));
  return s;
}

inline gb::MVec derivation_vec(const Derivation& d) {
  gb::MVec v;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& t : d[i].terms()) v.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
  return v;
}

}  // namespace detail

/// Whether d lies in the submodule generated by gens (module normal form).
inline bool in_submodule(const Derivation& d, const std::vector<Derivation>& gens, GroebnerLimits limits = {}) {
  const RingPtr& ring = d.ring();
  if (d.is_zero()) return true;
  if (gens.empty()) return false;
  gb::Options opt;
  opt.limits = limits;
  opt.shifts = detail::derivation_shifts(ring);
  auto ord = gb::make_order(ring, OrderKind::weighted_grevlex);
  gb::Engine eng(ord, ring->size(), opt);
  std::vector<gb::MVec> vs;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    vs.push_back(detail::derivation_vec(g));
  }
  eng.run(std::move(vs));
  gb::MVec v = detail::derivation_vec(d);
  gb::sort_vec(v, ord);
  return eng.reduce(std::move(v), true).empty();
}

struct DerGenerators {
  RingPtr ring;  // ring actually used; regraded when f was not homogeneous for the given weights
  bool regraded = false;
  std::vector<Derivation> generators;  // ascending degree
  std::vector<std::int64_t> degrees;
};

/// Minimal homogeneous generators of Der(f) from the syzygies of
/// (df/dx_0, ..., df/dx_n, f), projected to the first n+1 slots.
inline DerGenerators der_generators(const Polynomial& f_in, GroebnerLimits limits = {}) {
  if (f_in.is_zero()) throw InvalidArgument("der_generators: zero polynomial");
  if (f_in.is_constant()) throw InvalidArgument("der_generators: constant polynomial");
  if (!is_squarefree(f_in)) throw InvalidArgument("der_generators: polynomial is not reduced");
  DerGenerators out;
  Polynomial f = f_in;
  out.ring = f.ring();
  if (!is_weighted_homogeneous(f)) {
    auto w = find_weight_vector({f}, false);
    if (!w) throw InvalidArgument("der_generators: polynomial is not weighted homogeneous for any positive weights");
    out.ring = with_weights(f.ring(), *w);
    out.regraded = true;
    f = change_ring(f, out.ring);
  }
  const RingPtr& ring = out.ring;
  const std::size_t n = ring->size();
  const std::int64_t d = *is_weighted_homogeneous(f);
  // Component 0 carries the polynomial; component i+1 the coefficient of d/dx_i; n+1 the multiple of f.
  gb::Options opt;
  opt.limits = limits;
  opt.shifts.assign(n + 2, 0);
  for (std::size_t i = 0; i < n; ++i) opt.shifts[i + 1] = d - ring->weight(i);
  opt.shifts[n + 1] = d;
  std::vector<std::int64_t> shifts(n + 2);
  auto ord = gb::make_order(ring, OrderKind::weighted_grevlex);
  gb::Engine eng(ord, n + 2, opt);
  std::vector<gb::MVec> vs;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = gb::to_vec(partial_derivative(f, i), 0);
    v.push_back({Monomial{}, static_cast<std::uint32_t>(i + 1), Rational(1)});
    vs.push_back(std::move(v));
  }
  {
    auto v = gb::to_vec(f, 0);
    v.push_back({Monomial{}, static_cast<std::uint32_t>(n + 1), Rational(1)});
    vs.push_back(std::move(v));
  }
  eng.run(std::move(vs));
  std::vector<std::pair<std::int64_t, Derivation>> cands;
  for (const auto& g : eng.reduced_basis()) {
    if (g.front().comp == 0) continue;
    auto parts = gb::from_vec(g, ring, n + 2);
    std::vector<Polynomial> cs(parts.begin() + 1, parts.begin() + 1 + static_cast<std::ptrdiff_t>(n));
    Derivation der(ring, cs);
    if (der.is_zero()) continue;
    auto dd = wdeg_derivation(der);
    cands.emplace_back(*dd.degree, std::move(der));
  }
  std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [deg, der] : cands) {
    if (in_submodule(der, out.generators, limits)) continue;
    if (!in_der(der, f).member) throw Error("der_generators: syzygy projection left Der(f)");
    out.generators.push_back(der);
    out.degrees.push_back(deg);
  }
  return out;
}

struct OracleVerdict {
  bool free = false;
  std::vector<std::int64_t> degrees;  // sorted, Euler's 1 included
  DerGenerators gens;
  std::optional<FreenessCertificate> certificate;
  std::string reason;
};

/// Free iff the minimal generators number n+1 and pass Saito's criterion.
inline OracleVerdict is_free_oracle(const Polynomial& f, GroebnerLimits limits = {}) {
  OracleVerdict v;
  v.gens = der_generators(f, limits);
  v.degrees = v.gens.degrees;
  std::sort(v.degrees.begin(), v.degrees.end());
  const std::size_t n = v.gens.ring->size();
  if (v.gens.generators.size() != n) {
    v.reason = std::to_string(v.gens.generators.size()) + " minimal generators for " + std::to_string(n) +
               " variables";
    return v;
  }
  auto rep = saito_check(change_ring(f, v.gens.ring), v.gens.generators, "oracle");
  if (!rep.free) {
    v.reason = "generators fail Saito's criterion: " + rep.message;
    return v;
  }
  v.free = true;
  v.certificate = rep.certificate;
  if (v.gens.regraded) v.certificate->notes.push_back("regraded to weights " + v.gens.ring->describe());
  return v;
}

}  // namespace freediv
