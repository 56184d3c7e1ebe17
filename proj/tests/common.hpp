#pragma once

#include <algorithm>
#include <cstdio>
#include <sys/wait.h>
#include <random>
#include <string>
#include <vector>

#include "freediv/freediv.hpp"

namespace fdt {

using namespace freediv;

inline Polynomial P(const RingPtr& R, const std::string& s) { return parse_poly(s, R); }
inline Derivation D(const RingPtr& R, const std::string& s) { return parse_derivation(s, R); }

using Ints = std::vector<std::int64_t>;

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless merged.
inline RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string("\"") + FREEDIV_CLI + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

// Random polynomial with small integer coefficients, total degree <= maxdeg.
inline Polynomial random_poly(std::mt19937& rng, const RingPtr& R, int terms, int maxdeg, int coef = 3) {
  std::uniform_int_distribution<int> c(-coef, coef), v(0, static_cast<int>(R->size()) - 1), d(0, maxdeg);
  Polynomial p(R);
  for (int t = 0; t < terms; ++t) {
    int deg = d(rng);
    Polynomial m = Polynomial::constant(R, c(rng));
    for (int k = 0; k < deg; ++k) m *= Polynomial::variable(R, v(rng));
    p += m;
  }
  return p;
}

// All monomials of weighted degree deg.
inline std::vector<Monomial> monomials_of_degree(const RingPtr& R, std::int64_t deg) {
  std::vector<Monomial> all;
  const std::size_t n = R->size();
  if (deg < 0) return all;
  std::vector<unsigned> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == n) {
      if (left % R->weight(i) == 0) {
        e[i] = static_cast<unsigned>(left / R->weight(i));
        all.push_back(Monomial(e));
      }
      return;
    }
    for (std::int64_t a = 0; a * R->weight(i) <= left; ++a) {
      e[i] = static_cast<unsigned>(a);
      self(self, i + 1, left - a * R->weight(i));
    }
    e[i] = 0;
  };
  rec(rec, 0, deg);
  return all;
}

// Random weighted homogeneous polynomial of weighted degree deg (possibly zero).
inline Polynomial random_homog(std::mt19937& rng, const RingPtr& R, std::int64_t deg, int terms, int coef = 3) {
  auto all = monomials_of_degree(R, deg);
  Polynomial p(R);
  if (all.empty()) return p;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> c(-coef, coef);
  for (int t = 0; t < terms; ++t) p += Polynomial::monomial(R, all[pick(rng)], c(rng));
  return p;
}

inline Derivation random_homog_derivation(std::mt19937& rng, const RingPtr& R, std::int64_t deg, int terms) {
  std::vector<Polynomial> cs;
  for (std::size_t i = 0; i < R->size(); ++i) cs.push_back(random_homog(rng, R, deg - 1 + R->weight(i), terms));
  return Derivation(R, cs);
}

inline Ints sorted(Ints v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace fdt
