#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freediv/freediv.hpp"

using namespace freediv;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kLimit = 3 };

std::string list(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<std::int64_t> int_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& piece : split(s, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument(what + ": expected comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

void write_json(const FreenessCertificate& c, const std::string& path) {
  if (path.empty()) return;
  std::string text = serialize(c) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

void print_certificate(const FreenessCertificate& c) {
  std::cout << "free: yes\n";
  std::cout << "method: " << c.method << "\n";
  std::cout << "ring: " << c.ring->describe() << "\n";
  std::cout << "divisor: " << to_string(c.divisor) << "\n";
  std::cout << "exponents: " << list(c.exponents) << "\n";
  if (!c.der0_exponents.empty()) std::cout << "der0 exponents: " << list(c.der0_exponents) << "\n";
  std::cout << "unit: " << to_string(c.unit) << "\n";
  std::cout << "basis:\n";
  for (std::size_t i = 0; i < c.basis.size(); ++i) std::cout << "  [" << i << "] " << to_string(c.basis[i]) << "\n";
  if (c.provenance) std::cout << "provenance: " << *c.provenance << "\n";
  for (const auto& n : c.notes) std::cout << "note: " << n << "\n";
}

int not_free(const std::string& failed, const std::string& message) {
  std::cout << "free: no\n";
  if (!failed.empty()) std::cout << "failed: " << failed << "\n";
  std::cout << "reason: " << message << "\n";
  return kFailed;
}

std::vector<Derivation> parse_derivs(const std::vector<std::string>& texts, const RingPtr& R) {
  std::vector<Derivation> out;
  for (const auto& t : texts) out.push_back(parse_derivation(t, R));
  return out;
}

std::vector<Polynomial> parse_polys(const std::vector<std::string>& texts, const RingPtr& R) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, R));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Shared option bundle; each verb reads the fields it registered.
struct Opts {
  std::string ring, f, json, var, weights = "canonical", order = "grevlex", path, out, scalars, n, r, lambda;
  std::vector<std::string> derivs, gens;
  std::size_t k = 0, m = 0, nn = 0;
  bool cone = false, strict = false, k_set = false;
  std::size_t max_basis = GroebnerLimits{}.max_basis;
  std::int64_t max_degree = GroebnerLimits{}.max_degree;
  std::size_t max_pairs = GroebnerLimits{}.max_pairs;
  GroebnerLimits limits() const {
    GroebnerLimits l;
    l.max_basis = max_basis;
    l.max_degree = max_degree;
    l.max_pairs = max_pairs;
    return l;
  }
};

int report_family(const FamilyInstance& inst, const Opts& o) {
  if (o.weights == "auto") {
    auto w = find_weight_vector({inst.divisor}, false);
    std::cout << "weights (canonical): " << inst.ring->describe() << "\n";
    if (w) {
      std::vector<std::int64_t> ww = *w;
      std::cout << "weights (auto): " << with_weights(inst.ring, ww)->describe() << "\n";
    } else {
      std::cout << "weights (auto): none found\n";
    }
  }
  auto r = certify(inst, o.limits());
  if (!r.free) return not_free("", r.message);
  print_certificate(*r.certificate);
  std::cout << "expected der0 exponents: " << list(inst.expected_der0) << "\n";
  std::cout << "formula match: " << (r.exponents_match ? "yes" : "no") << "\n";
  write_json(*r.certificate, o.json);
  return r.exponents_match ? kOk : kFailed;
}

FamilyWeights family_weights(const Opts& o) {
  if (o.weights == "reduced") return FamilyWeights::reduced;
  if (o.weights == "canonical" || o.weights == "auto") return FamilyWeights::canonical;
  throw InvalidArgument("--weights must be canonical, reduced or auto");
}

PencilScalars parse_scalars(const std::string& s) {
  PencilScalars out;
  if (s.empty()) return out;
  for (const auto& piece : split(s, ',')) {
    auto ab = split(piece, ':');
    if (ab.size() != 2) throw InvalidArgument("--scalars: expected a:b pairs separated by commas");
    out.emplace_back(parse_rational(ab[0]), parse_rational(ab[1]));
  }
  return out;
}

OrderKind order_kind(const std::string& s) {
  if (s == "grevlex") return OrderKind::grevlex;
  if (s == "grlex") return OrderKind::grlex;
  if (s == "wgrevlex") return OrderKind::weighted_grevlex;
  throw InvalidArgument("--order must be grevlex, grlex or wgrevlex");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"freediv: free divisor certificates over Q"};
  app.require_subcommand(1);
  Opts o;
  int code = kOk;
  std::function<int()> action;

  auto ring_opt = [&](CLI::App* c) { c->add_option("--ring", o.ring, "ring, e.g. \"x:4,y:2,z:4\"")->required(); };
  auto f_opt = [&](CLI::App* c, bool req = true) {
    auto* opt = c->add_option("--f", o.f, "polynomial");
    if (req) opt->required();
  };
  auto deriv_opt = [&](CLI::App* c, bool req = true) {
    auto* opt = c->add_option("--deriv", o.derivs, "derivation \"g0; g1; ...\" (repeatable)")
                    ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
                    ->allow_extra_args(false);
    if (req) opt->required();
  };
  auto json_opt = [&](CLI::App* c) { c->add_option("--json", o.json, "write certificate JSON to a file ('-' for stdout)"); };
  auto limit_opts = [&](CLI::App* c) {
    c->add_option("--max-basis", o.max_basis, "Groebner basis size cap");
    c->add_option("--max-degree", o.max_degree, "Groebner degree cap");
    c->add_option("--max-pairs", o.max_pairs, "Groebner pair cap");
  };

  auto* wdeg_cmd = app.add_subcommand("wdeg", "weighted degree of a polynomial or derivation");
  ring_opt(wdeg_cmd);
  f_opt(wdeg_cmd, false);
  deriv_opt(wdeg_cmd, false);
  wdeg_cmd->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      if (!o.f.empty()) {
        auto p = parse_poly(o.f, R);
        if (p.is_zero()) {
          std::cout << "wdeg: undefined (zero polynomial)\n";
          return int(kOk);
        }
        auto h = homogeneity(p);
        std::cout << "wdeg: " << *wdeg(p) << "\n";
        std::cout << "homogeneous: " << (h.homogeneous ? "yes" : "no") << "\n";
        return int(kOk);
      }
      if (o.derivs.size() != 1) throw InvalidArgument("wdeg: pass --f or exactly one --deriv");
      auto d = wdeg_derivation(parse_derivation(o.derivs[0], R));
      if (d.zero) {
        std::cout << "wdeg: undefined (zero derivation)\n";
        return int(kOk);
      }
      std::cout << "wdeg: " << *d.degree << "\n";
      std::cout << "homogeneous: " << (d.homogeneous ? "yes" : "no") << "\n";
      return int(kOk);
    };
  });

  auto* homog_cmd = app.add_subcommand("homog-check", "exit 0 iff the polynomial is weighted homogeneous");
  ring_opt(homog_cmd);
  f_opt(homog_cmd);
  homog_cmd->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      auto p = parse_poly(o.f, R);
      auto d = is_weighted_homogeneous(p);
      if (!d) {
        std::cout << "weighted homogeneous: no\n";
        return int(kFailed);
      }
      std::cout << "weighted homogeneous: yes\nwdeg: " << *d << "\n";
      return int(kOk);
    };
  });

  auto* euler_cmd = app.add_subcommand("euler", "weighted Euler derivation of the ring");
  ring_opt(euler_cmd);
  euler_cmd->callback([&] {
    action = [&] {
      std::cout << to_string(euler(parse_ring(o.ring))) << "\n";
      return int(kOk);
    };
  });

  auto* apply_cmd = app.add_subcommand("apply", "apply a derivation to a polynomial");
  ring_opt(apply_cmd);
  f_opt(apply_cmd);
  deriv_opt(apply_cmd);
  apply_cmd->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      if (o.derivs.size() != 1) throw InvalidArgument("apply: pass exactly one --deriv");
      std::cout << to_string(apply(parse_derivation(o.derivs[0], R), parse_poly(o.f, R))) << "\n";
      return int(kOk);
    };
  });

  auto* member_cmd = app.add_subcommand("member", "exit 0 iff the derivation lies in Der(f)");
  ring_opt(member_cmd);
  f_opt(member_cmd);
  deriv_opt(member_cmd);
  member_cmd->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      if (o.derivs.size() != 1) throw InvalidArgument("member: pass exactly one --deriv");
      auto m = in_der(parse_derivation(o.derivs[0], R), parse_poly(o.f, R));
      if (!m.member) {
        std::cout << "member: no\n";
        return int(kFailed);
      }
      std::cout << "member: yes\ncofactor: " << to_string(*m.cofactor) << "\n";
      return int(kOk);
    };
  });

  auto* saito_cmd = app.add_subcommand("saito-check", "Saito's criterion for n derivations");
  ring_opt(saito_cmd);
  f_opt(saito_cmd);
  deriv_opt(saito_cmd);
  json_opt(saito_cmd);
  saito_cmd->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      auto rep = saito_check(parse_poly(o.f, R), parse_derivs(o.derivs, R));
      if (!rep.free) {
        if (!rep.residual.is_zero() && rep.residual.ring()) std::cout << "residual: " << to_string(rep.residual) << "\n";
        return not_free(rep.failed, rep.message);
      }
      print_certificate(*rep.certificate);
      write_json(*rep.certificate, o.json);
      return int(kOk);
    };
  });

  auto* wme_cmd = app.add_subcommand("wme", "weighted multiple eigenscheme criterion (nvars-2 tensors)");
  ring_opt(wme_cmd);
  f_opt(wme_cmd);
  deriv_opt(wme_cmd, false);
  json_opt(wme_cmd);
  limit_opts(wme_cmd);
  wme_cmd->add_flag("--strict", o.strict, "also require each tensor outside the span of Euler and the others");
  wme_cmd->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      WmeOptions opt;
      opt.strict = o.strict;
      opt.limits = o.limits();
      auto rep = wme_freeness(parse_poly(o.f, R), parse_derivs(o.derivs, R), opt);
      if (!rep.minors.minors.empty()) {
        std::cout << "minors:";
        for (const auto& m : rep.minors.minors) std::cout << " [" << to_string(m) << "]";
        std::cout << "\n";
      }
      if (!rep.free) return not_free(rep.failed, rep.message);
      std::cout << "completing row: " << to_string(*rep.completing) << "\n";
      print_certificate(*rep.certificate);
      std::cout << "expected der0 exponents: " << list(rep.expected_der0) << "\n";
      write_json(*rep.certificate, o.json);
      return int(kOk);
    };
  });

  auto* wmeg_cmd = app.add_subcommand("wme-general", "determinantal criterion without a forced Euler row");
  ring_opt(wmeg_cmd);
  f_opt(wmeg_cmd);
  deriv_opt(wmeg_cmd);
  json_opt(wmeg_cmd);
  limit_opts(wmeg_cmd);
  wmeg_cmd->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      auto rep = general_determinantal_freeness(parse_poly(o.f, R), parse_derivs(o.derivs, R), o.limits());
      if (!rep.free) return not_free(rep.failed, rep.message);
      if (rep.completing) std::cout << "completing row: " << to_string(*rep.completing) << "\n";
      print_certificate(*rep.certificate);
      write_json(*rep.certificate, o.json);
      return int(kOk);
    };
  });

  auto* cone_cmd = app.add_subcommand("cone", "lift an affine Saito basis to the projective cone");
  ring_opt(cone_cmd);
  f_opt(cone_cmd);
  deriv_opt(cone_cmd);
  json_opt(cone_cmd);
  cone_cmd->add_option("--var", o.var, "cone variable (default x0, placed first)");
  cone_cmd->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      auto cc = cone_check(parse_poly(o.f, R), parse_derivs(o.derivs, R), o.var.empty() ? "x0" : o.var);
      if (!cc.accepted) {
        std::cout << "refused: " << cc.message << "\ndeficit: " << cc.deficit << "\n";
        return int(kFailed);
      }
      return report_family(*cc.instance, o);
    };
  });

  auto* fam = app.add_subcommand("family", "construct and certify a divisor family");
  fam->require_subcommand(1);
  auto fam_common = [&](CLI::App* c) {
    c->add_flag("--cone", o.cone, "cone construction in one more variable");
    c->add_option("--var", o.var, "cone variable name");
    c->add_option("--weights", o.weights, "canonical | reduced | auto");
    json_opt(c);
    limit_opts(c);
  };
  auto* refl = fam->add_subcommand("reflection", "p * prod (x_i^n_i - x_j^n_j)");
  refl->add_option("--n", o.n, "exponents n_1,...,n_l")->required();
  refl->add_option("--k", o.k, "number of coordinate hyperplanes kept (default l)");
  fam_common(refl);
  refl->callback([&] {
    action = [&] {
      auto n = int_list(o.n, "--n");
      std::size_t l = n.size();
      std::size_t k = refl->count("--k") ? o.k : l;
      auto w = family_weights(o);
      auto inst = o.cone ? reflection_cone(l, k, n, o.var.empty() ? "x0" : o.var, w) : reflection(l, k, n, w);
      return report_family(inst, o);
    };
  });
  auto* bp = fam->add_subcommand("bp", "Brieskorn-Pham variant (x^r0 + y^r1) prod (x^r0 + y^r1 + a z^r2)");
  bp->add_option("--r", o.r, "r0,r1,r2")->required();
  bp->add_option("--lambda", o.lambda, "distinct nonzero rationals, comma separated");
  fam_common(bp);
  bp->callback([&] {
    action = [&] {
      auto r = int_list(o.r, "--r");
      if (r.size() != 3) throw InvalidArgument("--r needs three integers");
      std::vector<Rational> lambda;
      if (!o.lambda.empty())
        for (const auto& s : split(o.lambda, ',')) lambda.push_back(parse_rational(s));
      auto inst = o.cone ? brieskorn_pham_cone(r[0], r[1], r[2], lambda, o.var.empty() ? "t" : o.var)
                         : brieskorn_pham(r[0], r[1], r[2], lambda, family_weights(o));
      return report_family(inst, o);
    };
  });
  auto* pen = fam->add_subcommand("pencil", "pencil members built from h_i = prod_{j != i} x_j^r_j");
  pen->add_option("--n", o.nn, "projective dimension n (variables x0..xn)")->required();
  pen->add_option("--m", o.m, "split index, 0 <= m <= n-1")->required();
  pen->add_option("--r", o.r, "r0,...,rn")->required();
  pen->add_option("--scalars", o.scalars, "extra members a:b, comma separated");
  fam_common(pen);
  pen->callback([&] {
    action = [&] {
      auto r = int_list(o.r, "--r");
      auto s = parse_scalars(o.scalars);
      auto inst = o.cone ? pencil_cone(o.nn, o.m, r, s, o.var) : pencil_divisor(o.nn, o.m, r, s, family_weights(o));
      return report_family(inst, o);
    };
  });

  auto* orc = app.add_subcommand("oracle", "Groebner-based reference computations");
  orc->require_subcommand(1);
  auto* gb_cmd = orc->add_subcommand("gb", "reduced Groebner basis");
  ring_opt(gb_cmd);
  gb_cmd->add_option("--gens", o.gens, "generator (repeatable)")->required()->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)->allow_extra_args(false);
  gb_cmd->add_option("--order", o.order, "grevlex | grlex | wgrevlex");
  limit_opts(gb_cmd);
  gb_cmd->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      auto G = buchberger(parse_polys(o.gens, R), order_kind(o.order), o.limits());
      for (const auto& g : G.generators) std::cout << to_string(g) << "\n";
      return int(kOk);
    };
  });
  auto* om = orc->add_subcommand("member", "ideal membership with cofactors");
  ring_opt(om);
  f_opt(om);
  om->add_option("--gens", o.gens, "generator (repeatable)")->required()->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)->allow_extra_args(false);
  limit_opts(om);
  om->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      auto c = ideal_membership(parse_poly(o.f, R), parse_polys(o.gens, R), o.limits());
      if (!c) {
        std::cout << "member: no\n";
        return int(kFailed);
      }
      std::cout << "member: yes\n";
      for (std::size_t i = 0; i < c->size(); ++i) std::cout << "  h" << i << " = " << to_string((*c)[i]) << "\n";
      return int(kOk);
    };
  });
  auto* oc = orc->add_subcommand("codim", "codimension of an ideal");
  ring_opt(oc);
  oc->add_option("--gens", o.gens, "generator (repeatable)")->required()->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)->allow_extra_args(false);
  limit_opts(oc);
  oc->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      std::cout << "codim: " << ideal_codim(parse_polys(o.gens, R), o.limits()) << "\n";
      return int(kOk);
    };
  });
  auto* od = orc->add_subcommand("der-gens", "minimal generators of Der(f)");
  ring_opt(od);
  f_opt(od);
  limit_opts(od);
  od->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      auto g = der_generators(parse_poly(o.f, R), o.limits());
      if (g.regraded) std::cout << "regraded: " << g.ring->describe() << "\n";
      for (std::size_t i = 0; i < g.generators.size(); ++i)
        std::cout << "  [" << g.degrees[i] << "] " << to_string(g.generators[i]) << "\n";
      return int(kOk);
    };
  });
  auto* of = orc->add_subcommand("is-free", "freeness from minimal generators of Der(f)");
  ring_opt(of);
  f_opt(of);
  json_opt(of);
  limit_opts(of);
  of->callback([&] {
    action = [&] {
      auto R = parse_ring(o.ring);
      auto v = is_free_oracle(parse_poly(o.f, R), o.limits());
      if (!v.free) {
        std::cout << "not free: " << v.reason << "\n";
        std::cout << "generator degrees: " << list(v.degrees) << "\n";
        return int(kFailed);
      }
      print_certificate(*v.certificate);
      write_json(*v.certificate, o.json);
      return int(kOk);
    };
  });

  auto* ver = app.add_subcommand("verify", "recheck a certificate file");
  ver->add_option("path", o.path, "certificate JSON")->required();
  ver->callback([&] {
    action = [&] {
      auto c = parse_certificate(read_file(o.path));
      auto r = verify_certificate(c);
      if (!r.ok) {
        std::cout << "verify: FAIL\ncondition: " << r.condition << "\ndetail: " << r.detail << "\n";
        return int(kFailed);
      }
      std::cout << "verify: OK\n";
      return int(kOk);
    };
  });

  auto* emit = app.add_subcommand("emit", "rewrite a certificate in canonical form");
  emit->add_option("path", o.path, "certificate JSON")->required();
  emit->add_option("--out", o.out, "output file (default stdout)");
  emit->callback([&] {
    action = [&] {
      auto c = parse_certificate(read_file(o.path));
      write_json(c, o.out.empty() ? "-" : o.out);
      return int(kOk);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    code = action ? action() : kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kLimit;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cout.flush();
  return code;
}
