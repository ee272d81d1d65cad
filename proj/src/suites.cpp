#include "posetop/suites.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "posetop/canon.hpp"
#include "posetop/enumeration.hpp"
#include "posetop/error.hpp"
#include "posetop/hopf.hpp"
#include "posetop/linear_species.hpp"
#include "posetop/parallel.hpp"
#include "posetop/structure.hpp"

namespace posetop {

std::vector<Poset> small_posets(std::size_t max_n, const std::string& prefix) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    all_posets(n, [&](const Poset& p) {
      out.push_back(p.relabeled([&](const Label& l) { return prefix + l; }));
    });
  }
  return out;
}

namespace {

// Runs body(i, report) over count work items and merges per-item reports in
// index order. Exceptions are reported as failures of their item.
template <class Body>
VerificationReport run_grid(const std::string& suite, std::size_t count,
                            std::size_t jobs, Body body) {
  VerificationReport total;
  total.suite = suite;
  ReportTimer timer(total);
  std::vector<VerificationReport> parts(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    try {
      body(i, parts[i]);
    } catch (const std::exception& e) {
      parts[i].check(false, [&] {
        return Failure{"work item " + std::to_string(i), "exception", e.what()};
      });
    }
  });
  for (auto const& p : parts) total.merge(p);
  return total;
}

std::string show(const Poset& p) { return p.to_string(); }

}  // namespace

VerificationReport verify_axioms(Family f, const SuiteOptions& opt) {
  auto const as = small_posets(opt.max_n, "a");
  auto const bs = small_posets(opt.max_n, "b");
  auto const cs = small_posets(opt.max_n, "c");
  std::vector<FormalSum> csum;
  for (auto const& c : cs) csum.emplace_back(c);
  return run_grid(
      "axioms " + std::string(to_string(f)), as.size(), opt.jobs,
      [&](std::size_t ia, VerificationReport& r) {
        Poset const& a = as[ia];
        for (auto const& x : a.labels()) {
          // Nested: (A o_x B) o_y C = A o_x (B o_y C).
          for (auto const& b : bs) {
            FormalSum const ab = compose(f, a, x, b);
            FormalSum const fa(a);
            for (auto const& y : b.labels()) {
              for (std::size_t ic = 0; ic < cs.size(); ++ic) {
                FormalSum const lhs = compose_bilinear(f, ab, y, csum[ic]);
                FormalSum const rhs =
                    compose_bilinear(f, fa, x, compose(f, b, y, cs[ic]));
                r.check(lhs == rhs, [&] {
                  return Failure{"nested A=" + show(a) + " x=" + x +
                                     " B=" + show(b) + " y=" + y +
                                     " C=" + show(cs[ic]),
                                 lhs.to_string(), rhs.to_string()};
                });
              }
            }
          }
          // Parallel: (A o_x B) o_y C = (A o_y C) o_x B.
          for (auto const& y : a.labels()) {
            if (y == x) continue;
            for (auto const& b : bs) {
              FormalSum const ab = compose(f, a, x, b);
              FormalSum const fb(b);
              for (std::size_t ic = 0; ic < cs.size(); ++ic) {
                FormalSum const lhs = compose_bilinear(f, ab, y, csum[ic]);
                FormalSum const rhs =
                    compose_bilinear(f, compose(f, a, y, cs[ic]), x, fb);
                r.check(lhs == rhs, [&] {
                  return Failure{"parallel A=" + show(a) + " x=" + x +
                                     " y=" + y + " B=" + show(b) +
                                     " C=" + show(cs[ic]),
                                 lhs.to_string(), rhs.to_string()};
                });
              }
            }
          }
        }
      });
}

VerificationReport verify_units(Family f, const SuiteOptions& opt) {
  auto const ps = small_posets(opt.max_n, "p");
  return run_grid("units " + std::string(to_string(f)), ps.size(), opt.jobs,
                  [&](std::size_t i, VerificationReport& r) {
                    Poset const& p = ps[i];
                    FormalSum const left = compose(f, singleton("u"), "u", p);
                    r.check(left == FormalSum(p), [&] {
                      return Failure{"u o_u " + show(p), left.to_string(),
                                     show(p)};
                    });
                    for (auto const& v : p.labels()) {
                      FormalSum const right = compose(f, p, v, singleton(v));
                      r.check(right == FormalSum(p), [&] {
                        return Failure{show(p) + " o_" + v + " " + v,
                                       right.to_string(), show(p)};
                      });
                    }
                  });
}

VerificationReport verify_quotient_criterion(const SuiteOptions& opt) {
  auto const ps = small_posets(opt.max_n, "");
  return run_grid(
      "quotient", ps.size(), opt.jobs, [&](std::size_t i, VerificationReport& r) {
        Poset const& p = ps[i];
        for (Bits s = 1; s <= p.all_mask(); ++s) {
          GroundSubset sub;
          for (std::size_t k = 0; k < p.size(); ++k) {
            if ((s >> k) & 1U) sub.members.push_back(p.label(k));
          }
          bool const convex = is_convex(p, sub);
          bool succeeded = false;
          std::string what;
          try {
            Poset const q = quotient(p, sub, "B");
            succeeded = Poset::is_partial_order(q.up_rows());
          } catch (const Error& e) {
            what = e.what();
            if (e.code() != ErrorCode::NotConvex) what = "unexpected " + what;
          }
          r.check(succeeded == convex && what.rfind("unexpected", 0) != 0, [&] {
            std::string members;
            for (auto const& m : sub.members) members += m + " ";
            return Failure{show(p) + " / {" + members + "}",
                           convex ? "convex" : "not convex",
                           succeeded ? "quotient ok" : "quotient failed " + what};
          });
        }
      });
}

VerificationReport verify_phi_suite(const SuiteOptions& opt) {
  auto const as = small_posets(opt.max_n, "a");
  auto const bs = small_posets(opt.max_n, "b");
  auto report = run_grid(
      "phi", as.size(), opt.jobs, [&](std::size_t i, VerificationReport& r) {
        Poset const& a = as[i];
        for (auto const& x : a.labels()) {
          for (auto const& b : bs) {
            r.check(verify_phi_morphism(a, x, b), [&] {
              FormalSum const lhs = phi(compose_bullet(InsertionSite::make(a, x, b)));
              FormalSum const rhs = circ_bilinear(phi(a), x, phi(b));
              return Failure{"A=" + show(a) + " x=" + x + " B=" + show(b),
                             lhs.to_string(), rhs.to_string()};
            });
          }
        }
      });
  // Inverse on every basis element and on differences of pairs of them.
  for (std::size_t n = 1; n <= opt.max_n + 1; ++n) {
    std::vector<Poset> level;
    all_posets(n, [&](const Poset& p) { level.push_back(p); });
    for (std::size_t i = 0; i < level.size(); ++i) {
      FormalSum const x(level[i]);
      FormalSum const back = phi_inverse(phi(x));
      report.check(back == x, [&] {
        return Failure{"phi_inverse(phi(" + show(level[i]) + "))",
                       back.to_string(), x.to_string()};
      });
      if (n > 3) continue;
      for (std::size_t j = 0; j < level.size(); ++j) {
        FormalSum y(level[i], 2);
        y.add(level[j], -3);
        FormalSum const yb = phi_inverse(phi(y));
        report.check(yb == y, [&] {
          return Failure{"phi_inverse(phi(" + y.to_string() + "))",
                         yb.to_string(), y.to_string()};
        });
      }
    }
  }
  return report;
}

VerificationReport verify_mixed(const SuiteOptions& opt) {
  auto const as = small_posets(opt.max_n, "a");
  std::size_t const inner = opt.max_n > 1 ? opt.max_n - 1 : 1;
  auto const bs = small_posets(inner, "b");
  auto const cs = small_posets(inner, "c");
  return run_grid(
      "mixed", as.size(), opt.jobs, [&](std::size_t i, VerificationReport& r) {
        Poset const& a = as[i];
        for (auto const& x : a.labels()) {
          for (auto const& y : a.labels()) {
            if (x == y) continue;
            for (auto const& b : bs) {
              for (auto const& c : cs) {
                MixedCompat const m = verify_mixed_compat(a, b, c, x, y);
                r.check(m.all(), [&] {
                  return Failure{"A=" + show(a) + " a=" + x + " b=" + y +
                                     " B=" + show(b) + " C=" + show(c),
                                 "up/bullet " + std::to_string(m.up_bullet) +
                                     " down/bullet " +
                                     std::to_string(m.down_bullet),
                                 "down/up " + std::to_string(m.down_up)};
                });
              }
            }
          }
        }
      });
}

VerificationReport verify_involution(const SuiteOptions& opt) {
  auto const as = small_posets(opt.max_n, "a");
  auto const bs = small_posets(opt.max_n, "b");
  return run_grid(
      "involution", as.size(), opt.jobs,
      [&](std::size_t i, VerificationReport& r) {
        Poset const& a = as[i];
        for (auto const& x : a.labels()) {
          for (auto const& b : bs) {
            r.check(involution_exchange(a, b, x), [&] {
              return Failure{"A=" + show(a) + " x=" + x + " B=" + show(b),
                             show(opposite(compose_set(Family::Down, a, x, b))),
                             show(compose_set(Family::Up, opposite(a), x,
                                              opposite(b)))};
            });
          }
        }
      });
}

VerificationReport verify_circ_bounds(const SuiteOptions& opt) {
  auto const as = small_posets(opt.max_n, "a");
  auto const bs = small_posets(opt.max_n, "b");
  return run_grid(
      "circ bounds", as.size(), opt.jobs,
      [&](std::size_t i, VerificationReport& r) {
        Poset const& a = as[i];
        for (auto const& x : a.labels()) {
          for (auto const& b : bs) {
            auto const site = InsertionSite::make(a, x, b);
            Poset const top = compose_bullet(site);
            FormalSum const sum = compose_circ(site);
            r.check(sum.coefficient(top) == 1, [&] {
              return Failure{"bullet is a term: A=" + show(a) + " x=" + x +
                                 " B=" + show(b),
                             sum.to_string(), show(top)};
            });
            for (auto const& [p, c] : sum.terms()) {
              bool const ok = c == 1 && is_finer(p, top) && in_omega(a, x, b, p);
              r.check(ok, [&] {
                return Failure{"term bounds: A=" + show(a) + " x=" + x +
                                   " B=" + show(b),
                               show(p), show(top)};
              });
            }
          }
        }
      });
}

VerificationReport verify_theta(const SuiteOptions& opt) {
  VerificationReport r;
  r.suite = "theta";
  ReportTimer timer(r);
  for (std::size_t n = 1; n <= opt.max_n; ++n) {
    std::vector<Poset> wn, nabla;
    all_posets(n, [&](const Poset& p) {
      if (is_wn(p)) wn.push_back(p);
      if (is_nabla_compatible(p)) nabla.push_back(p);
    });
    std::set<std::vector<Bits>> images;
    for (auto const& p : wn) {
      Poset const t = theta(p);
      Poset const ts = t.sorted();
      images.insert(ts.up_rows());
      bool ok = is_nabla_compatible(t) && ts.labels() == p.sorted().labels();
      Poset back;
      if (ok) {
        back = theta_inverse(t);
        ok = back == p;
      }
      r.check(ok, [&] {
        return Failure{"theta(" + show(p) + ")", show(t), show(back)};
      });
    }
    r.check(images.size() == wn.size() && wn.size() == nabla.size(), [&] {
      return Failure{"theta bijective on n=" + std::to_string(n),
                     std::to_string(images.size()) + " images of " +
                         std::to_string(wn.size()),
                     std::to_string(nabla.size()) + " nabla-compatible"};
    });
    for (auto const& q : nabla) {
      Poset const back = theta(theta_inverse(q));
      r.check(back == q, [&] {
        return Failure{"theta(theta_inverse(" + show(q) + "))", show(back),
                       show(q)};
      });
    }
  }
  return r;
}

VerificationReport verify_br_lemma(const SuiteOptions& opt) {
  auto const as = small_posets(opt.max_n, "a");
  auto const bs = small_posets(opt.max_n, "b");
  return run_grid(
      "br lemma", as.size(), opt.jobs, [&](std::size_t i, VerificationReport& r) {
        Poset const& a = as[i];
        for (auto const& b : bs) {
          Poset const c = down_tri(a, b);
          auto const fc = br_split(c);
          auto const fb = br_split(b);
          bool const b_ok = fc.factors[0] == disjoint_union(a, fb.factors[0]);
          bool const r_ok = fc.factors[1] == fb.factors[1];
          auto mins = extrema(c).first, bmins = extrema(b).first;
          std::sort(mins.begin(), mins.end());
          std::sort(bmins.begin(), bmins.end());
          r.check(b_ok && r_ok && mins == bmins, [&] {
            return Failure{"A=" + show(a) + " B=" + show(b),
                           "b=" + show(fc.factors[0]) + " r=" + show(fc.factors[1]),
                           "bB=" + show(fb.factors[0]) + " rB=" + show(fb.factors[1])};
          });
        }
      });
}

namespace {

std::set<CanonKey> keys_of(const std::vector<IsoClass>& classes) {
  std::set<CanonKey> out;
  for (auto const& c : classes) out.insert(c.key);
  return out;
}

std::set<CanonKey> filtered_keys(std::size_t max_n, ClassFilter f) {
  std::set<CanonKey> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto const& c : all_isoclasses(n, f)) out.insert(c.key);
  }
  return out;
}

// Counts every relation on n points that is a partial order, by brute force.
std::uint64_t naive_count(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
    std::vector<Bits> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = Bits{1} << i;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((s >> k) & 1U) up[pairs[k].first] |= Bits{1} << pairs[k].second;
    }
    if (Poset::is_partial_order(up)) ++count;
  }
  return count;
}

}  // namespace

VerificationReport verify_structure(const SuiteOptions& opt) {
  VerificationReport r;
  r.suite = "structure";
  ReportTimer timer(r);
  std::size_t const n = opt.max_n;
  for (auto [fam, filter] : {std::pair{ClosureFamily::WN, ClassFilter::WN},
                             std::pair{ClosureFamily::Nabla, ClassFilter::Nabla}}) {
    auto const got = keys_of(closure(fam, n));
    auto const want = filtered_keys(n, filter);
    r.check(got == want, [&] {
      return Failure{"closure " + std::string(to_string(fam)) + " n<=" +
                         std::to_string(n),
                     std::to_string(got.size()) + " classes",
                     std::to_string(want.size()) + " expected"};
    });
  }
  for (auto const& rel : verify_suboperad_relations()) {
    r.check(rel.holds, [&] { return Failure{rel.name, rel.lhs, rel.rhs}; });
  }
  std::size_t const full = std::min<std::size_t>(n, 4);
  auto const triple = keys_of(closure_triple(n));
  auto const connected_full = filtered_keys(full, ClassFilter::Connected);
  bool covers = std::includes(triple.begin(), triple.end(),
                              connected_full.begin(), connected_full.end());
  bool all_connected = true;
  for (auto const& k : triple) {
    if (!is_connected(poset_from_key(k))) all_connected = false;
  }
  r.check(covers && all_connected, [&] {
    return Failure{"triple closure n<=" + std::to_string(n),
                   std::to_string(triple.size()) + " classes",
                   "connected classes up to " + std::to_string(full)};
  });
  return r;
}

VerificationReport verify_counts(const SuiteOptions& opt) {
  VerificationReport r;
  r.suite = "counts";
  ReportTimer timer(r);
  std::size_t const naive_max = std::min<std::size_t>(opt.max_n, 4);
  for (std::size_t n = 1; n <= naive_max; ++n) {
    std::uint64_t const a = count_labeled(n), b = naive_count(n);
    std::uint64_t c = 0;
    all_posets(n, [&](const Poset&) { ++c; }, true);
    r.check(a == b && b == c, [&] {
      return Failure{"labeled posets n=" + std::to_string(n),
                     std::to_string(a) + " / reversed " + std::to_string(c),
                     std::to_string(b) + " naive"};
    });
  }
  std::size_t const lab_max = std::min<std::size_t>(opt.max_n, 5);
  for (std::size_t n = 1; n <= lab_max; ++n) {
    std::uint64_t const w = count_labeled(n, ClassFilter::WN);
    std::uint64_t const v = count_labeled(n, ClassFilter::Nabla);
    r.check(w == v, [&] {
      return Failure{"wn labeled = nabla labeled n=" + std::to_string(n),
                     std::to_string(w), std::to_string(v)};
    });
  }
  auto const table = count_table(opt.max_n);
  std::uint64_t factorial = 1;
  for (auto const& row : table.rows) {
    factorial *= row.n;
    std::uint64_t orbit_sum = 0;
    for (auto const& c : all_isoclasses(row.n)) {
      orbit_sum += factorial / c.automorphisms;
    }
    r.check(table.consistent() && orbit_sum == row.labeled &&
                row.wn_classes == row.nabla_classes,
            [&] {
              return Failure{"count table n=" + std::to_string(row.n),
                             std::to_string(orbit_sum),
                             std::to_string(row.labeled)};
            });
  }
  return r;
}

VerificationReport verify_hopf(const SuiteOptions& opt) {
  VerificationReport r;
  r.suite = "hopf";
  ReportTimer timer(r);
  for (auto const& part :
       {verify_products(opt.max_n), verify_coalgebra(opt.max_n),
        verify_bialgebra(opt.max_n), verify_infinitesimal(opt.max_n),
        verify_nap(opt.max_n)}) {
    r.merge(part);
  }
  return r;
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry = [] {
    std::vector<SuiteInfo> s;
    s.push_back({"axioms", "parallel and nested associativity, all families",
                 [](const SuiteOptions& o) {
                   VerificationReport r;
                   r.suite = "axioms";
                   ReportTimer timer(r);
                   for (Family f : {Family::Bullet, Family::Down, Family::Up,
                                    Family::Circ}) {
                     r.merge(verify_axioms(f, o));
                   }
                   return r;
                 }});
    s.push_back({"units", "unit laws, all families", [](const SuiteOptions& o) {
                   VerificationReport r;
                   r.suite = "units";
                   ReportTimer timer(r);
                   for (Family f : {Family::Bullet, Family::Down, Family::Up,
                                    Family::Circ}) {
                     r.merge(verify_units(f, o));
                   }
                   return r;
                 }});
    s.push_back({"quotient", "quotient exists iff the subset is convex",
                 verify_quotient_criterion});
    s.push_back({"phi", "Phi(A bullet B) = Phi(A) circ Phi(B)", verify_phi_suite});
    s.push_back({"mixed", "mixed compatibilities of bullet, down, up",
                 verify_mixed});
    s.push_back({"involution", "opposite preserves bullet, swaps down/up",
                 verify_involution});
    s.push_back({"circ", "circ terms lie between bullet and Omega",
                 verify_circ_bounds});
    s.push_back({"theta", "theta is a bijection WN -> nabla-compatible",
                 verify_theta});
    s.push_back({"br", "b/r split of A nabla B", verify_br_lemma});
    s.push_back({"structure", "suboperad closures and relations",
                 verify_structure});
    s.push_back({"counts", "enumeration counts and oracles", verify_counts});
    s.push_back({"hopf", "product and coproduct laws", verify_hopf});
    return s;
  }();
  return registry;
}

const SuiteInfo* find_suite(std::string_view name) {
  for (auto const& s : suite_registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace posetop
