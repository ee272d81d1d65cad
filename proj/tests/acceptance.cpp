// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "posetop/canon.hpp"
#include "posetop/enumeration.hpp"
#include "posetop/hopf.hpp"
#include "posetop/structure.hpp"
#include "posetop/suites.hpp"
#include "posetop/worked_examples.hpp"

using namespace posetop;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    notes << " [" << what << "]";
  }
  void report(const VerificationReport& r) {
    notes << " " << r.suite << ":" << r.cases << "/" << r.failure_count;
    if (!r.ok()) {
      pass = false;
      for (auto const& f : r.failures) {
        std::cerr << r.suite << " failure: " << f.inputs << "\n  lhs " << f.lhs
                  << "\n  rhs " << f.rhs << "\n";
      }
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title,
               const std::function<void(Outcome&)>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.notes << " [exception: " << e.what() << "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", secs);
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  "
            << title << " (" << buf << ";" << o.notes.str() << ")" << std::endl;
}

std::set<CanonKey> keys_upto(std::size_t n, ClassFilter f) {
  std::set<CanonKey> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto const& c : all_isoclasses(k, f)) out.insert(c.key);
  return out;
}

std::set<CanonKey> keys_of(const std::vector<IsoClass>& cs, std::size_t only_n = 0) {
  std::set<CanonKey> out;
  for (auto const& c : cs)
    if (only_n == 0 || c.key.n == only_n) out.insert(c.key);
  return out;
}

}  // namespace

int main() {
  SuiteOptions opt;
  opt.jobs = 0;
  auto const examples = worked_examples();

  criterion(1, "worked examples reproduce exactly", [&](Outcome& o) {
    std::size_t n = 0;
    for (auto const& e : examples) {
      if (e.group == "wn_list" || e.group == "nabla_list" || e.group == "theta") continue;
      ++n;
      o.require(e.matches, e.group + "/" + e.name);
    }
    for (auto const& g : check_golden(examples, POSETOP_GOLDEN_DIR, false)) {
      o.require(g.status == GoldenOutcome::Status::Match, "golden " + g.group);
    }
    o.notes << " " << n << " examples";
  });

  criterion(2, "operad axioms, all four families, |A|,|B|,|C| <= 3", [&](Outcome& o) {
    opt.max_n = 3;
    for (Family f : {Family::Bullet, Family::Down, Family::Up, Family::Circ}) {
      o.report(verify_axioms(f, opt));
    }
  });

  criterion(3, "quotient exists iff convex, n <= 4", [&](Outcome& o) {
    opt.max_n = 4;
    o.report(verify_quotient_criterion(opt));
  });

  criterion(4, "Phi(A bullet B) = Phi(A) circ Phi(B), inverse round trip", [&](Outcome& o) {
    opt.max_n = 3;
    o.report(verify_phi_suite(opt));
  });

  criterion(5, "mixed compatibilities, |A| <= 3, |B|,|C| <= 2", [&](Outcome& o) {
    opt.max_n = 3;
    o.report(verify_mixed(opt));
  });

  criterion(6, "product, coproduct and pairing laws on classes, <= 4 elements",
            [&](Outcome& o) {
              o.report(verify_products(4));
              o.report(verify_coalgebra(4));
              o.report(verify_bialgebra(4));
              o.report(verify_infinitesimal(4));
              o.report(verify_nap(4));
            });

  criterion(7, "counts, class lists and pinned sequences", [&](Outcome& o) {
    const std::uint64_t connected[] = {1, 1, 3, 10};
    const std::uint64_t labeled[] = {1, 3, 19, 219};
    for (std::size_t n = 1; n <= 4; ++n) {
      std::string tag = " n=" + std::to_string(n);
      o.require(all_isoclasses(n, ClassFilter::Connected).size() == connected[n - 1],
                "connected" + tag);
      o.require(oracle::all_orders(n).size() == labeled[n - 1], "naive labeled" + tag);
      o.require(count_labeled(n) == labeled[n - 1], "labeled" + tag);
    }
    for (auto const& e : examples) {
      if (e.group == "wn_list" || e.group == "nabla_list")
        o.require(e.matches, e.group + "/" + e.name);
    }
    for (std::size_t n = 1; n <= 5; ++n) {
      o.require(count_labeled(n, ClassFilter::WN) == count_labeled(n, ClassFilter::Nabla),
                "wn = nabla labeled n=" + std::to_string(n));
    }
    auto a048172 = read_fixture("A048172.txt");
    auto a003430 = read_fixture("A003430.txt");
    CountTable t = count_table(kEnumerationCap);
    o.require(t.consistent(), "table consistency");
    for (auto const& r : t.rows) {
      o.require(r.n <= a048172.size() && r.wn_labeled == a048172[r.n - 1],
                "A048172 n=" + std::to_string(r.n));
      o.require(r.n <= a003430.size() && r.wn_classes == a003430[r.n - 1],
                "A003430 n=" + std::to_string(r.n));
    }
    o.notes << " n<=" << t.rows.size();
  });

  criterion(8, "suboperad closures and presentation relations", [&](Outcome& o) {
    o.require(keys_of(closure_wn(5)) == keys_upto(5, ClassFilter::WN), "closure_wn(5)");
    o.require(keys_of(closure_nabla(5)) == keys_upto(5, ClassFilter::Nabla),
              "closure_nabla(5)");
    for (auto const& c : verify_suboperad_relations()) o.require(c.holds, c.name);
    auto conn4 = keys_of(all_isoclasses(4, ClassFilter::Connected));
    auto t4 = keys_of(closure_triple(4), 4);
    for (auto const& k : conn4) o.require(t4.count(k) == 1, "triple misses " + k.hex());
    auto conn6 = keys_of(all_isoclasses(6, ClassFilter::Connected));
    auto t6 = keys_of(closure_triple(6), 6);
    bool subset = std::includes(conn6.begin(), conn6.end(), t6.begin(), t6.end());
    o.require(subset && t6.size() < conn6.size(), "triple(6) proper subset");
    o.notes << " triple reaches " << t6.size() << " of " << conn6.size()
            << " connected 6-classes";
  });

  criterion(9, "theta bijection n <= 5 and the b/r identities", [&](Outcome& o) {
    opt.max_n = 5;
    o.report(verify_theta(opt));
    opt.max_n = 3;
    o.report(verify_br_lemma(opt));
  });

  criterion(10, "opposite preserves bullet and swaps down/up, n <= 3", [&](Outcome& o) {
    opt.max_n = 3;
    o.report(verify_involution(opt));
  });

  return failures == 0 ? 0 : 1;
}
