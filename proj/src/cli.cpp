#include "posetop/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "posetop/canon.hpp"
#include "posetop/enumeration.hpp"
#include "posetop/error.hpp"
#include "posetop/hopf.hpp"
#include "posetop/json_io.hpp"
#include "posetop/linear_species.hpp"
#include "posetop/operad.hpp"
#include "posetop/structure.hpp"
#include "posetop/suites.hpp"
#include "posetop/worked_examples.hpp"

#ifndef POSETOP_GOLDEN_DIR
#define POSETOP_GOLDEN_DIR "tests/golden"
#endif

namespace posetop::cli {

namespace {

using Table = std::vector<std::vector<std::string>>;

void print_table(std::ostream& out, const Table& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width;
  for (auto const& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      width[i] = std::max(width[i], r[i].size());
    }
  }
  for (auto const& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

struct Context {
  std::string format = "table";
  std::size_t jobs = 1;
  std::ostream& out;
  bool json() const { return format == "json"; }
  void emit(const Json& doc) const { out << doc.dump(2) << '\n'; }
};

// A file path, or inline JSON / "{a<b, c}" when the argument starts with a
// bracket.
Json load_document(const std::string& arg) {
  std::error_code ec;
  if (arg.empty() || std::filesystem::is_regular_file(arg, ec)) return read_json_file(arg);
  if (arg.front() == '{' || arg.front() == '[') {
    try {
      return Json::parse(arg);
    } catch (const Json::exception&) {
      return to_json(parse_poset(arg));
    }
  }
  // bare text like "a<b, c"; a lone word is a one-element poset
  bool word = std::all_of(arg.begin(), arg.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
  if (word || arg.find('<') != std::string::npos || arg.find(',') != std::string::npos)
    return to_json(parse_poset(arg));
  return read_json_file(arg);
}

Poset load_poset(const std::string& arg) {
  return poset_from_json(load_document(arg));
}

FormalSum load_sum(const std::string& arg) {
  return sum_from_json(load_document(arg));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit_sum(const Context& ctx, const FormalSum& s) {
  if (ctx.json()) return ctx.emit(to_json(s));
  Table t{{"coefficient", "poset"}};
  for (auto const& [p, c] : s.terms()) t.push_back({std::to_string(c), p.to_string()});
  print_table(ctx.out, t);
}

void emit_poset(const Context& ctx, const Poset& p) {
  if (ctx.json()) return ctx.emit(to_json(p));
  ctx.out << p.sorted().to_string() << '\n';
}

std::string class_text(const CanonKey& k) {
  return k == kUnitKey ? "1" : poset_from_key(k).to_string();
}

void emit_classes(const Context& ctx, const std::vector<IsoClass>& cs) {
  if (ctx.json()) {
    Json a = Json::array();
    for (auto const& c : cs) a.push_back(to_json(c));
    return ctx.emit(a);
  }
  Table t{{"size", "key", "automorphisms", "poset"}};
  for (auto const& c : cs) {
    t.push_back({std::to_string(c.key.n), c.key.hex(),
                 std::to_string(c.automorphisms), c.representative.to_string()});
  }
  print_table(ctx.out, t);
}

bool emit_reports(const Context& ctx,
                  const std::vector<VerificationReport>& reports) {
  bool ok = true;
  for (auto const& r : reports) ok = ok && r.ok();
  if (ctx.json()) {
    Json a = Json::array();
    for (auto const& r : reports) a.push_back(to_json(r));
    ctx.emit(Json{{"ok", ok}, {"reports", a}});
    return ok;
  }
  Table t{{"suite", "cases", "failures", "seconds"}};
  for (auto const& r : reports) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds;
    t.push_back({r.suite, std::to_string(r.cases),
                 std::to_string(r.failure_count), secs.str()});
  }
  print_table(ctx.out, t);
  for (auto const& r : reports) {
    for (auto const& f : r.failures) {
      ctx.out << r.suite << " FAILED " << f.inputs << "\n  lhs: " << f.lhs
              << "\n  rhs: " << f.rhs << '\n';
    }
  }
  return ok;
}

Json factorization_json(const Factorization& f) {
  Json factors = Json::array();
  for (auto const& p : f.factors) factors.push_back(to_json(p));
  return {{"kind", f.kind == Factorization::Kind::Ordinal ? "ordinal" : "br"},
          {"factors", factors}};
}

const std::vector<std::string> kFamilies = {"circ", "bullet", "down", "up"};
const std::vector<std::string> kProducts = {"m", "down", "star", "uptri",
                                            "downtri"};
const std::vector<std::string> kCoproducts = {"delta", "dstar"};
const std::vector<std::string> kHopfLaws = {
    "products", "coalgebra", "bialgebra", "infinitesimal", "nap", "all"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Operads, Hopf algebras and enumeration of finite posets",
               "posetop"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{"table", 1, out};
  app.add_option("--format", ctx.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", ctx.jobs, "Worker threads for verification (0: all)");

  std::function<int()> action;

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "Partial composition");
  std::string family, vertex, outer_arg, inner_arg;
  compose_cmd->add_option("--family", family)->required()->check(
      CLI::IsMember(kFamilies));
  compose_cmd->add_option("--at", vertex, "Insertion vertex of the outer poset")
      ->required();
  compose_cmd->add_option("outer", outer_arg)->required();
  compose_cmd->add_option("inner", inner_arg)->required();
  compose_cmd->callback([&] {
    action = [&] {
      Family f = parse_family(family);
      Poset a = load_poset(outer_arg), b = load_poset(inner_arg);
      if (f == Family::Circ) {
        emit_sum(ctx, compose(f, a, vertex, b));
      } else {
        emit_poset(ctx, compose_set(f, a, vertex, b));
      }
      return kExitOk;
    };
  });

  // phi
  auto* phi_cmd = app.add_subcommand("phi", "Sum of all refinements");
  bool phi_inverse_flag = false;
  std::string phi_arg;
  phi_cmd->add_flag("--inverse", phi_inverse_flag, "Apply the inverse map");
  phi_cmd->add_option("input", phi_arg, "Poset or formal sum")->required();
  phi_cmd->callback([&] {
    action = [&] {
      FormalSum x = load_sum(phi_arg);
      emit_sum(ctx, phi_inverse_flag ? phi_inverse(x) : phi(x));
      return kExitOk;
    };
  });

  // hopf
  auto* hopf_cmd = app.add_subcommand("hopf", "Products and coproducts of classes");
  hopf_cmd->require_subcommand(1);
  auto* prod_cmd = hopf_cmd->add_subcommand("prod", "Product of two classes");
  std::string op_name, x_arg, y_arg;
  prod_cmd->add_option("--op", op_name)->required()->check(CLI::IsMember(kProducts));
  prod_cmd->add_option("x", x_arg)->required();
  prod_cmd->add_option("y", y_arg)->required();
  auto emit_class_sum = [&](const ClassSum& s) {
    if (ctx.json()) return ctx.emit(to_json(s));
    Table t{{"coefficient", "class"}};
    for (auto const& [k, c] : s) t.push_back({std::to_string(c), class_text(k)});
    print_table(ctx.out, t);
  };
  prod_cmd->callback([&] {
    action = [&] {
      emit_class_sum(product(parse_product(op_name), class_of(load_poset(x_arg)),
                             class_of(load_poset(y_arg))));
      return kExitOk;
    };
  });
  auto* coprod_cmd = hopf_cmd->add_subcommand("coprod", "Coproduct of a class");
  coprod_cmd->add_option("--op", op_name)->required()->check(
      CLI::IsMember(kCoproducts));
  coprod_cmd->add_option("x", x_arg)->required();
  coprod_cmd->callback([&] {
    action = [&] {
      TensorSum s = coproduct(parse_coproduct(op_name), class_of(load_poset(x_arg)));
      if (ctx.json()) {
        ctx.emit(to_json(s));
      } else {
        Table t{{"coefficient", "left", "right"}};
        for (auto const& [k, c] : s) {
          t.push_back({std::to_string(c), class_text(k.first), class_text(k.second)});
        }
        print_table(ctx.out, t);
      }
      return kExitOk;
    };
  });
  auto* hverify_cmd = hopf_cmd->add_subcommand("verify", "Check the Hopf laws");
  std::size_t hopf_max_n = 4;
  std::string hopf_law = "all";
  hverify_cmd->add_option("--max-n", hopf_max_n, "Largest total size")
      ->check(CLI::Range(1, 8));
  hverify_cmd->add_option("--law", hopf_law)->check(CLI::IsMember(kHopfLaws));
  hverify_cmd->callback([&] {
    action = [&] {
      std::vector<VerificationReport> rs;
      auto want = [&](const char* l) { return hopf_law == "all" || hopf_law == l; };
      if (want("products")) rs.push_back(verify_products(hopf_max_n));
      if (want("coalgebra")) rs.push_back(verify_coalgebra(hopf_max_n));
      if (want("bialgebra")) rs.push_back(verify_bialgebra(hopf_max_n));
      if (want("infinitesimal")) rs.push_back(verify_infinitesimal(hopf_max_n));
      if (want("nap")) rs.push_back(verify_nap(hopf_max_n));
      return emit_reports(ctx, rs) ? kExitOk : kExitFailure;
    };
  });

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Canonical class and properties");
  std::string poset_arg;
  classify_cmd->add_option("poset", poset_arg)->required();
  classify_cmd->callback([&] {
    action = [&] {
      Poset p = load_poset(poset_arg);
      IsoClass c = canonicalize(p);
      bool wn = is_wn(p);
      Json doc = to_json(c);
      doc["connected"] = is_connected(p);
      doc["components"] = connected_components(p).size();
      doc["wn"] = wn;
      doc["nabla_compatible"] = is_nabla_compatible(p);
      if (wn && !p.empty()) doc["wn_factors"] = factorization_json(wn_factorize(p));
      if (!p.empty()) {
        Factorization br = br_split(p);
        doc["br"] = {{"b", to_json(br.factors[0])}, {"r", to_json(br.factors[1])}};
      }
      if (ctx.json()) {
        ctx.emit(doc);
      } else {
        print_table(ctx.out,
                    {{"key", c.key.hex()},
                     {"size", std::to_string(p.size())},
                     {"automorphisms", std::to_string(c.automorphisms)},
                     {"representative", c.representative.to_string()},
                     {"connected", yes_no(doc["connected"])},
                     {"components", std::to_string(doc["components"].get<int>())},
                     {"wn", yes_no(wn)},
                     {"nabla-compatible", yes_no(doc["nabla_compatible"])}});
      }
      return kExitOk;
    };
  });

  // theta
  auto* theta_cmd = app.add_subcommand("theta", "Bijection from WN to nabla-compatible");
  bool theta_inverse_flag = false;
  theta_cmd->add_flag("--inverse", theta_inverse_flag);
  theta_cmd->add_option("poset", poset_arg)->required();
  theta_cmd->callback([&] {
    action = [&] {
      Poset p = load_poset(poset_arg);
      emit_poset(ctx, theta_inverse_flag ? theta_inverse(p) : theta(p));
      return kExitOk;
    };
  });

  // closure
  auto* closure_cmd = app.add_subcommand("closure", "Suboperad generated in arity 2");
  std::string closure_family;
  std::size_t closure_n = 4;
  closure_cmd->add_option("--family", closure_family)->required()->check(
      CLI::IsMember({"wn", "nabla", "triple"}));
  closure_cmd->add_option("--max-n", closure_n)->check(CLI::Range(1, 7));
  closure_cmd->callback([&] {
    action = [&] {
      emit_classes(ctx, closure(parse_closure_family(closure_family), closure_n));
      return kExitOk;
    };
  });

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "Posets or classes on n elements");
  std::size_t enum_n = 3;
  std::string filter = "none";
  bool count_only = false, iso = false, connected_only = false;
  enum_cmd->add_option("--n", enum_n)->required()->check(
      CLI::Range(std::size_t{0}, kEnumerationCap));
  enum_cmd->add_option("--filter", filter)->check(
      CLI::IsMember({"none", "connected", "wn", "nabla"}));
  enum_cmd->add_flag("--iso", iso, "Isomorphism classes instead of labeled posets");
  enum_cmd->add_flag("--connected", connected_only, "Same as --filter connected");
  enum_cmd->add_flag("--count", count_only, "Only print the counts");
  enum_cmd->callback([&] {
    if (connected_only && filter != "none" && filter != "connected") {
      throw CLI::ValidationError("--connected", "conflicts with --filter");
    }
    if (connected_only) filter = "connected";
    action = [&] {
      ClassFilter f = parse_filter(filter);
      if (count_only) {
        std::uint64_t classes = all_isoclasses(enum_n, f).size();
        std::uint64_t labeled = count_labeled(enum_n, f);
        if (ctx.json()) {
          ctx.out << Json{{"n", enum_n}, {"filter", filter}, {"classes", classes},
                          {"labeled", labeled}}.dump()
                  << '\n';
        } else {
          print_table(ctx.out, {{"n", "filter", "classes", "labeled"},
                                {std::to_string(enum_n), filter,
                                 std::to_string(classes), std::to_string(labeled)}});
        }
      } else if (iso) {
        auto classes = all_isoclasses(enum_n, f);
        if (ctx.json()) {
          for (auto const& c : classes) ctx.out << to_json(c).dump() << '\n';
        } else {
          emit_classes(ctx, classes);
        }
      } else {
        // One line per labeled poset in either format.
        all_posets(enum_n, [&](const Poset& p) {
          if (!passes(f, p)) return;
          ctx.out << (ctx.json() ? to_json(p).dump() : p.to_string()) << '\n';
        });
      }
      return kExitOk;
    };
  });

  // sequences
  auto* seq_cmd = app.add_subcommand("sequences", "Count table for n = 1..max-n");
  std::size_t seq_n = 6;
  std::string seq_style = "aligned";
  seq_cmd->add_option("--max-n", seq_n)->check(
      CLI::Range(std::size_t{1}, kEnumerationCap));
  seq_cmd->add_option("--table", seq_style, "Table style for --format table")
      ->check(CLI::IsMember({"aligned", "md", "csv"}));
  seq_cmd->callback([&] {
    action = [&] {
      CountTable t = count_table(seq_n);
      if (ctx.json()) {
        Json rows = Json::array();
        for (auto const& r : t.rows) {
          rows.push_back({{"n", r.n},
                          {"labeled", r.labeled},
                          {"classes", r.classes},
                          {"connected_classes", r.connected_classes},
                          {"wn_labeled", r.wn_labeled},
                          {"wn_classes", r.wn_classes},
                          {"nabla_labeled", r.nabla_labeled},
                          {"nabla_classes", r.nabla_classes}});
        }
        ctx.emit({{"rows", rows}, {"consistent", t.consistent()}});
      } else {
        Table tab{{"n", "labeled", "classes", "connected", "wn_labeled",
                   "wn_classes", "nabla_labeled", "nabla_classes"}};
        for (auto const& r : t.rows) {
          tab.push_back({std::to_string(r.n), std::to_string(r.labeled),
                         std::to_string(r.classes),
                         std::to_string(r.connected_classes),
                         std::to_string(r.wn_labeled), std::to_string(r.wn_classes),
                         std::to_string(r.nabla_labeled),
                         std::to_string(r.nabla_classes)});
        }
        if (seq_style == "aligned") {
          print_table(ctx.out, tab);
        } else {
          const char* sep = seq_style == "md" ? " | " : ",";
          for (std::size_t i = 0; i < tab.size(); ++i) {
            std::string line = seq_style == "md" ? "| " : "";
            for (std::size_t j = 0; j < tab[i].size(); ++j) {
              line += (j ? sep : "") + tab[i][j];
            }
            if (seq_style == "md") line += " |";
            ctx.out << line << '\n';
            if (i == 0 && seq_style == "md") {
              std::string rule = "|";
              for (std::size_t j = 0; j < tab[i].size(); ++j) rule += "---|";
              ctx.out << rule << '\n';
            }
          }
        }
      }
      return t.consistent() ? kExitOk : kExitFailure;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run exhaustive verification suites");
  std::string suite_pos, suite_law, verify_family;
  std::size_t verify_n = 3;
  bool verify_all = false;
  std::vector<std::string> suite_names;
  for (auto const& s : suite_registry()) suite_names.push_back(s.name);
  verify_cmd->add_option("suite", suite_pos)->check(CLI::IsMember(suite_names));
  verify_cmd->add_option("--law", suite_law)->check(CLI::IsMember(suite_names));
  verify_cmd->add_option("--family", verify_family, "Restrict axioms/units to one family")
      ->check(CLI::IsMember(kFamilies));
  verify_cmd->add_option("--max-n", verify_n)->check(CLI::Range(1, 6));
  verify_cmd->add_flag("--all", verify_all, "Run every suite");
  verify_cmd->callback([&] {
    if (!suite_pos.empty() && !suite_law.empty() && suite_pos != suite_law) {
      throw CLI::ValidationError("suite", "positional suite and --law disagree");
    }
    std::string name = suite_pos.empty() ? suite_law : suite_pos;
    if (name.empty() == !verify_all) {
      throw CLI::ValidationError("suite", "name one suite or pass --all");
    }
    if (!verify_family.empty() && name != "axioms" && name != "units") {
      throw CLI::ValidationError("--family", "only applies to axioms and units");
    }
    action = [&, name] {
      SuiteOptions opt{verify_n, ctx.jobs};
      std::vector<VerificationReport> rs;
      if (verify_all) {
        for (auto const& s : suite_registry()) rs.push_back(s.run(opt));
      } else if (!verify_family.empty()) {
        Family f = parse_family(verify_family);
        rs.push_back(name == "axioms" ? verify_axioms(f, opt) : verify_units(f, opt));
      } else {
        rs.push_back(find_suite(name)->run(opt));
      }
      return emit_reports(ctx, rs) ? kExitOk : kExitFailure;
    };
  });

  // paper-examples
  auto* ex_cmd = app.add_subcommand(
      "paper-examples", "Replay the worked examples and diff against golden files");
  std::string golden_dir = POSETOP_GOLDEN_DIR;
  bool update = false;
  ex_cmd->add_option("--golden-dir", golden_dir);
  ex_cmd->add_flag("--update", update, "Rewrite the golden files");
  ex_cmd->callback([&] {
    action = [&] {
      auto examples = worked_examples();
      auto outcomes = check_golden(examples, golden_dir, update);
      bool ok = true;
      for (auto const& e : examples) ok = ok && e.matches;
      for (auto const& o : outcomes) {
        ok = ok && (o.status == GoldenOutcome::Status::Match ||
                    o.status == GoldenOutcome::Status::Written);
      }
      if (ctx.json()) {
        Json ex = Json::array(), gold = Json::array();
        for (auto const& e : examples) {
          ex.push_back({{"group", e.group},
                        {"name", e.name},
                        {"expression", e.expression},
                        {"expected", e.expected},
                        {"matches", e.matches},
                        {"result", e.result}});
        }
        for (auto const& o : outcomes) {
          gold.push_back({{"group", o.group},
                          {"status", to_string(o.status)},
                          {"differing", o.differing}});
        }
        ctx.emit({{"ok", ok}, {"examples", ex}, {"golden", gold}});
      } else {
        Table t{{"group", "example", "expected", "status"}};
        for (auto const& e : examples) {
          t.push_back({e.group, e.name, e.expected, e.matches ? "ok" : "MISMATCH"});
        }
        print_table(ctx.out, t);
        ctx.out << '\n';
        Table g{{"golden file", "status", "differing"}};
        for (auto const& o : outcomes) {
          std::string diff;
          for (auto const& d : o.differing) diff += (diff.empty() ? "" : ", ") + d;
          g.push_back({o.group + ".json", std::string(to_string(o.status)), diff});
        }
        print_table(ctx.out, g);
      }
      return ok ? kExitOk : kExitFailure;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    if (ctx.json()) {
      err << Json{{"error", to_string(e.code())}, {"message", e.what()}}.dump()
          << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return kExitFailure;
  }
}

}  // namespace posetop::cli
