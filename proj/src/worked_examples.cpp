#include "posetop/worked_examples.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "posetop/canon.hpp"
#include "posetop/enumeration.hpp"
#include "posetop/error.hpp"
#include "posetop/json_io.hpp"
#include "posetop/operad.hpp"
#include "posetop/structure.hpp"

namespace posetop {

namespace {

Poset P(std::string_view text) { return parse_poset(text); }

// Names for the classes on at most four elements, used to make the class
// lists readable.
const std::vector<std::pair<std::string, std::string>>& class_names() {
  static const std::vector<std::pair<std::string, std::string>> names = {
      {"point", "1"},
      {"two points", "1, 2"},
      {"edge", "1<2"},
      {"three points", "1, 2, 3"},
      {"edge + point", "1<2, 3"},
      {"fork up", "1<2, 1<3"},
      {"fork down", "1<3, 2<3"},
      {"chain3", "1<2<3"},
      {"four points", "1, 2, 3, 4"},
      {"edge + two points", "1<2, 3, 4"},
      {"edge + edge", "1<2, 3<4"},
      {"fork up + point", "1<2, 1<3, 4"},
      {"fork down + point", "1<3, 2<3, 4"},
      {"chain3 + point", "1<2<3, 4"},
      {"claw", "1<2, 1<3, 1<4"},
      {"opposite claw", "1<4, 2<4, 3<4"},
      {"y", "1<2<3, 2<4"},
      {"opposite y", "1<3, 2<3, 3<4"},
      {"hook", "1<2<4, 3<4"},
      {"opposite hook", "1<2, 1<3<4"},
      {"n", "1<3, 2<3, 2<4"},
      {"bowtie", "1<3, 1<4, 2<3, 2<4"},
      {"diamond", "1<2, 1<3, 2<4, 3<4"},
      {"chain4", "1<2<3<4"},
  };
  return names;
}

std::string class_name(const CanonKey& k) {
  static const std::map<CanonKey, std::string> by_key = [] {
    std::map<CanonKey, std::string> m;
    for (auto const& [name, text] : class_names()) m[canonical_key(P(text))] = name;
    return m;
  }();
  auto it = by_key.find(k);
  return it == by_key.end() ? k.hex() : it->second;
}

CanonKey named_key(const std::string& name) {
  for (auto const& [n, text] : class_names()) {
    if (n == name) return canonical_key(P(text));
  }
  throw std::logic_error("unknown class name " + name);
}

std::string op_symbol(Family f) {
  switch (f) {
    case Family::Circ: return "circ";
    case Family::Bullet: return "bullet";
    case Family::Down: return "down";
    case Family::Up: return "up";
  }
  return "?";
}

std::string expr(const Poset& a, Family f, std::string_view v, const Poset& b) {
  return a.to_string() + " " + op_symbol(f) + "_" + std::string(v) + " " +
         b.to_string();
}

FormalSum sum_of(std::initializer_list<std::string_view> terms) {
  FormalSum s;
  for (auto t : terms) s.add(P(t));
  return s;
}

struct Builder {
  std::vector<WorkedExample> out;

  void composition(const std::string& group, const std::string& name,
                   Family f, std::string_view a, std::string_view v,
                   std::string_view b, const FormalSum& expected) {
    Poset A = P(a), B = P(b);
    FormalSum got = compose(f, A, v, B);
    WorkedExample e;
    e.group = group;
    e.name = name;
    e.expression = expr(A, f, v, B);
    e.result = f == Family::Circ ? to_json(got) : to_json(got.terms().at(0).first);
    e.expected = expected.to_string();
    e.matches = got == expected;
    out.push_back(std::move(e));
  }

  // (A f1_a B) f2_b C against A f1_a (B f2_b C), with b in B.
  void mixed(const std::string& name, Family f1, Family f2, std::string_view a,
             std::string_view b, std::string_view lhs, std::string_view rhs) {
    Poset A = P(a), B = P(b), C = P("1<2");
    Poset left = compose_set(f2, compose_set(f1, A, "a", B), "b", C);
    Poset right = compose_set(f1, A, "a", compose_set(f2, B, "b", C));
    WorkedExample e;
    e.group = "mixed_counterexamples";
    e.name = name;
    e.expression = "(" + expr(A, f1, "a", B) + ") " + op_symbol(f2) + "_b " +
                   C.to_string() + " vs " + A.to_string() + " " +
                   op_symbol(f1) + "_a (" + expr(B, f2, "b", C) + ")";
    e.result = {{"left", to_json(left)},
                {"right", to_json(right)},
                {"left_class", class_name(canonical_key(left))},
                {"right_class", class_name(canonical_key(right))}};
    e.expected = std::string(lhs) + " != " + std::string(rhs);
    e.matches = left == P(lhs) && right == P(rhs) && !are_isomorphic(left, right);
    out.push_back(std::move(e));
  }

  void class_list(const std::string& group, ClassFilter filter,
                  const std::vector<std::vector<std::string>>& expected) {
    for (std::size_t n = 1; n <= expected.size(); ++n) {
      auto classes = all_isoclasses(n, filter);
      std::set<CanonKey> got, want;
      nlohmann::json list = nlohmann::json::array();
      for (auto const& c : classes) {
        got.insert(c.key);
        list.push_back({{"name", class_name(c.key)},
                        {"poset", to_json(c.representative)}});
      }
      std::string rendered;
      for (auto const& name : expected[n - 1]) {
        want.insert(named_key(name));
        rendered += (rendered.empty() ? "" : ", ") + name;
      }
      WorkedExample e;
      e.group = group;
      e.name = "size " + std::to_string(n);
      e.expression = std::string(to_string(filter)) + " classes on " +
                     std::to_string(n) + " elements";
      e.result = {{"count", classes.size()}, {"classes", list}};
      e.expected = rendered;
      e.matches = got == want && want.size() == expected[n - 1].size();
      out.push_back(std::move(e));
    }
  }

  // `reference`: a value stated elsewhere that the recursion does not give;
  // kept in the output so the disagreement stays visible.
  void theta_case(const std::string& name, std::string_view input,
                  std::string_view expected, std::string_view reference = {}) {
    Poset in = P(input);
    Poset got = theta(in);
    WorkedExample e;
    e.group = "theta";
    e.name = name;
    e.expression = "theta " + in.to_string();
    e.result = {{"poset", to_json(got)},
                {"class", class_name(canonical_key(got))}};
    if (!reference.empty()) {
      Poset ref = P(reference);
      e.result["reference_value"] = to_json(ref);
      e.result["reference_class"] = class_name(canonical_key(ref));
      e.result["agrees_with_reference"] = got == ref;
    }
    e.expected = P(expected).to_string();
    e.matches = got == P(expected) && theta_inverse(got) == in;
    out.push_back(std::move(e));
  }
};

}  // namespace

std::vector<WorkedExample> worked_examples() {
  Builder b;
  const auto C = Family::Circ, B = Family::Bullet, D = Family::Down,
             U = Family::Up;

  b.composition("circ", "edge at a", C, "a<b", "a", "1<2",
                sum_of({"1<2, 1<b", "1<2<b"}));
  b.composition("circ", "chain at b", C, "a<b<c", "b", "1<2",
                sum_of({"a<1<2<c", "a<1<2, 1<c", "a<2, 1<2, 2<c",
                        "a<2, a<c, 1<2, 1<c", "a<2, 1<2, 1<c"}));

  b.composition("bullet", "chain at b, edge", B, "a<b<c", "b", "1<2",
                sum_of({"a<1<2<c"}));
  b.composition("bullet", "chain at b, two points", B, "a<b<c", "b", "1, 2",
                sum_of({"a<1<c, a<2<c"}));

  b.composition("trio", "bullet", B, "a<b<c", "b", "1<2",
                sum_of({"a<1<2<c"}));
  b.composition("trio", "down", D, "a<b<c", "b", "1<2",
                sum_of({"a<1<2, 1<c"}));
  b.composition("trio", "up", U, "a<b<c", "b", "1<2",
                sum_of({"a<2, 1<2, 2<c"}));

  const std::string g = "generation";
  b.composition(g, "01 chain3", B, "a<1", "1", "b<c", sum_of({"a<b<c"}));
  b.composition(g, "02 fork up", D, "1<b", "1", "a<c", sum_of({"a<c, a<b"}));
  b.composition(g, "03 fork down", U, "b<1", "1", "c<a", sum_of({"c<a, b<a"}));
  b.composition(g, "04 chain4", B, "1<c<d", "1", "a<b", sum_of({"a<b<c<d"}));
  b.composition(g, "05 y", D, "a<1<c", "1", "b<d", sum_of({"a<b<d, b<c"}));
  b.composition(g, "06 opposite hook", D, "1<b<c", "1", "a<d",
                sum_of({"a<d, a<b<c"}));
  b.composition(g, "07 claw", D, "1<c, 1<b", "1", "a<d",
                sum_of({"a<d, a<c, a<b"}));
  b.composition(g, "08 opposite y", U, "a<1<d", "1", "b<c",
                sum_of({"b<c<d, a<c"}));
  b.composition(g, "09 hook", U, "a<b<1", "1", "c<d", sum_of({"c<d, a<b<d"}));
  b.composition(g, "10 opposite claw", U, "a<1, b<1", "1", "c<d",
                sum_of({"c<d, a<d, b<d"}));
  b.composition(g, "11 n", U, "a<1, a<b", "1", "d<c",
                sum_of({"d<c, a<c, a<b"}));
  b.composition(g, "12 bowtie", D, "1<b", "1", "a<c, d<c",
                sum_of({"a<c, d<c, a<b, d<b"}));
  b.composition(g, "13 diamond", B, "a<1", "1", "c<b, d<b",
                sum_of({"a<c, a<d, c<b, d<b"}));

  b.mixed("up then bullet", U, B, "u<a", "v<b", "u<1, v<1, 1<2",
          "u<2, v<1<2");
  b.mixed("down then bullet", D, B, "a<u", "b<v", "1<2<u, 2<v",
          "1<2<v, 1<u");
  b.mixed("bullet then up", B, U, "u<a", "v<b", "u<v<2, 1<2",
          "u<v<2, u<1<2");
  b.mixed("down then up", D, U, "a<u", "v<b", "v<u, v<2, 1<2",
          "v<u, 1<u, v<2, 1<2");
  b.mixed("bullet then down", B, D, "a<u", "b<v", "1<2, 1<v<u",
          "1<2<u, 1<v<u");
  b.mixed("up then down", U, D, "u<a", "b<v", "u<v, 1<v, 1<2",
          "u<2, u<v, 1<2, 1<v");

  const std::vector<std::string> disconnected4 = {
      "four points",     "edge + two points", "edge + edge",
      "fork up + point", "fork down + point", "chain3 + point"};
  const std::vector<std::string> common4 = {
      "claw", "opposite claw", "y", "opposite y", "opposite hook",
      "bowtie", "diamond", "chain4"};
  auto list4 = [&](const std::string& extra) {
    std::vector<std::string> v = disconnected4;
    v.insert(v.end(), common4.begin(), common4.end());
    v.push_back(extra);
    return v;
  };
  const std::vector<std::vector<std::string>> small = {
      {"point"},
      {"two points", "edge"},
      {"three points", "edge + point", "fork up", "fork down", "chain3"}};
  auto wn = small;
  wn.push_back(list4("hook"));
  auto nabla = small;
  nabla.push_back(list4("n"));
  b.class_list("wn_list", ClassFilter::WN, wn);
  b.class_list("nabla_list", ClassFilter::Nabla, nabla);

  b.theta_case("chain3", "1<2<3", "3<2<1");
  b.theta_case("hook", "1<2<4, 3<4", "4<2<1, 4<3", "1<2, 1<4, 3<4");
  b.theta_case("opposite hook", "1<2, 1<3<4", "2<1, 4<1, 4<3");
  b.theta_case("edge + point", "1<2, 3", "2<1, 3");

  return b.out;
}

nlohmann::json golden_document(const std::vector<WorkedExample>& all,
                               const std::string& group) {
  nlohmann::json doc = nlohmann::json::object();
  for (auto const& e : all) {
    if (e.group != group) continue;
    doc[e.name] = {{"expression", e.expression}, {"result", e.result}};
  }
  return doc;
}

std::string_view to_string(GoldenOutcome::Status s) noexcept {
  switch (s) {
    case GoldenOutcome::Status::Match: return "match";
    case GoldenOutcome::Status::Mismatch: return "mismatch";
    case GoldenOutcome::Status::Missing: return "missing";
    case GoldenOutcome::Status::Written: return "written";
  }
  return "?";
}

std::vector<GoldenOutcome> check_golden(const std::vector<WorkedExample>& all,
                                        const std::string& dir, bool update) {
  std::vector<std::string> groups;
  for (auto const& e : all) {
    if (std::find(groups.begin(), groups.end(), e.group) == groups.end()) {
      groups.push_back(e.group);
    }
  }
  std::vector<GoldenOutcome> outcomes;
  for (auto const& group : groups) {
    GoldenOutcome o;
    o.group = group;
    nlohmann::json doc = golden_document(all, group);
    auto path = std::filesystem::path(dir) / (group + ".json");
    if (update) {
      std::filesystem::create_directories(dir);
      std::ofstream(path) << doc.dump(2) << '\n';
      o.status = GoldenOutcome::Status::Written;
    } else if (!std::filesystem::exists(path)) {
      o.status = GoldenOutcome::Status::Missing;
    } else {
      nlohmann::json stored;
      try {
        std::ifstream(path) >> stored;
      } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + ex.what());
      }
      for (auto const& [name, value] : doc.items()) {
        if (!stored.contains(name) || stored[name] != value) {
          o.differing.push_back(name);
        }
      }
      for (auto const& [name, value] : stored.items()) {
        if (!doc.contains(name)) o.differing.push_back(name);
      }
      o.status = o.differing.empty() ? GoldenOutcome::Status::Match
                                     : GoldenOutcome::Status::Mismatch;
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

}  // namespace posetop
