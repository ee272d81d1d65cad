#include "posetop/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "posetop/error.hpp"

namespace posetop {

Json to_json(const Poset& p) {
  std::vector<Label> elements = p.labels();
  std::sort(elements.begin(), elements.end());
  auto covers = hasse_covers(p);
  std::sort(covers.begin(), covers.end());
  Json rel = Json::array();
  for (auto const& [u, v] : covers) rel.push_back({u, v});
  return Json{{"elements", elements}, {"relations", rel}};
}

Poset poset_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("elements") ||
      !doc["elements"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with \"elements\"");
  }
  std::vector<Label> elements;
  for (auto const& e : doc["elements"]) {
    if (e.is_string()) {
      elements.push_back(e.get<std::string>());
    } else if (e.is_number_integer()) {
      elements.push_back(std::to_string(e.get<long long>()));
    } else {
      throw Error(ErrorCode::ParseError, "element labels must be strings");
    }
  }
  std::vector<LabelPair> gens;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) {
      throw Error(ErrorCode::ParseError, "\"relations\" must be an array");
    }
    for (auto const& r : doc["relations"]) {
      if (!r.is_array() || r.size() != 2) {
        throw Error(ErrorCode::ParseError, "each relation is a pair [u, v]");
      }
      auto label = [](const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        throw Error(ErrorCode::ParseError, "relation entries must be labels");
      };
      gens.emplace_back(label(r[0]), label(r[1]));
    }
  }
  return Poset::build(std::move(elements), gens);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return doc;
}

Poset read_poset_file(const std::string& path) {
  return poset_from_json(read_json_file(path));
}

FormalSum sum_from_json(const Json& doc) {
  if (doc.is_object()) return FormalSum(poset_from_json(doc));
  if (!doc.is_array()) {
    throw Error(ErrorCode::ParseError, "expected a poset or an array of terms");
  }
  FormalSum out;
  for (auto const& t : doc) {
    if (!t.is_object() || !t.contains("poset")) {
      throw Error(ErrorCode::ParseError, "each term needs a \"poset\"");
    }
    std::int64_t c = 1;
    if (t.contains("coefficient")) {
      if (!t["coefficient"].is_number_integer()) {
        throw Error(ErrorCode::ParseError, "coefficients must be integers");
      }
      c = t["coefficient"].get<std::int64_t>();
    }
    out.add(poset_from_json(t["poset"]), c);
  }
  return out;
}

Json to_json(const FormalSum& x) {
  Json out = Json::array();
  for (auto const& [p, c] : x.terms()) {
    out.push_back({{"poset", to_json(p)}, {"coefficient", c}});
  }
  return out;
}

Json to_json(const IsoClass& c) {
  return Json{{"key", c.key.hex()},
              {"size", c.key.n},
              {"automorphisms", c.automorphisms},
              {"poset", to_json(c.representative)}};
}

Json to_json(const ClassSum& x) {
  Json out = Json::array();
  for (auto const& [k, c] : x) {
    out.push_back({{"class", k.hex()},
                   {"poset", to_json(poset_from_key(k))},
                   {"coefficient", c}});
  }
  return out;
}

Json to_json(const TensorSum& x) {
  Json out = Json::array();
  for (auto const& [k, c] : x) {
    out.push_back({{"left", to_json(poset_from_key(k.first))},
                   {"right", to_json(poset_from_key(k.second))},
                   {"coefficient", c}});
  }
  return out;
}

Json to_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (auto const& f : r.failures) {
    failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return Json{{"suite", r.suite},
              {"cases", r.cases},
              {"failure_count", r.failure_count},
              {"failures", failures},
              {"seconds", r.seconds},
              {"ok", r.ok()}};
}

}  // namespace posetop
