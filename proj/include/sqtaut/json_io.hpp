#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "sqtaut/genus_zero.hpp"
#include "sqtaut/local_cy.hpp"
#include "sqtaut/pairing.hpp"
#include "sqtaut/pointed_class.hpp"

namespace sqtaut {

inline constexpr const char* kSchema = "sq-taut/1";

/// A kappa/lambda polynomial emitted as a relation, with provenance.
struct Relation {
  std::string theorem;  // "theorem5", "prop8", "epsilon-chern-f"
  std::map<std::string, int> params;
  bool kappa_only = false;
  KLPoly poly;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// Term layout shared by classes and relations:
//   {"partition": [[1,2],[3]], "exponents": [1,0],
//    "coeff": {"kappa": {"1": 2}, "lambda": {"2": 1}, "rational": "-3/4"}}
// Relations live on M_g and use "d": 0 with empty partitions.

nlohmann::json to_json(const PointedClass& c);
PointedClass pointed_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Relation& r);
Relation relation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankCertificate& cert);
nlohmann::json to_json(const LocalSeries& s);
nlohmann::json to_json(const IntPoly& p);

}  // namespace sqtaut
