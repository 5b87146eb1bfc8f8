#include "sqtaut/json_io.hpp"

#include "sqtaut/errors.hpp"

namespace sqtaut {

using nlohmann::json;

namespace {

json coeff_json(int genus, const GradedPoly::Exponents& e, const Rational& c) {
  json kappa = json::object();
  json lambda = json::object();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (i < static_cast<std::size_t>(genus)) lambda[std::to_string(i + 1)] = e[i];
    else kappa[std::to_string(i - static_cast<std::size_t>(genus) + 1)] = e[i];
  }
  return {{"kappa", kappa}, {"lambda", lambda}, {"rational", c.str()}};
}

KLPoly coeff_from_json(int genus, const json& j) {
  GradedPoly::Exponents e;
  auto put = [&](std::size_t pos, unsigned exp) {
    if (e.size() <= pos) e.resize(pos + 1, 0);
    e[pos] += exp;
  };
  for (const auto& [key, val] : j.at("lambda").items()) {
    int i = std::stoi(key);
    if (i < 1 || i > genus) throw InputError("lambda index out of range in JSON");
    put(KLPoly::lambda_position(i), val.get<unsigned>());
  }
  for (const auto& [key, val] : j.at("kappa").items()) {
    int a = std::stoi(key);
    if (a < 1) throw InputError("kappa index must be >= 1 in JSON");
    put(KLPoly::kappa_position(genus, a), val.get<unsigned>());
  }
  GradedPoly p(KLPoly::generators(genus));
  p.add_term(std::move(e), Rational::parse(j.at("rational").get<std::string>()));
  return {genus, p};
}

json kl_terms(const KLPoly& poly) {
  json terms = json::array();
  const auto& ts = poly.poly().terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it)
    terms.push_back({{"partition", json::array()},
                     {"exponents", json::array()},
                     {"coeff", coeff_json(poly.genus(), it->first.exps, it->second)}});
  return terms;
}

void require_schema(const json& j) {
  if (!j.contains("schema") || j.at("schema") != kSchema)
    throw InputError(std::string("JSON payload is not schema ") + kSchema);
}

}  // namespace

json to_json(const PointedClass& c) {
  json terms = json::array();
  for (auto mit = c.terms().rbegin(); mit != c.terms().rend(); ++mit) {
    const auto& ts = mit->second.poly().terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it)
      terms.push_back({{"partition", mit->first.blocks},
                       {"exponents", mit->first.exponents},
                       {"coeff", coeff_json(c.genus(), it->first.exps, it->second)}});
  }
  json out = {{"schema", kSchema}, {"kind", "pointed-class"}, {"genus", c.genus()}, {"d", c.d()}};
  out["truncation"] = c.truncation() ? json(*c.truncation()) : json(nullptr);
  out["terms"] = std::move(terms);
  return out;
}

PointedClass pointed_from_json(const json& j) {
  try {
    require_schema(j);
    const int g = j.at("genus").get<int>();
    const int d = j.at("d").get<int>();
    std::optional<int> trunc;
    if (j.contains("truncation") && !j.at("truncation").is_null()) trunc = j.at("truncation").get<int>();
    PointedClass out(g, d, trunc);
    for (const auto& t : j.at("terms")) {
      auto blocks = t.at("partition").get<std::vector<std::vector<int>>>();
      auto exps = t.at("exponents").get<std::vector<int>>();
      BlockMonomial m = (blocks.empty() && d == 0) ? BlockMonomial::unit(0)
                                                   : BlockMonomial::from_parts(d, blocks, exps);
      out.add_term(m, coeff_from_json(g, t.at("coeff")));
    }
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed pointed-class JSON: ") + e.what());
  }
}

json to_json(const Relation& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"schema", kSchema},
          {"kind", "relation"},
          {"genus", r.poly.genus()},
          {"d", 0},
          {"theorem", r.theorem},
          {"params", params},
          {"kappa_only", r.kappa_only},
          {"degree", r.poly.max_degree()},
          {"homogeneous", r.poly.is_zero() || r.poly.is_homogeneous()},
          {"pretty", r.poly.str()},
          {"terms", kl_terms(r.poly)}};
}

Relation relation_from_json(const json& j) {
  try {
    require_schema(j);
    const int g = j.at("genus").get<int>();
    Relation r{j.at("theorem").get<std::string>(), {}, j.value("kappa_only", false), KLPoly(g)};
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<int>();
    for (const auto& t : j.at("terms")) r.poly += coeff_from_json(g, t.at("coeff"));
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed relation JSON: ") + e.what());
  }
}

json to_json(const RankCertificate& cert) {
  const auto& M = cert.matrix;
  json rows = json::array();
  for (const auto& r : M.rows) rows.push_back({{"partition", r.partition}, {"tau", r.tau}, {"length", r.length()}});
  json cols = json::array();
  for (const auto& c : M.cols) {
    json comps = json::array();
    for (const auto& comp : c.components)
      comps.push_back({{"heavy", comp.heavy}, {"light", comp.light}, {"dimension", comp.dimension()}});
    cols.push_back({{"partition", c.source.partition},
                    {"tau", c.source.tau},
                    {"heavy_markings", c.heavy_markings},
                    {"psi_labels", c.psi_labels},
                    {"dimension", c.dimension()},
                    {"components", comps}});
  }
  json entries = json::array();
  for (std::size_t r = 0; r < M.entries.size(); ++r)
    for (std::size_t c = 0; c < M.entries[r].size(); ++c) {
      const auto& e = M.entries[r][c];
      json item = {{"row", r}, {"col", c}, {"status", to_string(e.status)}, {"evidence", e.evidence}};
      if (e.status == PairingEntry::Status::Computed) item["value"] = e.value.str();
      entries.push_back(std::move(item));
    }
  json blocks = json::array();
  for (const auto& b : cert.blocks)
    blocks.push_back({{"length", b.length},
                      {"size", b.size},
                      {"rank", b.rank},
                      {"diagonal", b.is_diagonal},
                      {"min_diagonal", b.min_diagonal.str()}});
  return {{"schema", kSchema},
          {"kind", "pairing"},
          {"d", cert.d},
          {"k", cert.k},
          {"dimension", cert.dimension},
          {"certificate", {{"valid", cert.valid},
                           {"proven_zero", cert.proven_zero},
                           {"computed", cert.computed},
                           {"unevaluated", cert.unevaluated},
                           {"diagonal_blocks", blocks},
                           {"failures", cert.failures}}},
          {"rows", rows},
          {"cols", cols},
          {"entries", entries}};
}

json to_json(const LocalSeries& s) {
  json ns = json::array();
  for (std::size_t g = 0; g < s.n_g1.size(); ++g) ns.push_back({{"g", g + 1}, {"N_g1", s.n_g1[g].str()}});
  return {{"schema", kSchema},
          {"kind", "conifold"},
          {"max_genus", s.max_genus},
          {"constant_term", s.constant_term.str()},
          {"coefficients", ns}};
}

json to_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p) coeffs.push_back(c.get_str());
  return coeffs;
}

}  // namespace sqtaut
