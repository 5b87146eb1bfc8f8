// sq-taut: command-line front end.
//
// Exit status: 0 success, 1 verification failure or internal error,
// 2 invalid input. SQ_TAUT_OUTPUT_DIR, when set, is the base directory for
// relative --output paths.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqtaut/curve_class.hpp"
#include "sqtaut/errors.hpp"
#include "sqtaut/expression.hpp"
#include "sqtaut/genus_zero.hpp"
#include "sqtaut/json_io.hpp"
#include "sqtaut/local_cy.hpp"
#include "sqtaut/pairing.hpp"
#include "sqtaut/verify.hpp"

namespace {

using namespace sqtaut;
using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2 };

struct Output {
  std::string path;
  bool as_json = false;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::filesystem::path target(path);
    if (target.is_relative()) {
      if (const char* base = std::getenv("SQ_TAUT_OUTPUT_DIR"); base && *base) target = std::filesystem::path(base) / target;
    }
    std::ofstream out(target);
    if (!out) throw InputError("cannot open output file " + target.string());
    out << text;
  }
  void emit(const json& j) const { emit(j.dump(2) + "\n"); }
};

json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot read " + file);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(file + ": " + e.what());
  }
}

std::string header(const Relation& r) {
  std::ostringstream os;
  os << "# " << r.theorem;
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
  os << " degree=" << r.poly.max_degree() << (r.kappa_only ? " kappa-only" : "") << '\n';
  return os.str();
}

void emit_relation(const Output& out, Relation r) {
  if (r.kappa_only) r.poly = lambda_to_kappa(r.poly);
  if (out.as_json) out.emit(to_json(r));
  else out.emit(header(r) + r.poly.str() + "\n");
}

void emit_pointed(const Output& out, const PointedClass& c) {
  if (out.as_json) out.emit(to_json(c));
  else out.emit(c.str() + "\n");
}

std::string poly_text(const IntPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    os << (first ? "" : " + ");
    if (i == 0 || p[i] != 1) os << p[i].get_str() << (i == 0 ? "" : "*");
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

void require_positive(int value, const char* name, int minimum = 1) {
  if (value < minimum) throw InputError(std::string(name) + " must be >= " + std::to_string(minimum));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tautological relations from stable quotients: exact class calculus on M_{g,0|d} and M_g"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("-o,--output", out.path, "Write the result to a file (relative to SQ_TAUT_OUTPUT_DIR if set)");
  app.add_flag("--json", out.as_json, "Emit JSON (schema sq-taut/1)");

  int g = 0, d = 0, k = 0, a = 0, b = 0, c = 0, degree = -1;
  bool kappa_only = false;

  auto* relation = app.add_subcommand("relation", "Emit a relation in kappa/lambda classes");
  bool use_t5 = false, use_p8 = false;
  auto* t5 = relation->add_flag("--theorem5", use_t5, "eps_* c_{g-d-1+2k}(F_d)");
  relation->add_flag("--prop8", use_p8, "Relation from (a, b, c)")->excludes(t5);
  relation->add_option("-g", g, "Genus")->required();
  relation->add_option("-d", d, "Number of light points")->required();
  relation->add_option("-k", k, "Shift (theorem5)");
  relation->add_option("-a", a, "Power of s (prop8)");
  relation->add_option("-b", b, "Power of omega (prop8)");
  relation->add_option("-c", c, "Shift (prop8)");
  relation->add_flag("--kappa-only", kappa_only, "Eliminate lambda classes");

  auto* chern = app.add_subcommand("chern-f", "c_n(F_d) on M_{g,0|d}");
  chern->add_option("-g", g, "Genus")->required();
  chern->add_option("-d", d, "Number of light points")->required();
  chern->add_option("-n,--degree", degree, "Chern degree")->required();

  auto* push = app.add_subcommand("push", "eps-pushforward to M_g");
  std::string push_input, push_expr;
  push->add_option("-g", g, "Genus");
  push->add_option("-d", d, "Number of light points");
  push->add_option("-n,--degree", degree, "Push c_n(F_d)");
  push->add_option("--input", push_input, "Pointed-class JSON file");
  push->add_option("--expr", push_expr, "Class expression on M_{g,0|d}");
  push->add_flag("--kappa-only", kappa_only, "Eliminate lambda classes");

  auto* mult = app.add_subcommand("mult", "Multiply classes on M_{g,0|d}");
  std::vector<std::string> factors, factor_files;
  mult->add_option("-g", g, "Genus")->required();
  mult->add_option("-d", d, "Number of light points")->required();
  mult->add_option("factors", factors, "Class expressions");
  mult->add_option("--input", factor_files, "Pointed-class JSON files");

  auto* betti = app.add_subcommand("betti", "Virtual Poincare polynomial of Q_{0,2}(G(1,1), d)");
  betti->add_option("--d", d, "Degree")->required();

  auto* intersect = app.add_subcommand("intersect", "Integral of psi_1^x1 psi_2^x2 prod psi-hat^y over M_{0,2|d}");
  int x1 = 0, x2 = 0;
  std::vector<int> y;
  intersect->add_option("--d", d, "Number of light points")->required();
  intersect->add_option("--x1", x1)->required();
  intersect->add_option("--x2", x2)->required();
  intersect->add_option("--y", y, "psi-hat exponents, one per light point");

  auto* pairing = app.add_subcommand("pairing", "Pairing matrix and rank certificate on P[d,k]");
  pairing->add_option("--d", d)->required();
  pairing->add_option("--k", k)->required();

  auto* conifold = app.add_subcommand("conifold", "Conifold invariants N_{g,1} (and N_{g,d})");
  int max_genus = 0, conifold_d = 0;
  conifold->add_option("--max-genus", max_genus)->required();
  conifold->add_option("--d", conifold_d, "Also print N_{g,d}");

  auto* l2k = app.add_subcommand("lambda-to-kappa", "Rewrite lambda classes in kappa classes");
  std::string l2k_expr;
  l2k->add_option("-g", g, "Genus")->required();
  l2k->add_option("expression", l2k_expr)->required();

  auto* verify = app.add_subcommand("verify-paper", "Replay the reference values and identities");
  std::vector<std::string> only;
  verify->add_option("--only", only, "Check ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (relation->parsed()) {
      if (use_t5 == use_p8) throw InputError("choose exactly one of --theorem5, --prop8");
      if (use_t5) {
        emit_relation(out, Relation{"theorem5", {{"g", g}, {"d", d}, {"k", k}}, kappa_only, theorem5_class(g, d, k)});
      } else {
        if (d < 1 || a < 0 || b < 0) throw InputError("prop8 needs d >= 1, a >= 0, b >= 0");
        emit_relation(out, Relation{"prop8", {{"g", g}, {"d", d}, {"a", a}, {"b", b}, {"c", c}}, kappa_only,
                                    prop8_relation(g, d, a, b, c)});
      }
    } else if (chern->parsed()) {
      require_positive(d, "d", 0);
      require_positive(degree, "degree", 0);
      emit_pointed(out, chern_F(g, d, degree).homogeneous_part(degree));
    } else if (push->parsed()) {
      int sources = (push_input.empty() ? 0 : 1) + (push_expr.empty() ? 0 : 1) + (degree >= 0 ? 1 : 0);
      if (sources != 1) throw InputError("push needs exactly one of --degree, --input, --expr");
      if (!push_input.empty()) {
        PointedClass cls = pointed_from_json(read_json_file(push_input));
        emit_relation(out, Relation{"push", {{"g", cls.genus()}, {"d", cls.d()}}, kappa_only, epsilon_push(cls)});
      } else if (!push_expr.empty()) {
        emit_relation(out, Relation{"push", {{"g", g}, {"d", d}}, kappa_only, epsilon_push(parse_pointed(g, d, push_expr))});
      } else {
        emit_relation(out, Relation{"epsilon-chern-f", {{"g", g}, {"d", d}, {"n", degree}}, kappa_only,
                                    epsilon_chern_F(g, d, degree)});
      }
    } else if (mult->parsed()) {
      if (factors.empty() && factor_files.empty()) throw InputError("mult needs at least one factor");
      PointedClass product = PointedClass::unit(g, d);
      for (const auto& f : factors) product = pc_mul(product, parse_pointed(g, d, f));
      for (const auto& f : factor_files) product = pc_mul(product, pointed_from_json(read_json_file(f)));
      emit_pointed(out, product);
    } else if (betti->parsed()) {
      IntPoly p = poincare_Q02(d);
      if (out.as_json)
        out.emit(json{{"schema", kSchema}, {"kind", "poincare"}, {"d", d}, {"coefficients", to_json(p)}});
      else out.emit(poly_text(p) + "\n");
    } else if (intersect->parsed()) {
      if (y.empty()) y.assign(static_cast<std::size_t>(std::max(d, 0)), 0);
      Rational v = intersect_M02d(d, x1, x2, y);
      if (out.as_json)
        out.emit(json{{"schema", kSchema}, {"kind", "intersection"}, {"d", d}, {"x1", x1}, {"x2", x2}, {"y", y},
                      {"value", v.str()}});
      else out.emit(v.str() + "\n");
    } else if (pairing->parsed()) {
      RankCertificate cert = rank_certificate(d, k);
      if (out.as_json) {
        out.emit(to_json(cert));
      } else {
        std::ostringstream os;
        os << "P[" << d << "," << k << "] dimension " << cert.dimension << "\n";
        for (const auto& blk : cert.blocks)
          os << "  length " << blk.length << ": block " << blk.size << "x" << blk.size << ", rank " << blk.rank
             << (blk.is_diagonal ? ", diagonal" : ", not diagonal") << ", min entry " << blk.min_diagonal.str()
             << "\n";
        os << "  entries: " << cert.proven_zero << " proven zero, " << cert.computed << " computed, "
           << cert.unevaluated << " unevaluated\n";
        for (const auto& f : cert.failures) os << "  failure: " << f << "\n";
        os << "certificate: " << (cert.valid ? "valid" : "INVALID") << "\n";
        out.emit(os.str());
      }
      if (!cert.valid) return kVerifyFailed;
    } else if (conifold->parsed()) {
      LocalSeries s = conifold_F(max_genus);
      if (conifold_d != 0) require_positive(conifold_d, "--d");
      if (out.as_json) {
        json j = to_json(s);
        if (conifold_d != 0) {
          json nd = json::array();
          for (int gg = 1; gg <= max_genus; ++gg) nd.push_back({{"g", gg}, {"N_gd", conifold_N(gg, conifold_d, s).str()}});
          j["d"] = conifold_d;
          j["degree_d"] = nd;
        }
        out.emit(j);
      } else {
        std::ostringstream os;
        os << "constant term " << s.constant_term.str() << "\n";
        for (int gg = 1; gg <= max_genus; ++gg) {
          os << "N_{" << gg << ",1} = " << s.n_g1[static_cast<std::size_t>(gg - 1)].str();
          if (conifold_d != 0)
            os << "   N_{" << gg << "," << conifold_d << "} = " << conifold_N(gg, conifold_d, s).str();
          os << "\n";
        }
        out.emit(os.str());
      }
    } else if (l2k->parsed()) {
      Relation r{"lambda-to-kappa", {{"g", g}}, true, parse_kl(g, l2k_expr)};
      emit_relation(out, std::move(r));
    } else if (verify->parsed()) {
      auto results = run_checks(only);
      bool all = true;
      for (const auto& r : results) all = all && r.passed;
      if (out.as_json) {
        out.emit(to_json(results));
      } else {
        std::ostringstream os;
        for (const auto& r : results)
          os << (r.passed ? "PASS " : "FAIL ") << r.info.id << ": " << r.info.statement << " (" << r.detail << ")\n";
        os << (all ? "all checks passed" : "verification FAILED") << "\n";
        out.emit(os.str());
      }
      return all ? kOk : kVerifyFailed;
    }
  } catch (const InputError& e) {
    std::cerr << "sq-taut: invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    std::cerr << "sq-taut: invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "sq-taut: error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
