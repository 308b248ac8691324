// Command-line interface: classify, enumerate, cohomology, projective, iso,
// verify-paper.  Input is a JSON pair document from a file or stdin; output is
// JSON (default) or an aligned text rendering.  Exit codes: 0 success,
// 1 verification/property failure, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include "vcfan/classify.hpp"
#include "vcfan/cohomology.hpp"
#include "vcfan/io.hpp"
#include "vcfan/projectivity.hpp"
#include "vcfan/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

vcfan::PairDocument load_pair(const std::string& path, bool must_validate = true) {
  vcfan::PairDocument doc = vcfan::parse_pair_document(read_input(path));
  if (must_validate) {
    vcfan::ValidationResult v = vcfan::validate_pair(doc.pair);
    if (!v.ok) throw std::invalid_argument("invalid pair: " + v.message);
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of complete nonsingular fans over the vertex-cut complex"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  std::uint64_t seed = 12345;
  app.add_option("--seed", seed, "seed for sample-based verification suites");

  std::string input_path;
  auto* classify = app.add_subcommand("classify", "type, determinant, canonical form, labels");
  classify->add_option("input", input_path, "pair document (JSON file, or - for stdin)");

  int enum_n = 0;
  int enum_type = 2;
  auto* enumerate = app.add_subcommand("enumerate", "list variety classes for a dimension");
  enumerate->add_option("--n", enum_n, "dimension (3..16)")->required();
  enumerate->add_option("--type", enum_type, "type to enumerate (only 2 is parametrized)");

  auto* cohomology = app.add_subcommand("cohomology", "graded ring report for a pair");
  cohomology->add_option("input", input_path, "pair document (JSON file, or - for stdin)");

  auto* projective = app.add_subcommand("projective", "projectivity decision with certificate");
  projective->add_option("input", input_path, "pair document (JSON file, or - for stdin)");
  bool second_opinion = false;
  projective->add_flag("--fourier-motzkin", second_opinion,
                       "also run elimination as a second opinion (small n)");

  std::string iso_first, iso_second;
  auto* iso = app.add_subcommand("iso", "decide whether two pairs give isomorphic fans");
  iso->add_option("first", iso_first, "first pair document")->required();
  iso->add_option("second", iso_second, "second pair document")->required();

  std::string scope = "all";
  auto* verify = app.add_subcommand("verify-paper", "run the claim verification suites");
  verify->add_option("--scope", scope, "claim id or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      vcfan::PairDocument doc = load_pair(input_path);
      vcfan::ClassificationReport rep = vcfan::classify_report(doc.pair);
      if (doc.pair.n >= 3) rep.projective = vcfan::is_projective(doc.pair);
      std::cout << (format == "json" ? vcfan::classification_to_json(doc.pair, rep)
                                     : vcfan::classification_to_text(doc.pair, rep))
                << (format == "json" ? "\n" : "");
    } else if (*enumerate) {
      if (enum_type != 2)
        throw std::invalid_argument("only Type 2 has a finite parametrized class list");
      if (enum_n < 3 || enum_n > 16)
        throw std::invalid_argument("enumerate requires 3 <= n <= 16");
      auto classes = vcfan::enumerate_type2(enum_n);
      vcfan::Int formula = vcfan::necklace_count(enum_n);
      if (vcfan::Int(long(classes.size())) != formula) {
        std::cerr << "count disagrees with the closed formula\n";
        return 1;
      }
      if (format == "json") {
        nlohmann::ordered_json obj;
        obj["n"] = enum_n;
        obj["type"] = 2;
        obj["count"] = long(classes.size());
        obj["formula_count"] = formula.get_si();
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& a : classes) {
          nlohmann::ordered_json cls;
          nlohmann::ordered_json seq = nlohmann::ordered_json::array();
          int ones = 0;
          for (const auto& s : a) {
            seq.push_back(s.get_si());
            if (s == 1) ++ones;
          }
          cls["a"] = seq;
          cls["projective"] = ones < 3;
          arr.push_back(cls);
        }
        obj["classes"] = arr;
        std::cout << obj.dump() << "\n";
      } else {
        std::cout << "n = " << enum_n << ", classes = " << classes.size()
                  << " (formula " << formula << ")\n";
        for (const auto& a : classes) {
          int ones = 0;
          std::cout << "  (";
          for (size_t i = 0; i < a.size(); ++i) {
            std::cout << (i ? "," : "") << a[i];
            if (a[i] == 1) ++ones;
          }
          std::cout << ")  " << (ones < 3 ? "projective" : "non-projective") << "\n";
        }
      }
    } else if (*cohomology) {
      vcfan::PairDocument doc = load_pair(input_path);
      vcfan::GradedRing ring = vcfan::presentation_from_pair(doc.pair);
      vcfan::RingReport rep = vcfan::ring_report(ring);
      std::cout << (format == "json" ? vcfan::ring_report_to_json(rep)
                                     : vcfan::ring_report_to_text(rep))
                << (format == "json" ? "\n" : "");
    } else if (*projective) {
      vcfan::PairDocument doc = load_pair(input_path);
      if (doc.pair.n < 3) throw std::invalid_argument("projectivity requires n >= 3");
      vcfan::Fan fan = vcfan::fan_from_pair(doc.pair);
      vcfan::StrictLPSystem sys = vcfan::build_lp(fan);
      vcfan::LPResult res = vcfan::lp_feasible(sys);
      bool projective_flag = vcfan::lp_is_feasible(res);
      if (vcfan::is_projective(doc.pair) != projective_flag) {
        std::cerr << "LP decision disagrees with the closed-form rule\n";
        return 1;
      }
      if (second_opinion) {
        bool fm = vcfan::fourier_motzkin_feasible(sys);
        if (fm != projective_flag) {
          std::cerr << "elimination disagrees with the simplex decision\n";
          return 1;
        }
      }
      std::cout << (format == "json" ? vcfan::projectivity_to_json(projective_flag, res)
                                     : vcfan::projectivity_to_text(projective_flag, res))
                << (format == "json" ? "\n" : "");
    } else if (*iso) {
      vcfan::PairDocument d1 = load_pair(iso_first);
      vcfan::PairDocument d2 = load_pair(iso_second);
      if (d1.pair.n < 3 || d2.pair.n < 3)
        throw std::invalid_argument("iso requires n >= 3");
      bool variety = vcfan::variety_isomorphic(d1.pair, d2.pair);
      bool fan_route = d1.pair.n == d2.pair.n &&
                       vcfan::fans_isomorphic(vcfan::fan_from_pair(d1.pair),
                                              vcfan::fan_from_pair(d2.pair));
      if (variety != fan_route) {
        std::cerr << "canonical-form route disagrees with the fan search\n";
        return 1;
      }
      if (format == "json") {
        nlohmann::ordered_json obj;
        obj["isomorphic"] = variety;
        obj["canonical_route"] = variety;
        obj["fan_route"] = fan_route;
        std::cout << obj.dump() << "\n";
      } else {
        std::cout << "isomorphic      " << (variety ? "yes" : "no") << "\n";
      }
    } else if (*verify) {
      vcfan::VerificationReport rep = vcfan::verify_claims(scope, seed);
      if (format == "json") {
        nlohmann::ordered_json obj;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : rep.claims) {
          nlohmann::ordered_json jc;
          jc["id"] = c.id;
          jc["statement"] = c.statement;
          jc["status"] = c.pass ? "pass" : "fail";
          jc["details"] = c.details;
          arr.push_back(jc);
        }
        obj["claims"] = arr;
        obj["all_pass"] = rep.all_pass();
        std::cout << obj.dump() << "\n";
      } else {
        for (const auto& c : rep.claims)
          std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.details << "\n";
      }
      if (!rep.all_pass()) return 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
