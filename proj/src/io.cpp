#include "vcfan/io.hpp"

#include <json.hpp>

#include <sstream>

namespace vcfan {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(long(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

ordered_json int_to_json(const Int& v) {
  static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
  if (v > lo && v < hi) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json vector_to_json(const IntVector& v) {
  ordered_json arr = ordered_json::array();
  for (const Int& x : v) arr.push_back(int_to_json(x));
  return arr;
}

ordered_json matrix_to_json(const IntMatrix& m) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    arr.push_back(row);
  }
  return arr;
}

ordered_json rat_vector_to_json(const RatVector& v) {
  ordered_json arr = ordered_json::array();
  for (const Rat& q : v) arr.push_back(q.get_str());
  return arr;
}

ordered_json pair_to_json_obj(const VcPair& p) {
  ordered_json obj;
  obj["n"] = p.n;
  obj["A"] = matrix_to_json(p.a);
  obj["b"] = vector_to_json(p.b);
  return obj;
}

}  // namespace

std::string int_to_json_token(const Int& v) { return int_to_json(v).dump(); }

PairDocument parse_pair_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("A") || !j.contains("b"))
    throw std::invalid_argument("pair document requires fields n, A, b");
  int n = j["n"].get<int>();
  if (n < 2) throw std::invalid_argument("pair document: n must be >= 2");
  const json& ja = j["A"];
  if (!ja.is_array() || int(ja.size()) != n)
    throw std::invalid_argument("pair document: A must be an n x n array");
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    if (!ja[i].is_array() || int(ja[i].size()) != n)
      throw std::invalid_argument("pair document: A must be an n x n array");
    for (int k = 0; k < n; ++k) a(i, k) = int_from_json(ja[i][k]);
  }
  const json& jb = j["b"];
  if (!jb.is_array() || int(jb.size()) != n)
    throw std::invalid_argument("pair document: b must have length n");
  IntVector b(n);
  for (int i = 0; i < n; ++i) b[i] = int_from_json(jb[i]);
  PairDocument doc{VcPair{n, a, b}, std::nullopt};
  if (j.contains("label")) doc.label = j["label"].get<std::string>();
  return doc;
}

std::string pair_document_to_json(const PairDocument& doc) {
  ordered_json obj = pair_to_json_obj(doc.pair);
  if (doc.label) obj["label"] = *doc.label;
  return obj.dump();
}

std::string complex_to_json(const SimplicialComplex& k, int n) {
  ordered_json obj;
  obj["n"] = n;
  obj["vertices"] = k.vertex_count();
  ordered_json facets = ordered_json::array();
  for (const auto& f : k.facets()) {
    ordered_json fa = ordered_json::array();
    for (int v : f) fa.push_back(v);
    facets.push_back(fa);
  }
  obj["facets"] = facets;
  return obj.dump();
}

std::string fan_to_json(const Fan& f) {
  ordered_json obj;
  int n = f.dim();
  obj["n"] = n;
  obj["complex"] = ordered_json::parse(complex_to_json(f.complex, n));
  ordered_json rays = ordered_json::array();
  for (int j = 1; j <= f.rays.cols(); ++j) rays.push_back(vector_to_json(f.ray(j)));
  obj["rays"] = rays;
  return obj.dump();
}

Fan parse_fan_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  int n = j.at("n").get<int>();
  const json& rays = j.at("rays");
  int m = int(rays.size());
  IntMatrix mat(n, m);
  for (int c = 0; c < m; ++c)
    for (int r = 0; r < n; ++r) mat(r, c) = int_from_json(rays[c][r]);
  if (m == 2 * n + 1) return Fan(vc_complex(n), mat);
  if (m == 2 * n) return Fan(bott_complex(n), mat);
  throw std::invalid_argument("fan document: ray count matches neither C_n nor B_n");
}

std::string classification_to_json(const VcPair& p, const ClassificationReport& rep) {
  ordered_json obj;
  obj["type"] = rep.tag.type_index;
  obj["det"] = int_to_json(rep.tag.det);
  ordered_json canon;
  canon["n"] = p.n;
  canon["A"] = matrix_to_json(rep.tag.canonical_a);
  canon["b"] = vector_to_json(rep.tag.canonical_b);
  obj["canonical"] = canon;
  obj["diffeo_label"] = rep.diffeo_label;
  obj["cohomology_class_label"] = rep.cohomology_class_label;
  if (rep.projective) obj["projective"] = *rep.projective;
  else obj["projective"] = nullptr;
  return obj.dump();
}

std::string classification_to_text(const VcPair& p, const ClassificationReport& rep) {
  std::ostringstream os;
  os << "type            " << rep.tag.type_index << "\n";
  os << "det             " << rep.tag.det << "\n";
  os << "canonical A     " << rep.tag.canonical_a.to_string() << "\n";
  os << "canonical b     [";
  for (size_t i = 0; i < rep.tag.canonical_b.size(); ++i)
    os << (i ? " " : "") << rep.tag.canonical_b[i];
  os << "]\n";
  os << "diffeo class    " << rep.diffeo_label << "\n";
  os << "cohomology      " << rep.cohomology_class_label << "\n";
  os << "projective      "
     << (rep.projective ? (*rep.projective ? "yes" : "no") : "undecided (n = 2)") << "\n";
  return os.str();
}

RingReport ring_report(const GradedRing& r) {
  RingReport rep;
  rep.betti = r.betti();
  for (const Poly& g : r.relations) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : g) {
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      Int a = abs(c);
      bool coeff = a != 1;
      if (coeff) os << a;
      bool any = false;
      auto labels = r.generator_labels();
      for (size_t v = 0; v < m.size(); ++v) {
        for (int e = 0; e < m[v]; ++e) {
          if (any || coeff) os << "*";
          os << labels[v];
          any = true;
        }
      }
      if (!any && !coeff) os << "1";
    }
    rep.relations.push_back(os.str());
  }
  rep.abs_det = ring_det_invariant(r);
  rep.top_power = top_power_x(r);
  auto witness = isotropic_mod_x(r);
  rep.isotropic_exists = witness.has_value();
  rep.isotropic_witness = witness;
  return rep;
}

std::string ring_report_to_json(const RingReport& rep) {
  ordered_json obj;
  ordered_json betti = ordered_json::array();
  for (const Int& b : rep.betti) betti.push_back(int_to_json(b));
  obj["betti"] = betti;
  obj["relations"] = rep.relations;
  ordered_json inv;
  inv["abs_det"] = int_to_json(rep.abs_det);
  inv["top_power"] = int_to_json(rep.top_power);
  ordered_json iso;
  iso["exists"] = rep.isotropic_exists;
  if (rep.isotropic_witness) iso["witness"] = vector_to_json(*rep.isotropic_witness);
  inv["isotropic_mod_x"] = iso;
  obj["invariants"] = inv;
  return obj.dump();
}

std::string ring_report_to_text(const RingReport& rep) {
  std::ostringstream os;
  os << "betti           ";
  for (size_t i = 0; i < rep.betti.size(); ++i) os << (i ? " " : "") << rep.betti[i];
  os << "\nrelations\n";
  for (const auto& s : rep.relations) os << "  " << s << "\n";
  os << "abs_det         " << rep.abs_det << "\n";
  os << "top_power       " << rep.top_power << "\n";
  os << "isotropic mod x " << (rep.isotropic_exists ? "witness exists" : "none") << "\n";
  return os.str();
}

std::string projectivity_to_json(bool projective, const LPResult& res) {
  ordered_json obj;
  obj["projective"] = projective;
  if (std::holds_alternative<LPFeasible>(res))
    obj["witness"] = rat_vector_to_json(std::get<LPFeasible>(res).witness);
  else
    obj["farkas"] = rat_vector_to_json(std::get<LPInfeasible>(res).farkas);
  return obj.dump();
}

std::string projectivity_to_text(bool projective, const LPResult& res) {
  std::ostringstream os;
  os << "projective      " << (projective ? "yes" : "no") << "\n";
  if (std::holds_alternative<LPFeasible>(res)) {
    os << "witness psi     ";
    const auto& w = std::get<LPFeasible>(res).witness;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    os << "\n";
  } else {
    os << "farkas          ";
    const auto& y = std::get<LPInfeasible>(res).farkas;
    for (size_t i = 0; i < y.size(); ++i) os << (i ? " " : "") << y[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace vcfan
