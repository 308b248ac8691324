// JSON serialization of the CLI-facing documents.  Integers that fit in
// 53 bits are emitted as JSON numbers, anything larger as decimal strings;
// both forms are accepted on input, so emit -> parse -> emit is stable.

#pragma once

#include "vcfan/classify.hpp"
#include "vcfan/cohomology.hpp"
#include "vcfan/complexes.hpp"
#include "vcfan/exact.hpp"
#include "vcfan/fans.hpp"
#include "vcfan/projectivity.hpp"

#include <optional>
#include <string>

namespace vcfan {

struct PairDocument {
  VcPair pair;
  std::optional<std::string> label;
};

PairDocument parse_pair_document(const std::string& json_text);
std::string pair_document_to_json(const PairDocument& doc);

std::string complex_to_json(const SimplicialComplex& k, int n);
std::string fan_to_json(const Fan& f);
Fan parse_fan_json(const std::string& json_text);

std::string classification_to_json(const VcPair& p, const ClassificationReport& rep);
std::string classification_to_text(const VcPair& p, const ClassificationReport& rep);

struct RingReport {
  std::vector<Int> betti;
  std::vector<std::string> relations;
  Int abs_det;
  Int top_power;
  bool isotropic_exists;
  std::optional<IntVector> isotropic_witness;
};

RingReport ring_report(const GradedRing& r);
std::string ring_report_to_json(const RingReport& rep);
std::string ring_report_to_text(const RingReport& rep);

std::string projectivity_to_json(bool projective, const LPResult& res);
std::string projectivity_to_text(bool projective, const LPResult& res);

std::string int_to_json_token(const Int& v);  // number or quoted string

}  // namespace vcfan
