#pragma once
#include <string>
#include <vector>

#include "toric/contraction.hpp"
#include "toric/verify.hpp"

namespace toric {

struct ClassListing {
  std::vector<ContractibleCandidate> candidates;
  std::vector<std::optional<ContractionStructure>> structures;
};

/// Report serializers; integers are emitted as strings so arbitrarily large
/// values survive bit-exactly. Schema carries a version field.
std::string validation_json(const FanValidation& v);
std::string validation_text(const FanValidation& v);

std::string classes_json(const Fan& fan, const ClassListing& listing);
std::string classes_text(const Fan& fan, const ClassListing& listing);

std::string ihc_json(const Fan& fan, const IHCReport& rep);
std::string ihc_text(const Fan& fan, const IHCReport& rep);

std::string decomposition_json(const Decomposition& d);
std::string decomposition_text(const Decomposition& d);

}  // namespace toric
