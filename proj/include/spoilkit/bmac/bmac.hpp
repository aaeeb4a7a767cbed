#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "spoilkit/core/error.hpp"

namespace spoilkit {

// The four weighted visual-tactile attributes of the BMAC spoil
// characterisation framework. Consistency (cohesive material) and relative
// density (cohesionless) share one weighted slot, as the framework assigns
// them a single weighting row.
enum class SpoilAttribute {
  ParticleSize,
  ConsistencyOrDensity,
  FabricStructure,
  Plasticity,
};

inline constexpr std::array<SpoilAttribute, 4> kSpoilAttributes = {
    SpoilAttribute::ParticleSize,
    SpoilAttribute::ConsistencyOrDensity,
    SpoilAttribute::FabricStructure,
    SpoilAttribute::Plasticity,
};

inline const char* to_string(SpoilAttribute a) {
  switch (a) {
    case SpoilAttribute::ParticleSize: return "particle_size";
    case SpoilAttribute::ConsistencyOrDensity: return "consistency_or_density";
    case SpoilAttribute::FabricStructure: return "fabric_structure";
    case SpoilAttribute::Plasticity: return "plasticity";
  }
  return "?";
}

// Spoil category Cat-1 .. Cat-4.
enum class AttributeCategory : int { Cat1 = 1, Cat2 = 2, Cat3 = 3, Cat4 = 4 };

inline constexpr std::array<AttributeCategory, 4> kCategories = {
    AttributeCategory::Cat1, AttributeCategory::Cat2,
    AttributeCategory::Cat3, AttributeCategory::Cat4};

inline int to_int(AttributeCategory c) { return static_cast<int>(c); }

inline AttributeCategory category_from_int(int v) {
  if (v < 1 || v > 4)
    throw Error(ErrorKind::InvalidCategory, "category " + std::to_string(v) + " outside 1..4");
  return static_cast<AttributeCategory>(v);
}

inline std::string to_string(AttributeCategory c) { return "Cat-" + std::to_string(to_int(c)); }

// Relative weight per attribute. The embedded default is the published BMAC
// weighting; custom weightings are allowed for sensitivity studies.
struct AttributeWeights {
  std::array<double, 4> weight{};  // indexed by SpoilAttribute order

  double operator[](SpoilAttribute a) const { return weight[static_cast<std::size_t>(a)]; }
  double& operator[](SpoilAttribute a) { return weight[static_cast<std::size_t>(a)]; }

  double total() const { return weight[0] + weight[1] + weight[2] + weight[3]; }

  void validate() const {
    for (double w : weight)
      if (!(w > 0.0))
        throw Error(ErrorKind::ConfigError, "attribute weights must all be positive");
  }

  static AttributeWeights bmac_default() {
    AttributeWeights w;
    w[SpoilAttribute::ParticleSize] = 11.6;
    w[SpoilAttribute::ConsistencyOrDensity] = 26.9;
    w[SpoilAttribute::FabricStructure] = 26.9;
    w[SpoilAttribute::Plasticity] = 34.6;
    return w;
  }
};

using AttributeCategoryMap = std::map<SpoilAttribute, AttributeCategory>;

struct BmacAssessment {
  std::array<double, 4> cumulative{};  // index 0 = Cat-1
  AttributeCategory assigned_category = AttributeCategory::Cat1;
  bool tie = false;
  AttributeCategoryMap labels;  // echo of the scored labels

  double cumulative_for(AttributeCategory c) const {
    return cumulative[static_cast<std::size_t>(to_int(c) - 1)];
  }
};

// Weighted vote: each attribute casts its weight for its category; the spoil
// is assigned to the category with the greatest cumulative weight. Ties (only
// possible with custom weights) keep the lowest-numbered tied category and
// set the tie flag.
inline BmacAssessment score_bmac(const AttributeCategoryMap& labels,
                                 const AttributeWeights& weights = AttributeWeights::bmac_default()) {
  constexpr double kTieEps = 1e-9;
  weights.validate();
  BmacAssessment out;
  out.labels = labels;
  for (SpoilAttribute a : kSpoilAttributes) {
    auto it = labels.find(a);
    if (it == labels.end())
      throw Error(ErrorKind::MissingAttribute, std::string("no label for ") + to_string(a));
    out.cumulative[static_cast<std::size_t>(to_int(it->second) - 1)] += weights[a];
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < 4; ++c)
    if (out.cumulative[c] > out.cumulative[best]) best = c;
  int at_max = 0;
  for (double v : out.cumulative)
    if (std::abs(v - out.cumulative[best]) <= kTieEps) ++at_max;
  out.assigned_category = category_from_int(static_cast<int>(best) + 1);
  out.tie = at_max >= 2;
  return out;
}

// ---------------------------------------------------------------------------
// Shear-strength parameter lookup
// ---------------------------------------------------------------------------

enum class MobilisationMode { Unsaturated, Saturated, Remoulded };

inline constexpr std::array<MobilisationMode, 3> kMobilisationModes = {
    MobilisationMode::Unsaturated, MobilisationMode::Saturated, MobilisationMode::Remoulded};

inline const char* to_string(MobilisationMode m) {
  switch (m) {
    case MobilisationMode::Unsaturated: return "unsaturated";
    case MobilisationMode::Saturated: return "saturated";
    case MobilisationMode::Remoulded: return "remoulded";
  }
  return "?";
}

// A tabulated value with its published parenthesised spread. The framework
// tables never define the spread's semantics (deviation vs tolerance), so it
// is carried verbatim and not interpreted.
struct SpreadValue {
  double value = 0.0;
  double spread = 0.0;
  bool operator==(const SpreadValue&) const = default;
};

struct ShearStrengthParams {
  std::optional<SpreadValue> unit_weight;  // kN/m^3; absent for remoulded rows
  SpreadValue cohesion;                    // kPa
  SpreadValue friction_angle;              // degrees
  bool operator==(const ShearStrengthParams&) const = default;
};

// Embedded copy of the published BMAC strength table: four categories by
// three mobilisation modes. Remoulded rows fix cohesion at zero and carry no
// unit weight.
inline ShearStrengthParams lookup_strength(AttributeCategory category, MobilisationMode mode) {
  const std::size_t c = static_cast<std::size_t>(to_int(category) - 1);
  static constexpr SpreadValue kUnsatGamma[4] = {{18, 1}, {18, 1}, {18, 1}, {18, 1}};
  static constexpr SpreadValue kUnsatCohesion[4] = {{20, 10}, {30, 15}, {50, 15}, {50, 15}};
  static constexpr SpreadValue kUnsatFriction[4] = {{25, 2.5}, {28, 3}, {30, 2}, {35, 2.5}};
  static constexpr SpreadValue kSatGamma[4] = {{20, 1}, {20, 1}, {20, 1}, {20, 1}};
  static constexpr SpreadValue kSatCohesion[4] = {{0, 0}, {15, 7.5}, {20, 10}, {0, 0}};
  static constexpr SpreadValue kSatFriction[4] = {{18, 3}, {23, 2.5}, {25, 2.5}, {30, 1.5}};
  static constexpr SpreadValue kRemouldedFriction[4] = {{18, 1.5}, {18, 1.5}, {18, 1.5}, {28, 2}};

  ShearStrengthParams out;
  switch (mode) {
    case MobilisationMode::Unsaturated:
      out.unit_weight = kUnsatGamma[c];
      out.cohesion = kUnsatCohesion[c];
      out.friction_angle = kUnsatFriction[c];
      break;
    case MobilisationMode::Saturated:
      out.unit_weight = kSatGamma[c];
      out.cohesion = kSatCohesion[c];
      out.friction_angle = kSatFriction[c];
      break;
    case MobilisationMode::Remoulded:
      out.cohesion = {0, 0};
      out.friction_angle = kRemouldedFriction[c];
      break;
  }
  return out;
}

}  // namespace spoilkit
