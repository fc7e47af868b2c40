#pragma once

#include "singpack/bubbling.hpp"
#include "singpack/decompose.hpp"
#include "singpack/lattice.hpp"
#include "singpack/packing.hpp"
#include "singpack/toric.hpp"

#include <json.hpp>

#include <string>

namespace singpack {

using Json = nlohmann::ordered_json;

/// Manifold schema: { "basis": [string], "intersection": [[int]],
/// "omega": [rational-string], "curves": [{"name": string, "class": [int]}] }.
/// Rational strings accept "p/q", integers, and finite decimals.
LatticeModel manifold_from_json(const Json& j);
LatticeModel load_manifold(const std::string& path);

Json to_json(const RationalVec& v);
Json to_json(const BarycentricDecomposition& d);
Json to_json(const PolarizationSketch& s);
Json to_json(const PackingReport& r);
Json to_json(const GammaCoefficients& g);
Json to_json(const PeriodVerdict& v);
Json to_json(const CubicReport& r);
Json to_json(const Polytope& p);
Json to_json(const ClassDecomposition& d);

} // namespace singpack
