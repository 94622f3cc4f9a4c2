#pragma once

// JSON views of the core types. GaussInt is [re, im], CycInt is
// {"order": N, "coeffs": [...]}. Integers outside the int64 range are written
// as decimal strings.

#include <json.hpp>

#include "bsl/exact_numbers.hpp"
#include "bsl/fusion.hpp"
#include "bsl/galois_ring.hpp"
#include "bsl/hadamard.hpp"
#include "bsl/scheme.hpp"

namespace bsl {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

json to_json(const Integer& v);
Integer integer_from_json(const json& j);

json to_json(const GaussInt& z);
GaussInt gauss_from_json(const json& j);

json to_json(const CycInt& z);
CycInt cyc_from_json(const json& j);

json ring_summary(const GaloisRing& ring);
json to_json(const Eigenmatrix& P);
json to_json(const Scheme& s);
json to_json(const AdmissiblePartition& p);
json to_json(const FusionResult& f);
json to_json(const WeightVector& w);
json to_json(const ButsonSolution& s);
json to_json(const IdentityReport& r);

}  // namespace bsl
