#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permcalc/cycle_type.hpp"
#include "permcalc/factorization.hpp"
#include "permcalc/permutation.hpp"
#include "permcalc/sofic_profile.hpp"
#include "permcalc/witness.hpp"

namespace permcalc::serialize {

// Stable structured output. Key order is fixed (ordered_json) and rationals
// cross the boundary as exact "p/q" strings, so snapshots diff cleanly.
using json = nlohmann::ordered_json;

/// {degree, cycles, fixed_point_count, cyc, m, n_cycles, hamming_to_id,
///  inf_threshold, profile}
json perm_stats_record(const Permutation& p, std::uint64_t inf_threshold);

json cycle_type_json(const CycleType& t);

/// {masses: {"i": "p/q"}, inf: "p/q"}
json profile_json(const SoficProfile& p);
SoficProfile profile_from_json(const json& j);

/// Compact literal "1=1/2,3=1/4,inf=1/4" -> profile. Lengths may repeat no
/// more than once; omitted inf defaults to the residual only if the masses
/// already sum to 1.
SoficProfile parse_profile_literal(const std::string& text);

/// {sigma, c1, c2, l1, l2, verified}
json certificate_json(const Permutation& sigma, const FactorizationCertificate& c);

json witness_report_json(const witness::WitnessReport& r, bool include_parts);

/// Wire form of a sequence: a list of {degree, one_line} records.
json perm_sequence_json(const PermSequence& s);

/// Per-level profiles plus per-length trajectories across levels.
json sequence_report_json(const PermSequence& s, const ThresholdRule& rule = {});

json trace_report_json(const TraceReport& r);

}  // namespace permcalc::serialize
