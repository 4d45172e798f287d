#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tms/bounds.hpp"
#include "tms/gluing.hpp"
#include "tms/null_distance.hpp"
#include "tms/space.hpp"

namespace tms {

/// Space file format:
///   {"labels": [...],
///    "metric": {"kind": "matrix", "values": [[...]]}
///            | {"kind": "points", "coords": [[...]], "norm": "sup"|"euclidean"},
///    "tau": [...],
///    "scalar": "rational"|"float",
///    "tolerance": number}
/// Rational values are integers or "p/q" strings; decimal literals are only
/// accepted in float mode. The euclidean norm needs float mode. Unknown keys
/// (such as "meta") are ignored.
TimedMetricSpace space_from_json_text(const std::string& text);
TimedMetricSpace load_space(const std::string& path);

using MetaEntries = std::vector<std::pair<std::string, std::string>>;

std::string space_to_json_text(const TimedMetricSpace& space,
                               const MetaEntries& meta = {});
void save_space(const TimedMetricSpace& space, const std::string& path,
                const MetaEntries& meta = {});

/// {"lower": s, "lower_witness": [[i,j],...], "upper": s, "exact": bool}
std::string certificate_to_json_text(const BoundCertificate& cert);

/// {"ordering": [...], "timed": bool, "coords": [[...]]}
std::string embedding_to_json_text(const FrechetEmbedding& embedding);

/// dhat with "inf" entries, the causally-null verdict with its witness, the
/// component partition and optionally one witness chain per pair.
std::string null_result_to_json_text(const TimedMetricSpace& space,
                                     const NullDistanceResult& result,
                                     const CausalNullCheck& check,
                                     const Components& components,
                                     bool include_chains = false);

/// Common space format over the quotient carrier (tau identically zero, the
/// slice lift) plus the identification map.
std::string glued_to_json_text(const GluedSpace& glued);

struct Manifest {
    std::vector<std::string> spaces;  // resolved relative to the manifest file
    std::string limit;
    int depth = 0;  // 0: default depth
};

Manifest load_manifest(const std::string& path);

}  // namespace tms
