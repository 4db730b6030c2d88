#pragma once

#include "prismlab/cell.hpp"
#include "prismlab/generic_complex.hpp"
#include "prismlab/homology.hpp"
#include "prismlab/orientation.hpp"
#include "prismlab/prism_complex.hpp"
#include "prismlab/symmetry.hpp"
#include "prismlab/tverberg.hpp"

#include <json.hpp>

namespace prismlab {

using Json = nlohmann::json;

// {"parts": [[0],[1,3]]}
Json cell_to_json(const Cell& cell);
/// Parts may be in any order; throws ParseError on malformed input.
SignedCell cell_from_json(const Json& j);

// {"dim": k, "terms": [{"cell": ..., "coef": c}]}
Json chain_to_json(const Chain& chain);
Chain chain_from_json(const Json& j);

/*
 * {"top_cells": [{"id": str, "factors": [dims]}],
 *  "codim1": [{"id": str, "cofaces": [{"top": str, "induced_sign_if_plus": +-1}]}]}
 */
Json generic_to_json(const GenericPrismComplex& complex);
GenericPrismComplex generic_from_json(const Json& j);

// {"dim": k, "orbits": [{"rep": cell, "size": n}]}
Json orbit_report_to_json(int dim, const std::vector<Orbit>& orbits);

Json coherence_to_json(const CoherenceReport& report, bool include_faces);
Json homology_to_json(const std::vector<HomologyGroup>& groups);
Json certificate_to_json(const PartitionCertificate& certificate);

} // namespace prismlab
