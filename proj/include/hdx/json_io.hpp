#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/decomposition.hpp"
#include "hdx/generators.hpp"
#include "hdx/mixing.hpp"
#include "hdx/spectra.hpp"

namespace hdx {

/** Reports keep insertion order so serialization is reproducible. */
using Json = nlohmann::ordered_json;

// ---- complexes ----------------------------------------------------------

/** {"n":..., "top_faces":[{"vertices":[...], "weight":...}, ...]} */
Json complex_to_json(const WeightedComplex& wc);

/** Accepts the same shape; "weight" defaults to 1. */
WeightedComplexPtr complex_from_json(const Json& j);

/** As complex_to_json, plus a "metadata" block describing the draw. */
Json generated_to_json(const GeneratedComplex& g);

// ---- cochains and face sets ---------------------------------------------

/** {"k":..., "entries":[{"vertices":[...], "value":...}, ...]};
 *  faces omitted from "entries" carry the value zero. */
Json cochain_to_json(const Cochain& phi);
Cochain cochain_from_json(const Json& j, const WeightedComplexPtr& space);

/** {"k":..., "faces":[[v0,v1,...], ...]} */
Json face_set_to_json(const FaceSet& A, const SimplicialComplex& X);
FaceSet face_set_from_json(const Json& j, const WeightedComplexPtr& space);

// ---- reports -------------------------------------------------------------

Json validation_to_json(const ValidationReport& rep);
Json profile_to_json(const SpectralProfile& prof, const SimplicialComplex& X);
Json descent_to_json(const DescentReport& rep);
Json factorization_to_json(const FactorizationReport& rep);
Json ladder_to_json(const DecompositionResult& result,
                    const DecompositionVerification* ver = nullptr);
Json mixing_to_json(const std::vector<MixingCheck>& checks);
Json binary_mixing_to_json(const BinaryMixingCheck& check);

// ---- provenance ----------------------------------------------------------

/**
 * Every report embeds one of these. Wall-clock duration is deliberately
 * not serialized (it is printed to stderr instead) so that repeated runs
 * over the same inputs emit byte-identical reports.
 */
struct RunManifest {
    std::string command;
    std::string tool_version;
    std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
    std::vector<std::uint64_t> seeds;
    int checks_total = 0;
    int checks_passed = 0;
};

Json manifest_to_json(const RunManifest& manifest);

/** SHA-256 of a byte string, lowercase hex. */
std::string sha256_hex(const std::string& bytes);

/** Digest of the canonical serialization (sorted keys, no whitespace). */
std::string canonical_digest(const Json& j);

// ---- files ----------------------------------------------------------------

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
void save_text_file(const std::string& path, const std::string& text);

/** Row-major CSV with one matrix row per line, full double precision. */
std::string matrix_to_csv(const Eigen::MatrixXd& mat);

/** "index,vertices" legend for dimension k in canonical face order. */
std::string face_legend_csv(const SimplicialComplex& X, int k);

}  // namespace hdx
