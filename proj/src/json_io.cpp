#include "hdx/json_io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hdx {

namespace {

Json vertices_json(const Simplex& s) {
    Json arr = Json::array();
    for (VertexId v : s.vertices()) arr.push_back(v);
    return arr;
}

VertexList vertices_from_json(const Json& arr, const char* where) {
    if (!arr.is_array()) {
        throw IoError(std::string(where) + ": \"vertices\" must be an array");
    }
    VertexList out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer()) {
            throw IoError(std::string(where) +
                          ": vertex ids must be integers");
        }
        out.push_back(v.get<VertexId>());
    }
    return out;
}

/** Shortest digits that round-trip, matching printf %.17g at worst. */
std::string double_to_string(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace

Json complex_to_json(const WeightedComplex& wc) {
    const int n = wc.complex.dimension();
    Json j;
    j["n"] = n;
    Json tops = Json::array();
    for (int i = 0; i < wc.complex.count(n); ++i) {
        Json f;
        f["vertices"] = vertices_json(wc.complex.face(n, i));
        f["weight"] = wc.weights(n, i);
        tops.push_back(std::move(f));
    }
    j["top_faces"] = std::move(tops);
    return j;
}

WeightedComplexPtr complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("top_faces")) {
        throw IoError("complex file needs fields \"n\" and \"top_faces\"");
    }
    if (!j["n"].is_number_integer()) {
        throw IoError("field \"n\" must be an integer");
    }
    const int n = j["n"].get<int>();
    if (!j["top_faces"].is_array() || j["top_faces"].empty()) {
        throw IoError("\"top_faces\" must be a nonempty array");
    }
    std::vector<TopFace> tops;
    tops.reserve(j["top_faces"].size());
    for (const auto& f : j["top_faces"]) {
        if (!f.is_object() || !f.contains("vertices")) {
            throw IoError("each top face needs a \"vertices\" array");
        }
        TopFace tf;
        tf.vertices = vertices_from_json(f["vertices"], "top_faces");
        if (static_cast<int>(tf.vertices.size()) != n + 1) {
            throw IoError("top face has " +
                          std::to_string(tf.vertices.size()) +
                          " vertices; expected n+1 = " + std::to_string(n + 1));
        }
        if (f.contains("weight")) {
            if (!f["weight"].is_number()) {
                throw IoError("\"weight\" must be a number");
            }
            tf.weight = f["weight"].get<double>();
            if (!(tf.weight > 0.0)) {
                throw DomainError("top face weight must be positive, got " +
                                  double_to_string(tf.weight));
            }
        }
        tops.push_back(std::move(tf));
    }
    return build_weighted(tops);
}

Json generated_to_json(const GeneratedComplex& g) {
    Json j = complex_to_json(*g.space);
    Json meta;
    meta["kind"] = g.spec.kind;
    Json params;
    if (g.spec.kind == "regular-graph-matching") {
        params["v"] = g.spec.v;
        params["s"] = g.spec.s;
    } else {
        params["m"] = g.spec.m;
        params["n"] = g.spec.n;
        if (g.spec.kind == "random-pure") params["p"] = g.spec.p;
    }
    meta["params"] = std::move(params);
    if (!g.spec.rng_id.empty()) {
        meta["seed"] = g.spec.seed;
        meta["rng_id"] = g.spec.rng_id;
        meta["attempts"] = g.stats.attempts;
    }
    if (g.matching) {
        meta["matching"] = face_set_to_json(*g.matching, g.space->complex);
        meta["thinness"] = g.thinness;
        meta["edge_survival"] = g.stats.edge_survival;
        meta["min_degree"] = g.stats.min_degree;
        meta["mean_degree"] = g.stats.mean_degree;
    }
    j["metadata"] = std::move(meta);
    return j;
}

Json cochain_to_json(const Cochain& phi) {
    Json j;
    j["k"] = phi.k;
    Json entries = Json::array();
    for (int i = 0; i < phi.values.size(); ++i) {
        if (phi.values[i] == 0.0) continue;
        Json e;
        e["vertices"] = vertices_json(phi.space->complex.face(phi.k, i));
        e["value"] = phi.values[i];
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

Cochain cochain_from_json(const Json& j, const WeightedComplexPtr& space) {
    if (!j.is_object() || !j.contains("k") || !j.contains("entries")) {
        throw IoError("cochain file needs fields \"k\" and \"entries\"");
    }
    if (!j["k"].is_number_integer()) {
        throw IoError("field \"k\" must be an integer");
    }
    const int k = j["k"].get<int>();
    if (k < -1 || k > space->complex.dimension()) {
        throw DimensionError("cochain degree " + std::to_string(k) +
                             " outside the complex");
    }
    Eigen::VectorXd values = Eigen::VectorXd::Zero(space->complex.count(k));
    if (!j["entries"].is_array()) {
        throw IoError("\"entries\" must be an array");
    }
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("vertices") ||
            !e.contains("value") || !e["value"].is_number()) {
            throw IoError("each entry needs \"vertices\" and a numeric "
                          "\"value\"");
        }
        Simplex s{vertices_from_json(e["vertices"], "entries")};
        int idx = space->complex.index_of(s);
        if (idx < 0 || s.dim() != k) {
            throw MissingFaceError("entry face " + s.to_string() +
                                   " is not a k-face of the complex");
        }
        values[idx] = e["value"].get<double>();
    }
    return make_cochain(space, k, std::move(values));
}

Json face_set_to_json(const FaceSet& A, const SimplicialComplex& X) {
    Json j;
    j["k"] = A.k;
    Json faces = Json::array();
    for (int i : A.faces) faces.push_back(vertices_json(X.face(A.k, i)));
    j["faces"] = std::move(faces);
    return j;
}

FaceSet face_set_from_json(const Json& j, const WeightedComplexPtr& space) {
    if (!j.is_object() || !j.contains("k") || !j.contains("faces")) {
        throw IoError("face set file needs fields \"k\" and \"faces\"");
    }
    if (!j["k"].is_number_integer()) {
        throw IoError("field \"k\" must be an integer");
    }
    if (!j["faces"].is_array()) {
        throw IoError("\"faces\" must be an array of vertex arrays");
    }
    std::vector<Simplex> members;
    for (const auto& f : j["faces"]) {
        members.emplace_back(vertices_from_json(f, "faces"));
    }
    return make_face_set(space, j["k"].get<int>(), members);
}

Json validation_to_json(const ValidationReport& rep) {
    Json j;
    j["closed"] = rep.closed;
    j["pure"] = rep.pure;
    j["weights_positive"] = rep.weights_positive;
    Json per_dim = Json::array();
    for (std::size_t i = 0; i < rep.recursion_residual.size(); ++i) {
        Json row;
        row["k"] = static_cast<int>(i) - 1;
        row["residual"] = rep.recursion_residual[i];
        per_dim.push_back(std::move(row));
    }
    j["recursion_residuals"] = std::move(per_dim);
    j["max_recursion_residual"] = rep.max_recursion_residual;
    j["max_total_residual"] = rep.max_total_residual;
    j["violations"] = rep.violations;
    j["ok"] = rep.ok();
    return j;
}

Json profile_to_json(const SpectralProfile& prof,
                     const SimplicialComplex& X) {
    Json j;
    j["n"] = prof.n;
    Json levels = Json::array();
    for (const auto& lv : prof.levels) {
        Json row;
        row["k"] = lv.k;
        row["mu_k"] = lv.mu;
        row["nu_k"] = lv.nu;
        row["argmax_face"] = vertices_json(X.face(lv.k - 1, lv.argmax_base));
        row["argmin_face"] = vertices_json(X.face(lv.k - 1, lv.argmin_base));
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    Json cls;
    cls["lambda_one_sided"] = prof.lambda_one_sided;
    cls["lambda_two_sided"] = prof.lambda_two_sided;
    cls["connected"] = prof.all_links_connected;
    j["classification"] = std::move(cls);
    return j;
}

namespace {

Json descent_steps_json(const std::vector<DescentStep>& steps) {
    Json arr = Json::array();
    for (const auto& s : steps) {
        Json row;
        row["k"] = s.k;
        row["lhs"] = s.lhs;
        row["rhs"] = s.rhs;
        row["vacuous"] = s.vacuous;
        row["ok"] = s.ok;
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace

Json descent_to_json(const DescentReport& rep) {
    Json j;
    j["applicable"] = rep.applicable;
    j["step_mu"] = descent_steps_json(rep.step_mu);
    j["step_nu"] = descent_steps_json(rep.step_nu);
    j["top_mu"] = descent_steps_json(rep.top_mu);
    j["top_nu"] = descent_steps_json(rep.top_nu);
    if (rep.lambda_from_top) {
        j["lambda_from_top"] = *rep.lambda_from_top;
    } else {
        j["lambda_from_top"] = nullptr;
    }
    j["lambda_consistent"] = rep.lambda_consistent;
    return j;
}

Json factorization_to_json(const FactorizationReport& rep) {
    Json j;
    j["k"] = rep.k;
    j["updown_residual"] = rep.updown_residual;
    j["downup_residual"] = rep.downup_residual;
    j["adjointness_residual"] = rep.adjointness_residual;
    j["upper_row_sum_residual"] = rep.upper_row_sum_residual;
    j["lower_row_sum_residual"] = rep.lower_row_sum_residual;
    j["ok"] = rep.ok();
    return j;
}

Json ladder_to_json(const DecompositionResult& result,
                    const DecompositionVerification* ver) {
    Json j;
    j["k"] = result.k;
    Json levels = Json::array();
    for (const auto& lv : result.levels) {
        Json row;
        row["i"] = lv.i;
        row["energy"] = lv.energy;
        row["correction"] = lv.correction;
        row["c0_residual"] = std::max(lv.c0_component, lv.c0_intermediate);
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    j["dphi_sq"] = result.dphi_sq;
    j["identity1_residual"] = result.identity1_residual;
    j["identity2_residual"] = result.identity2_residual;
    if (ver) {
        Json v;
        v["identity1_residual"] = ver->identity1_residual;
        v["identity2_residual"] = ver->identity2_residual;
        v["energy_residual"] = ver->energy_residual;
        v["max_c0_residual"] = ver->max_c0_residual;
        v["max_correction_residual"] = ver->max_correction_residual;
        v["upper_bound"] = ver->upper_bound;
        v["lower_bound"] = ver->lower_bound;
        v["upper_ok"] = ver->upper_ok;
        v["lower_ok"] = ver->lower_ok;
        j["verification"] = std::move(v);
    }
    return j;
}

Json mixing_to_json(const std::vector<MixingCheck>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json row;
        row["theorem_id"] = c.theorem_id;
        row["k"] = c.k;
        row["achieved"] = c.achieved;
        row["bound"] = c.bound;
        row["margin"] = c.margin;
        row["pass"] = c.pass;
        row["advisory"] = c.advisory;
        arr.push_back(std::move(row));
    }
    return arr;
}

Json binary_mixing_to_json(const BinaryMixingCheck& check) {
    Json row;
    row["theorem_id"] = kBoundBinary;
    row["k"] = check.k;
    row["achieved"] = check.achieved;
    row["thinness"] = check.thinness;
    row["bound"] = check.bound;
    row["margin"] = check.bound - check.achieved;
    row["pass"] = check.pass;
    row["advisory"] = false;
    return row;
}

Json manifest_to_json(const RunManifest& manifest) {
    Json j;
    j["command"] = manifest.command;
    j["tool_version"] = manifest.tool_version;
    Json inputs = Json::array();
    for (const auto& [path, digest] : manifest.inputs) {
        Json row;
        row["path"] = path;
        row["sha256"] = digest;
        inputs.push_back(std::move(row));
    }
    j["inputs"] = std::move(inputs);
    j["seeds"] = manifest.seeds;
    Json summary;
    summary["checks_total"] = manifest.checks_total;
    summary["checks_passed"] = manifest.checks_passed;
    j["summary"] = std::move(summary);
    return j;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(),
                   nullptr) != 1) {
        throw InternalError("digest computation failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

std::string canonical_digest(const Json& j) {
    // Plain json sorts object keys, giving a canonical byte stream.
    nlohmann::json sorted = nlohmann::json::parse(j.dump());
    return sha256_hex(sorted.dump());
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    save_text_file(path, j.dump(2) + "\n");
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("failed writing " + path);
}

std::string matrix_to_csv(const Eigen::MatrixXd& mat) {
    std::string out;
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
        for (Eigen::Index c = 0; c < mat.cols(); ++c) {
            if (c) out += ",";
            out += double_to_string(mat(r, c));
        }
        out += "\n";
    }
    return out;
}

std::string face_legend_csv(const SimplicialComplex& X, int k) {
    std::string out = "index,vertices\n";
    for (int i = 0; i < X.count(k); ++i) {
        out += std::to_string(i) + ",";
        const auto& verts = X.face(k, i).vertices();
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (j) out += " ";
            out += std::to_string(verts[j]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace hdx
