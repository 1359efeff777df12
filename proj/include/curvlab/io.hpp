#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvlab/curvature.hpp"
#include "curvlab/metric.hpp"
#include "curvlab/parse.hpp"
#include "curvlab/supergeometry.hpp"

namespace curvlab::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;
inline constexpr int kMaxBaseDim = 8;
inline constexpr int kMaxFiberDim = 8;

inline int max_degree_cap() {
    if (const char* env = std::getenv("CURVLAB_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v >= 1 && v < 8) return v;
    }
    return 8;
}

/// FNV-1a over the raw bytes; stable input fingerprint for reports.
inline std::string digest(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw argument_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// On-disk section description: a case tag plus a flat map from index-tuple
/// keys (1-based, with an optional "block:" prefix) to polynomial strings.
struct FieldSpecFile {
    int format_version = kFormatVersion;
    int base_dim = 0;
    std::string case_tag; // form | metric | connection | acs | superconnection | gauge | diffeo
    std::map<std::string, std::string> components;
    std::optional<int> n_plus, n_minus;
    std::map<std::string, std::string> inverse; // optional witness for gauge elements
};

inline std::vector<int> parse_index_key(const std::string& key, int count, int max_value) {
    std::vector<int> idx;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(part, &pos);
        } catch (...) {
            throw argument_error("bad index tuple: " + key);
        }
        if (pos != part.size() || v < 1 || v > max_value)
            throw argument_error("bad index tuple: " + key);
        idx.push_back(v - 1);
    }
    if (count >= 0 && int(idx.size()) != count)
        throw argument_error("index tuple arity mismatch: " + key);
    return idx;
}

inline FieldSpecFile parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw argument_error(std::string("JSON parse error: ") + e.what());
    }
    FieldSpecFile spec;
    try {
        spec.format_version = doc.at("format_version").get<int>();
        spec.base_dim = doc.at("base_dim").get<int>();
        spec.case_tag = doc.at("case").get<std::string>();
        for (const auto& [k, v] : doc.at("components").items())
            spec.components[k] = v.get<std::string>();
        if (doc.contains("grading")) {
            spec.n_plus = doc["grading"].at("n_plus").get<int>();
            spec.n_minus = doc["grading"].at("n_minus").get<int>();
        }
        if (doc.contains("inverse"))
            for (const auto& [k, v] : doc["inverse"].items())
                spec.inverse[k] = v.get<std::string>();
    } catch (const json::exception& e) {
        throw argument_error(std::string("spec schema error: ") + e.what());
    }
    if (spec.format_version != kFormatVersion)
        throw argument_error("unsupported format_version");
    if (spec.base_dim < 1 || spec.base_dim > kMaxBaseDim)
        throw argument_error("base_dim out of range (1.." + std::to_string(kMaxBaseDim) + ")");
    if (spec.n_plus && (*spec.n_plus < 1 || *spec.n_plus > kMaxFiberDim))
        throw argument_error("n_plus out of range");
    if (spec.n_minus && (*spec.n_minus < 1 || *spec.n_minus > kMaxFiberDim))
        throw argument_error("n_minus out of range");
    return spec;
}

inline FieldSpecFile load_spec(const std::string& path) { return parse_spec(read_file(path)); }

inline PolyScalar parse_component(const FieldSpecFile& spec, const std::string& text) {
    PolyScalar p = parse_poly(text, spec.base_dim);
    if (p.total_degree() > max_degree_cap())
        throw argument_error("component degree exceeds cap " +
                             std::to_string(max_degree_cap()));
    return p;
}

/// Splits "block:indices" keys; plain keys get an empty block name.
inline std::pair<std::string, std::string> split_key(const std::string& key) {
    auto pos = key.find(':');
    if (pos == std::string::npos) return {"", key};
    return {key.substr(0, pos), key.substr(pos + 1)};
}

// ---- typed readers --------------------------------------------------------

inline TensorPolyField spec_to_form(const FieldSpecFile& spec) {
    if (spec.case_tag != "form") throw argument_error("spec is not a form");
    const int m = spec.base_dim;
    int k = -1;
    for (const auto& [key, val] : spec.components) {
        auto idx = parse_index_key(key, -1, m);
        if (k < 0) k = static_cast<int>(idx.size());
        if (int(idx.size()) != k) throw argument_error("mixed form degrees in components");
    }
    if (k < 0) throw argument_error("form spec has no components");
    TensorPolyField f(m, std::vector<Slot>(size_t(k), Slot{SlotKind::BaseCo, m}));
    for (const auto& [key, val] : spec.components) {
        auto idx = parse_index_key(key, k, m);
        f.at(std::span<const int>(idx)) = parse_component(spec, val);
    }
    return f;
}

inline MetricField spec_to_metric(const FieldSpecFile& spec) {
    if (spec.case_tag != "metric") throw argument_error("spec is not a metric");
    const int m = spec.base_dim;
    PolyMatrix g(m, m, m);
    for (const auto& [key, val] : spec.components) {
        auto idx = parse_index_key(key, 2, m);
        g(idx[0], idx[1]) = parse_component(spec, val);
    }
    return MetricField(std::move(g));
}

inline ConnectionField spec_to_connection(const FieldSpecFile& spec, int fiber_dim = -1) {
    if (spec.case_tag != "connection") throw argument_error("spec is not a connection");
    const int m = spec.base_dim;
    int n = fiber_dim;
    if (n < 0) {
        for (const auto& [key, val] : spec.components) {
            auto idx = parse_index_key(key, 3, kMaxFiberDim);
            n = std::max({n, idx[1] + 1, idx[2] + 1});
        }
        if (n < 1) throw argument_error("connection spec has no components");
    }
    if (n > kMaxFiberDim) throw argument_error("fiber dimension exceeds cap");
    ConnectionField A(m, PolyMatrix(n, n, m));
    for (const auto& [key, val] : spec.components) {
        auto idx = parse_index_key(key, 3, std::max(m, n));
        if (idx[0] >= m || idx[1] >= n || idx[2] >= n)
            throw argument_error("connection index out of range: " + key);
        A[idx[0]](idx[1], idx[2]) = parse_component(spec, val);
    }
    return A;
}

inline PolyMatrix spec_to_acs(const FieldSpecFile& spec) {
    if (spec.case_tag != "acs") throw argument_error("spec is not an almost complex structure");
    const int m = spec.base_dim;
    PolyMatrix J(m, m, m);
    for (const auto& [key, val] : spec.components) {
        auto idx = parse_index_key(key, 2, m);
        J(idx[0], idx[1]) = parse_component(spec, val);
    }
    return J;
}

inline SuperconnectionField spec_to_super(const FieldSpecFile& spec) {
    if (spec.case_tag != "superconnection")
        throw argument_error("spec is not a superconnection");
    if (!spec.n_plus || !spec.n_minus)
        throw argument_error("superconnection spec needs a grading");
    const int m = spec.base_dim, np = *spec.n_plus, nm = *spec.n_minus;
    SuperconnectionField s = SuperconnectionField::zero({m, np, nm});
    for (const auto& [key, val] : spec.components) {
        auto [block, ik] = split_key(key);
        PolyScalar p = parse_component(spec, val);
        if (block == "chi_pm") {
            auto idx = parse_index_key(ik, 2, std::max(np, nm));
            s.chi_pm(idx[0], idx[1]) = p;
        } else if (block == "chi_mp") {
            auto idx = parse_index_key(ik, 2, std::max(np, nm));
            s.chi_mp(idx[0], idx[1]) = p;
        } else if (block == "A_plus") {
            auto idx = parse_index_key(ik, 3, std::max(m, np));
            s.A_plus[idx[0]](idx[1], idx[2]) = p;
        } else if (block == "A_minus") {
            auto idx = parse_index_key(ik, 3, std::max(m, nm));
            s.A_minus[idx[0]](idx[1], idx[2]) = p;
        } else {
            throw argument_error("unknown superconnection block: " + block);
        }
    }
    s.validate();
    return s;
}

/// Gauge element: a single matrix (or a (phi_plus, phi_minus) pair when the
/// keys are block-prefixed). If an inverse witness is supplied it is checked
/// exactly; otherwise the element must be unipotent.
struct GaugeElement {
    PolyMatrix phi;
    std::optional<PolyMatrix> phi_minus; // super case
    std::optional<PolyMatrix> inv;
    std::optional<PolyMatrix> inv_minus;
};

inline PolyMatrix read_square_block(const FieldSpecFile& spec,
                                    const std::map<std::string, std::string>& comps,
                                    const std::string& block) {
    int n = 0;
    for (const auto& [key, val] : comps) {
        auto [b, ik] = split_key(key);
        if (b != block) continue;
        auto idx = parse_index_key(ik, 2, kMaxFiberDim);
        n = std::max({n, idx[0] + 1, idx[1] + 1});
    }
    if (n == 0) throw argument_error("gauge block missing: " + (block.empty() ? "phi" : block));
    PolyMatrix out(n, n, spec.base_dim);
    for (const auto& [key, val] : comps) {
        auto [b, ik] = split_key(key);
        if (b != block) continue;
        auto idx = parse_index_key(ik, 2, n);
        out(idx[0], idx[1]) = parse_component(spec, val);
    }
    return out;
}

inline GaugeElement spec_to_gauge(const FieldSpecFile& spec) {
    if (spec.case_tag != "gauge") throw argument_error("spec is not a gauge element");
    GaugeElement g;
    bool paired = false;
    for (const auto& [key, val] : spec.components)
        if (split_key(key).first == "phi_plus") paired = true;
    if (paired) {
        g.phi = read_square_block(spec, spec.components, "phi_plus");
        g.phi_minus = read_square_block(spec, spec.components, "phi_minus");
    } else {
        g.phi = read_square_block(spec, spec.components, "");
    }
    if (!spec.inverse.empty()) {
        if (paired) {
            g.inv = read_square_block(spec, spec.inverse, "phi_plus");
            g.inv_minus = read_square_block(spec, spec.inverse, "phi_minus");
        } else {
            g.inv = read_square_block(spec, spec.inverse, "");
        }
    }
    return g;
}

inline std::vector<PolyScalar> spec_to_diffeo(const FieldSpecFile& spec) {
    if (spec.case_tag != "diffeo") throw argument_error("spec is not a diffeomorphism");
    const int m = spec.base_dim;
    std::vector<PolyScalar> phi(m, PolyScalar(m));
    for (const auto& [key, val] : spec.components) {
        auto idx = parse_index_key(key, 1, m);
        phi[idx[0]] = parse_component(spec, val);
    }
    return phi;
}

// ---- writers --------------------------------------------------------------

inline json spec_to_json(const FieldSpecFile& spec) {
    json doc;
    doc["format_version"] = spec.format_version;
    doc["base_dim"] = spec.base_dim;
    doc["case"] = spec.case_tag;
    json comps = json::object();
    for (const auto& [k, v] : spec.components) comps[k] = v; // std::map: sorted keys
    doc["components"] = comps;
    if (spec.n_plus && spec.n_minus)
        doc["grading"] = {{"n_plus", *spec.n_plus}, {"n_minus", *spec.n_minus}};
    if (!spec.inverse.empty()) {
        json inv = json::object();
        for (const auto& [k, v] : spec.inverse) inv[k] = v;
        doc["inverse"] = inv;
    }
    return doc;
}

inline void put_component(FieldSpecFile& spec, const std::string& key, const PolyScalar& p) {
    if (!p.is_zero()) spec.components[key] = poly_to_string(p);
}

inline FieldSpecFile connection_to_spec(const ConnectionField& A) {
    FieldSpecFile spec;
    spec.base_dim = static_cast<int>(A.size());
    spec.case_tag = "connection";
    for (size_t mu = 0; mu < A.size(); ++mu)
        for (int i = 0; i < A[mu].rows(); ++i)
            for (int j = 0; j < A[mu].cols(); ++j)
                put_component(spec,
                              std::to_string(mu + 1) + "," + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1),
                              A[mu](i, j));
    return spec;
}

inline FieldSpecFile acs_to_spec(const PolyMatrix& J) {
    FieldSpecFile spec;
    spec.base_dim = J.rows();
    spec.case_tag = "acs";
    for (int i = 0; i < J.rows(); ++i)
        for (int j = 0; j < J.cols(); ++j)
            put_component(spec, std::to_string(i + 1) + "," + std::to_string(j + 1), J(i, j));
    return spec;
}

inline FieldSpecFile super_to_spec(const SuperconnectionField& s) {
    FieldSpecFile spec;
    spec.base_dim = s.bundle.base_dim;
    spec.case_tag = "superconnection";
    spec.n_plus = s.bundle.n_plus;
    spec.n_minus = s.bundle.n_minus;
    auto put_mat = [&](const std::string& block, const PolyMatrix& x) {
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j)
                put_component(spec,
                              block + ":" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1),
                              x(i, j));
    };
    put_mat("chi_pm", s.chi_pm);
    put_mat("chi_mp", s.chi_mp);
    for (int mu = 0; mu < s.bundle.base_dim; ++mu) {
        for (int i = 0; i < s.A_plus[mu].rows(); ++i)
            for (int j = 0; j < s.A_plus[mu].cols(); ++j)
                put_component(spec,
                              "A_plus:" + std::to_string(mu + 1) + "," +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1),
                              s.A_plus[mu](i, j));
        for (int i = 0; i < s.A_minus[mu].rows(); ++i)
            for (int j = 0; j < s.A_minus[mu].cols(); ++j)
                put_component(spec,
                              "A_minus:" + std::to_string(mu + 1) + "," +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1),
                              s.A_minus[mu](i, j));
    }
    return spec;
}

/// Rationals are serialized as "p/q" strings, never floats; float sup-norms
/// live in clearly labelled norm fields.
inline std::string rat_str(const Rat& r) { return rat_to_string(r); }

inline std::vector<Rat> parse_point(const std::string& text, int m) {
    std::vector<Rat> p;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) p.push_back(rat_from_string(part));
    if (int(p.size()) != m) throw argument_error("point needs " + std::to_string(m) +
                                                 " comma-separated rationals");
    return p;
}

} // namespace curvlab::io
