#include "tms/json_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tms/errors.hpp"

namespace tms {

namespace {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
    if (!s.exact()) return json(s.to_double());
    const mpq_class& q = s.rat();
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return json(static_cast<long>(q.get_num().get_si()));
    return json(q.get_str());
}

Scalar scalar_from_json(const json& v, bool exact, const std::string& what) {
    if (v.is_string()) {
        Scalar s = Scalar::parse(v.get<std::string>());
        return exact ? s : Scalar::real(s.to_double());
    }
    if (v.is_number_integer())
        return exact ? Scalar(static_cast<long>(v.get<long long>()))
                     : Scalar::real(static_cast<double>(v.get<long long>()));
    if (v.is_number_float()) {
        if (exact)
            throw ParseError(what + ": decimal literals are ambiguous in rational mode; "
                                    "use \"p/q\" strings");
        return Scalar::real(v.get<double>());
    }
    throw ParseError(what + ": expected a number or a \"p/q\" string");
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

}  // namespace

TimedMetricSpace space_from_json_text(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("space file must be a JSON object");

    bool exact = true;
    if (j.contains("scalar")) {
        std::string mode = j.at("scalar").get<std::string>();
        if (mode == "rational")
            exact = true;
        else if (mode == "float")
            exact = false;
        else
            throw ParseError("scalar must be \"rational\" or \"float\"");
    }
    NumericPolicy policy = exact ? NumericPolicy::exact_mode()
                                 : NumericPolicy::float_mode(
                                       j.contains("tolerance") ? j.at("tolerance").get<double>()
                                                               : 1e-9);
    if (exact && j.contains("tolerance"))
        throw ParseError("tolerance is a float-mode setting");

    if (!j.contains("labels") || !j.at("labels").is_array())
        throw ParseError("missing labels array");
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    const int n = static_cast<int>(labels.size());

    if (!j.contains("metric") || !j.at("metric").is_object())
        throw ParseError("missing metric object");
    const json& metric = j.at("metric");
    std::string kind = metric.value("kind", "");
    Matrix<Scalar> dist(n, n, Scalar(0));
    if (kind == "matrix") {
        const json& values = metric.at("values");
        if (!values.is_array() || static_cast<int>(values.size()) != n)
            throw ParseError("metric values must be an n x n array");
        for (int i = 0; i < n; ++i) {
            const json& row = values.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError("metric values must be an n x n array");
            for (int k = 0; k < n; ++k)
                dist(i, k) = scalar_from_json(row.at(k), exact, "metric value");
        }
    } else if (kind == "points") {
        const json& coords = metric.at("coords");
        if (!coords.is_array() || static_cast<int>(coords.size()) != n)
            throw ParseError("coords must hold one row per labelled point");
        std::string norm = metric.value("norm", "sup");
        if (norm != "sup" && norm != "euclidean")
            throw ParseError("norm must be \"sup\" or \"euclidean\"");
        if (norm == "euclidean" && exact)
            throw ParseError("the euclidean norm needs float mode");
        std::vector<std::vector<Scalar>> pts(n);
        std::size_t dim = 0;
        for (int i = 0; i < n; ++i) {
            const json& row = coords.at(i);
            if (!row.is_array()) throw ParseError("coords rows must be arrays");
            if (i == 0)
                dim = row.size();
            else if (row.size() != dim)
                throw ParseError("coords rows must share one dimension");
            for (const json& v : row) pts[i].push_back(scalar_from_json(v, exact, "coordinate"));
        }
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k) {
                Scalar d(0);
                if (norm == "sup") {
                    for (std::size_t c = 0; c < dim; ++c)
                        d = max(d, abs(pts[i][c] - pts[k][c]));
                } else {
                    double sum = 0;
                    for (std::size_t c = 0; c < dim; ++c) {
                        double gap = pts[i][c].to_double() - pts[k][c].to_double();
                        sum += gap * gap;
                    }
                    d = Scalar::real(std::sqrt(sum));
                }
                dist(i, k) = d;
                dist(k, i) = std::move(d);
            }
    } else {
        throw ParseError("metric kind must be \"matrix\" or \"points\"");
    }

    if (!j.contains("tau") || !j.at("tau").is_array() ||
        static_cast<int>(j.at("tau").size()) != n)
        throw ParseError("tau must hold one value per labelled point");
    std::vector<Scalar> tau;
    tau.reserve(n);
    for (const json& v : j.at("tau")) tau.push_back(scalar_from_json(v, exact, "tau value"));

    return TimedMetricSpace(MetricSpace(std::move(labels), std::move(dist), policy),
                            std::move(tau));
}

TimedMetricSpace load_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return space_from_json_text(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace {

json space_to_json(const TimedMetricSpace& s, const MetaEntries& meta) {
    json j;
    j["labels"] = s.metric().labels();
    json rows = json::array();
    for (int i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < s.size(); ++k) row.push_back(scalar_to_json(s.dist(i, k)));
        rows.push_back(std::move(row));
    }
    j["metric"] = {{"kind", "matrix"}, {"values", std::move(rows)}};
    json tau = json::array();
    for (int i = 0; i < s.size(); ++i) tau.push_back(scalar_to_json(s.tau(i)));
    j["tau"] = std::move(tau);
    j["scalar"] = s.exact() ? "rational" : "float";
    if (!s.exact()) j["tolerance"] = s.tolerance().to_double();
    if (!meta.empty()) {
        json m;
        for (const auto& [k, v] : meta) m[k] = v;
        j["meta"] = std::move(m);
    }
    return j;
}

}  // namespace

std::string space_to_json_text(const TimedMetricSpace& s, const MetaEntries& meta) {
    return space_to_json(s, meta).dump(2) + "\n";
}

void save_space(const TimedMetricSpace& s, const std::string& path, const MetaEntries& meta) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << space_to_json_text(s, meta);
}

std::string certificate_to_json_text(const BoundCertificate& cert) {
    json j;
    j["lower"] = scalar_to_json(cert.lower);
    json pairs = json::array();
    for (const auto& [a, b] : cert.lower_witness.pairs()) pairs.push_back(json::array({a, b}));
    j["lower_witness"] = std::move(pairs);
    j["upper"] = scalar_to_json(cert.upper);
    j["exact"] = cert.exact;
    return j.dump(2) + "\n";
}

std::string embedding_to_json_text(const FrechetEmbedding& e) {
    json j;
    j["ordering"] = e.ordering();
    j["timed"] = e.timed();
    json rows = json::array();
    for (int i = 0; i < e.point_count(); ++i) {
        json row = json::array();
        for (int k = 0; k < e.dim(); ++k) row.push_back(scalar_to_json(e.coord(i, k)));
        rows.push_back(std::move(row));
    }
    j["coords"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string null_result_to_json_text(const TimedMetricSpace& s,
                                     const NullDistanceResult& result,
                                     const CausalNullCheck& check,
                                     const Components& components, bool include_chains) {
    json j;
    json rows = json::array();
    for (int i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < s.size(); ++k) {
            const ExtScalar& v = result.dhat(i, k);
            row.push_back(v.infinite() ? json("inf") : scalar_to_json(v.finite()));
        }
        rows.push_back(std::move(row));
    }
    j["dhat"] = std::move(rows);
    j["causally_null"] = check.causally_null;
    if (!check.causally_null)
        j["counterexample"] = json::array({check.witness_i, check.witness_j});
    j["components"] = components.id;
    if (include_chains) {
        json chains = json::array();
        for (int i = 0; i < s.size(); ++i)
            for (int k = i + 1; k < s.size(); ++k) {
                std::vector<int> chain = result.chain(i, k);
                if (chain.empty()) continue;
                chains.push_back(json{{"from", i}, {"to", k}, {"chain", chain}});
            }
        j["chains"] = std::move(chains);
    }
    return j.dump(2) + "\n";
}

std::string glued_to_json_text(const GluedSpace& g) {
    const MetricSpace& q = g.quotient();
    json j;
    j["labels"] = q.labels();
    json rows = json::array();
    for (int i = 0; i < q.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < q.size(); ++k) row.push_back(scalar_to_json(q.dist(i, k)));
        rows.push_back(std::move(row));
    }
    j["metric"] = {{"kind", "matrix"}, {"values", std::move(rows)}};
    j["tau"] = std::vector<int>(q.size(), 0);
    j["scalar"] = q.exact() ? "rational" : "float";
    json ident = json::array();
    for (int x : g.identified_x2())
        ident.push_back(json{{"x2", x}, {"class", g.quotient_class(g.x2_left_node(x))}});
    j["identification"] = std::move(ident);
    return j.dump(2) + "\n";
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    json j = parse_text(buffer.str());
    if (!j.is_object()) throw ParseError("manifest must be a JSON object");
    Manifest m;
    if (!j.contains("spaces") || !j.at("spaces").is_array() || j.at("spaces").empty())
        throw ParseError("manifest needs a nonempty spaces array");
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    for (const json& v : j.at("spaces"))
        m.spaces.push_back((base / v.get<std::string>()).string());
    if (!j.contains("limit")) throw ParseError("manifest needs a limit path");
    m.limit = (base / j.at("limit").get<std::string>()).string();
    m.depth = j.value("depth", 0);
    return m;
}

}  // namespace tms
