#include "ham/report.hpp"

#include <json.hpp>

#include "ham/io.hpp"

namespace ham {

using nlohmann::json;

namespace {

json set_to_json(const VertexSet& s)
{
    json arr = json::array();
    for (int v : s)
        arr.push_back(v);
    return arr;
}

json certificate_json(const Certificate& cert)
{
    json j;
    if (std::holds_alternative<TooSmallCert>(cert)) {
        j["type"] = "too-small";
    } else if (const auto* cv = std::get_if<CutVertexCert>(&cert)) {
        j["type"] = "cut-vertex";
        j["vertex"] = cv->vertex;
    } else if (const auto* dc = std::get_if<DisconnectedCert>(&cert)) {
        j["type"] = "disconnected";
        j["component"] = set_to_json(dc->component);
    } else if (const auto* kc = std::get_if<KernelCert>(&cert)) {
        j["type"] = "kernel";
        j["kernel_graph6"] = serialize_graph(kc->kernel, GraphFormat::graph6);
        j["vertex_map"] = kc->vertex_map;
    } else if (const auto* ec = std::get_if<ExhaustiveCert>(&cert)) {
        j["type"] = "exhaustive";
        j["method"] = ec->method;
    } else if (const auto* cc = std::get_if<CutCertificate>(&cert)) {
        j["type"] = "cut";
        j["S"] = set_to_json(cc->s);
        j["deficiency"] = cc->deficiency;
        j["epsilon"] = cc->epsilon;
        j["seed"] = cc->seed;
    }
    return j;
}

} // namespace

std::string report_to_json(const RunReport& report, bool pretty)
{
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["outcome"] = report.outcome;
    j["strategy"] = report.strategy;
    j["guard"] = report.guard;
    j["n"] = report.n;
    j["k_count"] = report.k_count;
    j["k_degree"] = report.k_degree;
    j["wall_time_ms"] = report.wall_time_ms;
    j["seed"] = report.seed;
    if (report.epsilon > 0)
        j["epsilon"] = report.epsilon;
    if (report.cycle)
        j["cycle"] = *report.cycle;
    if (report.certificate)
        j["certificate"] = certificate_json(*report.certificate);
    if (!report.message.empty())
        j["message"] = report.message;
    return j.dump(pretty ? 2 : -1);
}

std::string certificate_to_json(const Certificate& cert, bool pretty)
{
    return certificate_json(cert).dump(pretty ? 2 : -1);
}

std::string log_to_json(const AugmentationLog& log)
{
    json arr = json::array();
    for (auto [u, v] : log)
        arr.push_back(json::array({u, v}));
    return arr.dump();
}

std::string kernel_sidecar_json(const KernelResult& result, bool pretty)
{
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["vertex_map"] = result.vertex_map;
    j["C_prime"] = set_to_json(result.c_prime);
    json matching = json::array();
    for (const auto& e : result.matching)
        matching.push_back({{"c", e.c}, {"s", e.v}, {"copy", e.which}});
    j["matching"] = matching;
    j["identity"] = result.identity;
    return j.dump(pretty ? 2 : -1);
}

CutCertificate cut_certificate_from_json(const std::string& text, int n)
{
    json j = json::parse(text);
    if (j.contains("certificate"))
        j = j["certificate"]; // accept a whole run report too
    if (j.value("type", "") != "cut")
        throw std::invalid_argument("certificate JSON is not of type \"cut\"");
    CutCertificate cert;
    cert.s = Bitset(n);
    for (int v : j.at("S").get<std::vector<int>>()) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("certificate S has out-of-range vertex");
        cert.s.set(v);
    }
    cert.deficiency = j.at("deficiency").get<int>();
    cert.epsilon = j.value("epsilon", 1e-6);
    cert.seed = j.value("seed", uint64_t{0});
    return cert;
}

} // namespace ham
