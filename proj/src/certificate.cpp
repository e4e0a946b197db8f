#include "edk/certificate.hpp"

#include <algorithm>

#include "edk/domination.hpp"

namespace edk {

namespace {

VerifyResult fail(int state, Vertex attack, std::string reason)
{
    return {false, CertificateViolation{state, attack, std::move(reason)}};
}

Vertex vertex_from_json(const Graph& g, const nlohmann::json& j)
{
    std::string label;
    if (j.is_string())
        label = j.get<std::string>();
    else if (j.is_number_integer())
        label = std::to_string(j.get<long long>());
    else
        throw std::invalid_argument("vertex label must be a string or integer");
    auto v = g.find_label(label);
    if (!v)
        throw std::invalid_argument("unknown vertex label '" + label + "'");
    return *v;
}

}  // namespace

VerifyResult verify_certificate(const Graph& g, const EternalCertificate& cert)
{
    const int n = g.order();
    const int members = static_cast<int>(cert.family.size());
    if (cert.k < 0)
        return fail(-1, -1, "negative k");
    if (cert.q < 1)
        return fail(-1, -1, "q must be positive");
    if (members == 0)
        return fail(-1, -1, "empty family");

    DistMatrix d(g);
    for (int s = 0; s < members; ++s) {
        const auto& c = cert.family[static_cast<std::size_t>(s)];
        if (static_cast<int>(c.size()) != cert.q)
            return fail(s, -1, "member has " + std::to_string(c.size()) + " guards, expected " + std::to_string(cert.q));
        for (Vertex v : c)
            if (v < 0 || v >= n)
                return fail(s, -1, "member holds a vertex outside the graph");
        if (!is_distance_k_dominating(d, c.positions(), cert.k))
            return fail(s, -1, "member is not distance-k dominating");
    }

    // Index responses by (state, attack) and reject duplicates or strays.
    std::vector<int> slot(static_cast<std::size_t>(members) * static_cast<std::size_t>(n), -1);
    for (std::size_t r = 0; r < cert.responses.size(); ++r) {
        const auto& resp = cert.responses[r];
        if (resp.state < 0 || resp.state >= members)
            return fail(resp.state, resp.attack, "response for a state outside the family");
        if (resp.attack < 0 || resp.attack >= n)
            return fail(resp.state, resp.attack, "response for an attack outside the graph");
        int& entry = slot[static_cast<std::size_t>(resp.state) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(resp.attack)];
        if (entry >= 0)
            return fail(resp.state, resp.attack, "duplicate response");
        entry = static_cast<int>(r);
    }

    for (int s = 0; s < members; ++s) {
        const auto& from = cert.family[static_cast<std::size_t>(s)];
        for (Vertex v = 0; v < n; ++v) {
            int r = slot[static_cast<std::size_t>(s) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
            if (r < 0)
                return fail(s, v, "missing response");
            const auto& resp = cert.responses[static_cast<std::size_t>(r)];
            if (resp.next < 0 || resp.next >= members)
                return fail(s, v, "successor is not a family member");
            const auto& to = cert.family[static_cast<std::size_t>(resp.next)];
            if (!to.contains(v))
                return fail(s, v, "successor does not occupy the attacked vertex");
            if (static_cast<int>(resp.moves.size()) != cert.q)
                return fail(s, v, "move list does not cover every guard");
            std::vector<Vertex> sources;
            std::vector<Vertex> targets;
            for (auto [a, b] : resp.moves) {
                if (a < 0 || a >= n || b < 0 || b >= n)
                    return fail(s, v, "move endpoint outside the graph");
                if (!d.within(a, b, cert.k))
                    return fail(s, v, "move longer than k");
                sources.push_back(a);
                targets.push_back(b);
            }
            std::sort(sources.begin(), sources.end());
            std::sort(targets.begin(), targets.end());
            if (!std::equal(sources.begin(), sources.end(), from.begin()))
                return fail(s, v, "moves do not start from the member's guards");
            if (!std::equal(targets.begin(), targets.end(), to.begin()))
                return fail(s, v, "moves do not land on the successor");
        }
    }
    return {};
}

nlohmann::json configuration_to_json(const Graph& g, const Configuration& c)
{
    auto arr = nlohmann::json::array();
    for (Vertex v : c)
        arr.push_back(g.label(v));
    return arr;
}

Configuration configuration_from_json(const Graph& g, const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("configuration must be an array");
    std::vector<Vertex> positions;
    for (const auto& item : j)
        positions.push_back(vertex_from_json(g, item));
    return Configuration(std::move(positions));
}

nlohmann::json certificate_to_json(const Graph& g, const EternalCertificate& cert)
{
    nlohmann::json out;
    out["k"] = cert.k;
    out["q"] = cert.q;
    out["family"] = nlohmann::json::array();
    for (const auto& c : cert.family)
        out["family"].push_back(configuration_to_json(g, c));
    out["response"] = nlohmann::json::array();
    for (const auto& r : cert.responses) {
        nlohmann::json moves = nlohmann::json::array();
        for (auto [a, b] : r.moves)
            moves.push_back({g.label(a), g.label(b)});
        out["response"].push_back(
            {{"state", r.state}, {"attack", g.label(r.attack)}, {"next", r.next}, {"moves", std::move(moves)}});
    }
    return out;
}

EternalCertificate certificate_from_json(const Graph& g, const nlohmann::json& j)
{
    try {
        EternalCertificate cert;
        cert.k = j.at("k").get<int>();
        cert.q = j.at("q").get<int>();
        // Family order is kept as written so indices in responses stay meaningful.
        for (const auto& c : j.at("family")) {
            if (!c.is_array())
                throw std::invalid_argument("family member must be an array");
            std::vector<Vertex> positions;
            for (const auto& item : c)
                positions.push_back(vertex_from_json(g, item));
            cert.family.emplace_back(std::move(positions));
        }
        for (const auto& r : j.at("response")) {
            EternalCertificate::Response resp;
            resp.state = r.at("state").get<int>();
            resp.attack = vertex_from_json(g, r.at("attack"));
            resp.next = r.at("next").get<int>();
            for (const auto& m : r.at("moves")) {
                if (!m.is_array() || m.size() != 2)
                    throw std::invalid_argument("move must be a [from, to] pair");
                resp.moves.emplace_back(vertex_from_json(g, m[0]), vertex_from_json(g, m[1]));
            }
            cert.responses.push_back(std::move(resp));
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace edk
