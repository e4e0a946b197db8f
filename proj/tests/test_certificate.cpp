#include "doctest.h"

#include <random>

#include "edk/certificate.hpp"
#include "edk/families.hpp"
#include "edk/io.hpp"

using namespace edk;

namespace {

EternalCertificate solved(const Graph& g, int k)
{
    return eternal_number(g, k).certificate;
}

}  // namespace

TEST_SUITE("certificate")
{
    TEST_CASE("solver output verifies")
    {
        Graph p5 = make_path(5);
        CHECK(verify_certificate(p5, solved(p5, 2)).ok);
        Graph c10 = make_cycle(10);
        CHECK(verify_certificate(c10, solved(c10, 2)).ok);
    }

    TEST_CASE("a response pointing outside the family is rejected")
    {
        Graph p5 = make_path(5);
        EternalCertificate cert = solved(p5, 2);
        cert.responses[3].next = static_cast<int>(cert.family.size());
        VerifyResult r = verify_certificate(p5, cert);
        CHECK_FALSE(r.ok);
        REQUIRE(r.violation);
        CHECK(r.violation->state == cert.responses[3].state);
        CHECK(r.violation->attack == cert.responses[3].attack);
    }

    TEST_CASE("a move longer than k is rejected")
    {
        Graph p5 = make_path(5);
        EternalCertificate cert = solved(p5, 2);
        DistMatrix d(p5);
        bool mutated = false;
        for (auto& resp : cert.responses) {
            auto& m = resp.moves;
            if (m.size() == 2 && d(m[0].first, m[1].second) > 2 && m[0].second != m[1].second) {
                std::swap(m[0].second, m[1].second);
                mutated = true;
                break;
            }
        }
        REQUIRE(mutated);
        VerifyResult r = verify_certificate(p5, cert);
        CHECK_FALSE(r.ok);
        REQUIRE(r.violation);
        CHECK(r.violation->reason.find("longer") != std::string::npos);
    }

    TEST_CASE("other corruptions")
    {
        Graph p5 = make_path(5);
        const EternalCertificate good = solved(p5, 2);

        EternalCertificate missing = good;
        missing.responses.pop_back();
        CHECK_FALSE(verify_certificate(p5, missing).ok);

        EternalCertificate not_dominating = good;
        not_dominating.family[0] = Configuration{0, 0};
        CHECK_FALSE(verify_certificate(p5, not_dominating).ok);

        EternalCertificate wrong_target = good;
        wrong_target.responses[0].next = wrong_target.responses[0].state;
        wrong_target.responses[0].attack = 4;
        CHECK_FALSE(verify_certificate(p5, wrong_target).ok);

        EternalCertificate empty = good;
        empty.family.clear();
        empty.responses.clear();
        CHECK_FALSE(verify_certificate(p5, empty).ok);

        EternalCertificate wrong_k = good;
        wrong_k.k = 1;
        CHECK_FALSE(verify_certificate(p5, wrong_k).ok);
    }

    TEST_CASE("JSON round trip uses labels")
    {
        Graph g = parse_graph("a b\nb c\nc d\nd e\n").graph;
        EternalCertificate cert = solved(g, 2);
        nlohmann::json j = certificate_to_json(g, cert);
        CHECK(j["k"] == 2);
        CHECK(j["q"] == 2);
        CHECK(j["family"][0][0].is_string());
        CHECK(j["response"][0].contains("moves"));
        EternalCertificate back = certificate_from_json(g, j);
        CHECK(back.family == cert.family);
        CHECK(back.responses.size() == cert.responses.size());
        CHECK(verify_certificate(g, back).ok);
        CHECK(configuration_from_json(g, configuration_to_json(g, Configuration{1, 1, 3})) == Configuration{1, 1, 3});
    }

    TEST_CASE("malformed JSON is an input error")
    {
        Graph p3 = make_path(3);
        CHECK_THROWS_AS(certificate_from_json(p3, nlohmann::json::parse(R"({"k": 1})")), std::invalid_argument);
        CHECK_THROWS_AS(certificate_from_json(
                            p3, nlohmann::json::parse(R"({"k":1,"q":1,"family":[["zz"]],"response":[]})")),
                        std::invalid_argument);
        CHECK(configuration_from_json(p3, nlohmann::json::parse("[2, 0]")) == Configuration{0, 2});
    }

    TEST_CASE("certificates of random graphs verify and survive serialisation")
    {
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 15; ++trial) {
            Graph g = random_connected_graph(3 + trial % 7, 0.3, rng);
            const int k = 1 + trial % 3;
            EternalCertificate cert = solved(g, k);
            CHECK(verify_certificate(g, cert).ok);
            CHECK(verify_certificate(g, certificate_from_json(g, certificate_to_json(g, cert))).ok);
        }
    }
}
