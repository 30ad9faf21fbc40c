#include <catch2/catch_amalgamated.hpp>

#include "zagreb/certificate.hpp"
#include "zagreb/families.hpp"
#include "zagreb/serialize.hpp"

#include "support.hpp"

using zagreb::Certificate;
using zagreb::CertificateStatus;
using zagreb::Graph;

namespace {
Graph violating_union() {
    return zagreb::disjoint_union(zagreb::star_graph(6), zagreb::cycle_graph(3));
}
} // namespace

TEST_CASE("certificates capture the recomputed quantities") {
    const Certificate c = zagreb::make_certificate(violating_union(), "unit-test");
    CHECK(c.graph6 == "Hsa??CB");
    CHECK(c.n == 9);
    CHECK(c.m == 8);
    CHECK(c.m1 == 42);
    CHECK(c.m2 == 37);
    CHECK(c.gap == 3);
    CHECK(c.provenance == "unit-test");
}

TEST_CASE("a faithful certificate is accepted") {
    const auto check = zagreb::verify_certificate(zagreb::make_certificate(violating_union(), "t"));
    CHECK(check.status == CertificateStatus::accepted);
    CHECK(check.accepted());
}

TEST_CASE("claim mismatches are rejected field by field") {
    Certificate c = zagreb::make_certificate(violating_union(), "t");
    c.gap = 4;
    const auto wrong_gap = zagreb::verify_certificate(c);
    CHECK(wrong_gap.status == CertificateStatus::mismatched_claim);
    CHECK(!wrong_gap.accepted());
    CHECK(!wrong_gap.reason.empty());

    Certificate c2 = zagreb::make_certificate(violating_union(), "t");
    c2.m1 = 41;
    CHECK(zagreb::verify_certificate(c2).status == CertificateStatus::mismatched_claim);

    Certificate c3 = zagreb::make_certificate(violating_union(), "t");
    c3.n = 10;
    CHECK(zagreb::verify_certificate(c3).status == CertificateStatus::mismatched_claim);
}

TEST_CASE("undecodable certificates are rejected without throwing") {
    Certificate c = zagreb::make_certificate(violating_union(), "t");
    c.graph6 = "not graph6 at all \x01";
    const auto check = zagreb::verify_certificate(c);
    CHECK(check.status == CertificateStatus::decode_failure);
    CHECK(!check.accepted());
}

TEST_CASE("non-violations cannot be certified") {
    const auto check = zagreb::verify_certificate(
        zagreb::make_certificate(zagreb::cycle_graph(5), "t"));
    CHECK(check.status == CertificateStatus::not_violation);
    CHECK(!check.accepted());
}

TEST_CASE("certificate status names") {
    CHECK(zagreb::certificate_status_name(CertificateStatus::accepted) == "accepted");
    CHECK(zagreb::certificate_status_name(CertificateStatus::decode_failure) == "decode-failure");
    CHECK(zagreb::certificate_status_name(CertificateStatus::mismatched_claim) ==
          "mismatched-claim");
    CHECK(zagreb::certificate_status_name(CertificateStatus::not_violation) == "not-violation");
}

TEST_CASE("certificate json round trip") {
    const Certificate c = zagreb::make_certificate(violating_union(), "round-trip");
    const zagreb::json j = zagreb::certificate_json(c);
    CHECK(j.size() == 7);
    CHECK(j["graph6"] == "Hsa??CB");
    CHECK(j["n"] == 9);
    CHECK(j["m"] == 8);
    CHECK(j["m1"] == 42);
    CHECK(j["m2"] == 37);
    CHECK(j["gap"] == 3);
    CHECK(j["provenance"] == "round-trip");

    const Certificate back = zagreb::certificate_from_json(j);
    CHECK(back.graph6 == c.graph6);
    CHECK(back.gap == c.gap);
    CHECK(zagreb::verify_certificate(back).accepted());

    CHECK_THROWS_AS(zagreb::certificate_from_json(zagreb::json{{"graph6", "Bw"}}),
                    zagreb::parse_error);
}
