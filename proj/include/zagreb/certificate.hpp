#pragma once

#include <cstdint>
#include <string>

#include "zagreb/graph6.hpp"
#include "zagreb/indices.hpp"

namespace zagreb {

/// Self-contained record of a claimed violation: the encoded graph plus all
/// claimed quantities, re-derivable by anyone from the encoding alone.
struct Certificate {
    std::string graph6;
    std::int64_t n = 0;
    std::int64_t m = 0;
    int128 m1 = 0;
    int128 m2 = 0;
    int128 gap = 0;
    std::string provenance;  // construction parameters or search seed
};

inline Certificate make_certificate(const Graph& g, std::string provenance) {
    IndexReport r = index_report(g);
    Certificate c;
    c.graph6 = encode_graph6(g);
    c.n = r.n;
    c.m = r.m;
    c.m1 = r.m1;
    c.m2 = r.m2;
    c.gap = r.gap;
    c.provenance = std::move(provenance);
    return c;
}

enum class CertificateStatus { accepted, decode_failure, mismatched_claim, not_violation };

inline std::string certificate_status_name(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::accepted: return "accepted";
        case CertificateStatus::decode_failure: return "decode-failure";
        case CertificateStatus::mismatched_claim: return "mismatched-claim";
        case CertificateStatus::not_violation: return "not-violation";
    }
    return "unknown";
}

struct CertificateCheck {
    CertificateStatus status = CertificateStatus::decode_failure;
    std::string reason;

    bool accepted() const { return status == CertificateStatus::accepted; }
};

/// Decode the graph, recompute everything, and accept only if every claimed
/// value matches and the gap is strictly positive.  Never throws for a bad
/// certificate; the rejection reason is part of the result.
inline CertificateCheck verify_certificate(const Certificate& c) {
    CertificateCheck out;
    Graph g{1, {}};
    try {
        g = decode_graph6(c.graph6);
    } catch (const error& e) {
        out.status = CertificateStatus::decode_failure;
        out.reason = e.what();
        return out;
    }
    IndexReport r;
    try {
        r = index_report(g);
    } catch (const error& e) {
        out.status = CertificateStatus::decode_failure;
        out.reason = std::string("decoded graph rejected: ") + e.what();
        return out;
    }
    auto mismatch = [&](const char* field, int128 claimed, int128 actual) {
        out.status = CertificateStatus::mismatched_claim;
        out.reason = std::string(field) + " claimed " + to_string(claimed) + " but recomputed " +
                     to_string(actual);
    };
    if (r.n != c.n) { mismatch("n", c.n, r.n); return out; }
    if (r.m != c.m) { mismatch("m", c.m, r.m); return out; }
    if (r.m1 != c.m1) { mismatch("m1", c.m1, r.m1); return out; }
    if (r.m2 != c.m2) { mismatch("m2", c.m2, r.m2); return out; }
    if (r.gap != c.gap) { mismatch("gap", c.gap, r.gap); return out; }
    if (r.gap <= 0) {
        out.status = CertificateStatus::not_violation;
        out.reason = "gap is " + to_string(r.gap) + ", not positive";
        return out;
    }
    out.status = CertificateStatus::accepted;
    out.reason = "all claims reproduce and gap > 0";
    return out;
}

} // namespace zagreb
