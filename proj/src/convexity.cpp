#include "orbicurve/convexity.hpp"

#include "orbicurve/errors.hpp"

namespace orbicurve {

Decision is_weakly_semipositive(const SplitBundle& B)
{
    Decision out;
    for (std::size_t i = 0; i < B.summands.size(); ++i) {
        const auto& parts = B.summands[i].parts;
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (parts[j].d < 0) {
                out.holds = false;
                out.witnesses.push_back({i, j, "degree " + parts[j].degree().str() + " < 0"});
            }
    }
    return out;
}

Decision is_weakly_convex_on(const SplitBundle& B)
{
    Decision out;
    for (std::size_t i = 0; i < B.summands.size(); ++i) {
        auto r = h_twisted(B.summands[i], MarkedPoint::X2, -1);
        if (r.h1 != 0) {
            out.holds = false;
            out.witnesses.push_back({i, 0, "h1(L(-x2)) = " + std::to_string(r.h1)});
        }
    }
    return out;
}

Decision is_weakly_concave_on_dual(const SplitBundle& B)
{
    Decision out;
    for (std::size_t i = 0; i < B.summands.size(); ++i) {
        auto r = h_twisted(dual(B.summands[i]), MarkedPoint::X1, -1);
        if (r.h0 != 0) {
            out.holds = false;
            out.witnesses.push_back({i, 0, "h0(L^v(-x1)) = " + std::to_string(r.h0)});
        }
    }
    return out;
}

ConvexityVerdict decide_convexity(const SplitBundle& B)
{
    auto semi = is_weakly_semipositive(B);
    auto convex = is_weakly_convex_on(B);
    auto concave = is_weakly_concave_on_dual(B);
    ConvexityVerdict v{semi.holds, convex.holds, concave.holds, {}};
    for (auto* d : {&semi, &convex, &concave})
        v.witnesses.insert(v.witnesses.end(), d->witnesses.begin(), d->witnesses.end());
    if (v.weakly_semipositive && !v.weakly_convex)
        throw InternalInconsistency("convexity", "semipositive bundle is not weakly convex");
    if (v.weakly_convex != v.weakly_concave_dual)
        throw InternalInconsistency("convexity", "weak convexity and weak concavity of the dual disagree");
    return v;
}

namespace {

ChainBundle from_canonical(const CurveChain& chain, bool twist_first_x1)
{
    std::vector<EqLineBundle> parts;
    for (std::size_t j = 0; j < chain.components.size(); ++j) {
        EqLineBundle w = twist_marked(canonical_bundle(chain.components[j]), MarkedPoint::X2, 1);
        if (j > 0 || twist_first_x1) w = twist_marked(w, MarkedPoint::X1, 1);
        parts.push_back(w);
    }
    return ChainBundle::make(chain, std::move(parts));
}

} // namespace

ChainBundle log_canonical_bundle(const CurveChain& chain)
{
    return from_canonical(chain, true);
}

ChainBundle canonical_twisted_x2(const CurveChain& chain)
{
    return from_canonical(chain, false);
}

LogCanonicalCertificate log_canonical_certificate(const CurveChain& chain)
{
    LogCanonicalCertificate cert;
    auto log = log_canonical_bundle(chain);
    for (std::size_t j = 0; j < log.parts.size(); ++j) {
        bool trivial = log.parts[j] == EqLineBundle::trivial(chain.components[j]);
        cert.component_trivial.push_back(trivial);
        if (!trivial)
            throw CertificateFailure("omega(x1+x2) trivial on component",
                                     "component " + std::to_string(j) + " has " + log.parts[j].str());
    }
    cert.log_canonical = h_chain(log);
    if (cert.log_canonical.h0 != 1 || cert.log_canonical.h1 != 0)
        throw CertificateFailure("h0(omega(x1+x2)) = 1, h1 = 0",
                                 "h0=" + std::to_string(cert.log_canonical.h0) +
                                     " h1=" + std::to_string(cert.log_canonical.h1));
    cert.canonical_x2 = h_chain(canonical_twisted_x2(chain));
    if (cert.canonical_x2.h0 != 0 || cert.canonical_x2.h1 != 0)
        throw CertificateFailure("h0(omega(x2)) = h1(omega(x2)) = 0",
                                 "h0=" + std::to_string(cert.canonical_x2.h0) +
                                     " h1=" + std::to_string(cert.canonical_x2.h1));
    return cert;
}

} // namespace orbicurve
