#pragma once

#include "orbicurve/bundles.hpp"
#include "orbicurve/cohomology.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbicurve {

struct Witness {
    std::size_t summand = 0;
    std::size_t component = 0; // meaningful for semipositivity only
    std::string reason;
};

struct Decision {
    bool holds = true;
    std::vector<Witness> witnesses;
};

struct ConvexityVerdict {
    bool weakly_semipositive = false;
    bool weakly_convex = false;
    bool weakly_concave_dual = false;
    std::vector<Witness> witnesses;
};

/// deg L_i >= 0 on every component of the chain, for every summand.
Decision is_weakly_semipositive(const SplitBundle& B);

/// Σ_i h1(C, L_i(-x2)) = 0.
Decision is_weakly_convex_on(const SplitBundle& B);

/// Σ_i h0(C, L_i^∨(-x1)) = 0.
Decision is_weakly_concave_on_dual(const SplitBundle& B);

/// Runs all three procedures independently, then asserts
/// semipositive ⇒ convex and convex ⇔ concave-on-dual, throwing
/// InternalInconsistency if either fails.
ConvexityVerdict decide_convexity(const SplitBundle& B);

/// Line bundles on the chain built from the canonical bundle of each
/// component: ω_C(x1+x2) restricts to ω(X1+X2) everywhere, ω_C(x2) to ω(X2)
/// on the first component and ω(X1+X2) elsewhere.
ChainBundle log_canonical_bundle(const CurveChain& chain);
ChainBundle canonical_twisted_x2(const CurveChain& chain);

struct LogCanonicalCertificate {
    std::vector<bool> component_trivial;
    CohomologyReport log_canonical;   // ω_C(x1+x2)
    CohomologyReport canonical_x2;    // ω_C(x2)
};

class CertificateFailure : public std::logic_error {
public:
    CertificateFailure(const std::string& condition, const std::string& detail)
        : std::logic_error("log-canonical certificate failed: " + condition + " (" + detail + ")"),
          condition_(condition)
    {}
    [[nodiscard]] const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

/// Throws CertificateFailure naming the first condition that does not hold.
LogCanonicalCertificate log_canonical_certificate(const CurveChain& chain);

} // namespace orbicurve
