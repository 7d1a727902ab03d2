#pragma once

#include <array>

#include "pmd/bands.hpp"
#include "pmd/certificate.hpp"
#include "pmd/hypergraph.hpp"

namespace pmd {

enum class Provenance { constructive, lp_fallback, singleton };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

struct CertifiedPart {
    Part part;
    WeightCertificate certificate;
    Provenance provenance;
};

/// An ordered edge partition where certificate i witnesses positivity of part
/// i against the host minus all earlier parts.
struct PmDecomposition {
    Hypergraph host;
    std::vector<CertifiedPart> parts;

    std::size_t size() const { return parts.size(); }
};

/// Replays the whole decomposition from scratch: parts partition the host's
/// edges and every certificate passes verify_certificate against its stage
/// remainder. Exact comparisons throughout.
bool verify_decomposition(const PmDecomposition& d);

/// Weight table of the 3-uniform band construction as affine expressions in
/// t, indexed [row][column] for a band of the given row count (>= 2).
std::vector<std::array<AffineExpr, 3>> rho_affine_table(int rows);

/// Certificate for a 3-uniform band against the stage remainder: all-ones for
/// singleton bands, otherwise the affine construction evaluated at the
/// minimal natural t satisfying the two terminal sign conditions.
/// Throws NoAdmissibleT if no such t exists (impossible unless there is a bug).
WeightCertificate rho_weights(const Part& part, const Hypergraph& remaining);

struct SynthesizedCertificate {
    WeightCertificate certificate;
    Provenance provenance;
};

/// Certificate for an r-uniform band (r >= 4): attempts the constructive
/// weight maps (odd/even r) by solving their defining equations simultaneously
/// as an affine system in t and imposing every stated ordering and sign
/// condition; falls back to exact LP synthesis when the construction is
/// under- or over-determined for the instance. The result always replays.
/// Throws CertificateUnobtainable if both routes fail.
SynthesizedCertificate phi_psi_weights(const Part& part, const Hypergraph& remaining, int r);

/// Fully certified band decomposition of the complete 3-uniform hypergraph;
/// part count is exactly (3n^2 - 15n + 20) / 2.
PmDecomposition pm_decompose_complete_3(int n);

/// Fully certified band decomposition of the complete r-uniform hypergraph in
/// lexicographic band order; dispatches to the 3-uniform construction at r=3.
PmDecomposition pm_decompose_complete_r(int n, int r);

} // namespace pmd
