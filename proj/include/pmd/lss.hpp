#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmd/hypergraph.hpp"

namespace pmd {

/// One squarefree monomial prod_{i in e} x_{ij}; vars lists (i, j) pairs with
/// a common second index.
struct LssMonomial {
    std::vector<std::pair<int, int>> vars;
};

/// Generators f_e = sum_{j=1}^{d} prod_{i in e} x_{ij}, one per edge, in the
/// ring K[x_{ij} : i in [n], j in [d]].
struct LssPresentation {
    int n = 0;
    int d = 0;
    int r = 0;
    std::vector<std::vector<LssMonomial>> generators;
};

LssPresentation lss_generators(const Hypergraph& h, int d);

struct IdealClassification {
    bool radical;
    bool complete_intersection;
    /// One-sided: the threshold guarantees primality, it never refutes it.
    bool prime_guaranteed;
};

/// Classification thresholds for good forests: radical always, complete
/// intersection iff d >= max degree, prime guaranteed once d exceeds it.
/// Throws NotAGoodForest when no good-forest order exists.
IdealClassification classify_good_forest_ideal(const Hypergraph& h, int d);

enum class CasDialect { macaulay2, singular };

/// Throws UnknownDialect for anything but "macaulay2" or "singular".
CasDialect dialect_from_name(const std::string& name);
const char* dialect_name(CasDialect dialect);

/// A self-contained computer-algebra script declaring the ring and the
/// generator ideal, with radicality/primality checks to run externally.
/// Byte-deterministic for fixed input.
std::string export_cas_script(const LssPresentation& p, CasDialect dialect);

} // namespace pmd
