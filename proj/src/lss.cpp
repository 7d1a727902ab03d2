#include "pmd/lss.hpp"

#include <sstream>

namespace pmd {

LssPresentation lss_generators(const Hypergraph& h, int d) {
    if (d < 1)
        fail(Errc::invalid_parameters, "d must be positive");
    LssPresentation p;
    p.n = h.vertex_count();
    p.d = d;
    p.r = h.uniformity();
    for (const Edge& e : h.edges()) {
        std::vector<LssMonomial> monomials;
        for (int j = 1; j <= d; ++j) {
            LssMonomial mono;
            for (Vertex i : e)
                mono.vars.emplace_back(i, j);
            monomials.push_back(std::move(mono));
        }
        p.generators.push_back(std::move(monomials));
    }
    return p;
}

IdealClassification classify_good_forest_ideal(const Hypergraph& h, int d) {
    if (d < 1)
        fail(Errc::invalid_parameters, "d must be positive");
    if (!good_forest_order(h))
        fail(Errc::not_a_good_forest, "hypergraph admits no good-forest edge order");
    const int delta = max_degree(h);
    return IdealClassification{true, d >= delta, d >= delta + 1};
}

CasDialect dialect_from_name(const std::string& name) {
    if (name == "macaulay2")
        return CasDialect::macaulay2;
    if (name == "singular")
        return CasDialect::singular;
    fail(Errc::unknown_dialect, "'" + name + "' (expected macaulay2 or singular)");
}

const char* dialect_name(CasDialect dialect) {
    return dialect == CasDialect::macaulay2 ? "macaulay2" : "singular";
}

namespace {

std::string monomial_text(const LssMonomial& mono, CasDialect dialect) {
    std::ostringstream out;
    for (std::size_t k = 0; k < mono.vars.size(); ++k) {
        if (k > 0)
            out << "*";
        const auto [i, j] = mono.vars[k];
        if (dialect == CasDialect::macaulay2)
            out << "x_(" << i << "," << j << ")";
        else
            out << "x(" << i << ")(" << j << ")";
    }
    return out.str();
}

std::string generator_text(const std::vector<LssMonomial>& gen, CasDialect dialect) {
    std::ostringstream out;
    for (std::size_t k = 0; k < gen.size(); ++k) {
        if (k > 0)
            out << " + ";
        out << monomial_text(gen[k], dialect);
    }
    return out.str();
}

} // namespace

std::string export_cas_script(const LssPresentation& p, CasDialect dialect) {
    std::ostringstream out;
    if (dialect == CasDialect::macaulay2) {
        out << "-- LSS ideal of a hypergraph on " << p.n << " vertices, d = " << p.d << "\n";
        out << "R = QQ[x_(1,1)..x_(" << p.n << "," << p.d << ")];\n";
        if (p.generators.empty()) {
            out << "I = ideal(0_R);\n";
        } else {
            out << "I = ideal(\n";
            for (std::size_t g = 0; g < p.generators.size(); ++g)
                out << "  " << generator_text(p.generators[g], dialect)
                    << (g + 1 < p.generators.size() ? ",\n" : "\n");
            out << ");\n";
        }
        out << "print(I == radical I);\n";
        out << "print(codim I == numgens I);\n";
        out << "print(isPrime I);\n";
    } else {
        out << "// LSS ideal of a hypergraph on " << p.n << " vertices, d = " << p.d << "\n";
        out << "LIB \"primdec.lib\";\n";
        out << "ring R = 0, (x(1.." << p.n << ")(1.." << p.d << ")), dp;\n";
        if (p.generators.empty()) {
            out << "ideal I = 0;\n";
        } else {
            out << "ideal I =\n";
            for (std::size_t g = 0; g < p.generators.size(); ++g)
                out << "  " << generator_text(p.generators[g], dialect)
                    << (g + 1 < p.generators.size() ? ",\n" : ";\n");
        }
        out << "ideal Rad = radical(I);\n";
        out << "size(reduce(Rad, groebner(I))); // 0 iff I is radical\n";
        out << "primdecGTZ(I); // one component iff I is prime (tiny inputs only)\n";
    }
    return out.str();
}

} // namespace pmd
