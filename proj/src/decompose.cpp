#include "pmd/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pmd/simplex.hpp"

namespace pmd {

const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::constructive: return "constructive";
    case Provenance::lp_fallback: return "LP-fallback";
    case Provenance::singleton: return "singleton";
    }
    return "unknown";
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "constructive")
        return Provenance::constructive;
    if (name == "LP-fallback")
        return Provenance::lp_fallback;
    if (name == "singleton")
        return Provenance::singleton;
    fail(Errc::parse_error, "unknown provenance '" + name + "'");
}

namespace {

/// Conjunction of affine inequalities in t, kept as one rational interval.
class TInterval {
public:
    /// Adds e > 0 (strict) or e >= 0.
    void require(const AffineExpr& e, bool strict) {
        if (e.slope == 0) {
            if (e.constant < 0 || (strict && e.constant == 0))
                empty_ = true;
            return;
        }
        const Rational bound = -e.constant / e.slope;
        if (e.slope > 0)
            tighten_lower(bound, strict);
        else
            tighten_upper(bound, strict);
    }

    /// Least natural number (t >= 1) in the interval, if any.
    std::optional<Rational> minimal_natural() const {
        if (empty_)
            return std::nullopt;
        Rational t(1);
        if (lower_) {
            Rational ceil = rational_ceil(*lower_);
            if (lower_strict_ && ceil == *lower_)
                ceil += 1;
            t = std::max(t, ceil);
        }
        if (upper_ && (t > *upper_ || (upper_strict_ && t == *upper_)))
            return std::nullopt;
        return t;
    }

    bool contains(const Rational& t) const {
        if (empty_)
            return false;
        if (lower_ && (t < *lower_ || (lower_strict_ && t == *lower_)))
            return false;
        if (upper_ && (t > *upper_ || (upper_strict_ && t == *upper_)))
            return false;
        return true;
    }

private:
    static Rational rational_ceil(const Rational& q) {
        using boost::multiprecision::mpz_int;
        mpz_int num = numerator(q);
        mpz_int den = denominator(q);
        mpz_int quot = num / den; // truncates toward zero
        if (quot * den < num)
            quot += 1;
        return Rational(quot);
    }

    void tighten_lower(const Rational& b, bool strict) {
        if (!lower_ || b > *lower_ || (b == *lower_ && strict))
            lower_ = b, lower_strict_ = strict;
    }
    void tighten_upper(const Rational& b, bool strict) {
        if (!upper_ || b < *upper_ || (b == *upper_ && strict))
            upper_ = b, upper_strict_ = strict;
    }

    std::optional<Rational> lower_;
    std::optional<Rational> upper_;
    bool lower_strict_ = false;
    bool upper_strict_ = false;
    bool empty_ = false;
};

WeightCertificate all_ones(const Edge& e) {
    WeightCertificate cert;
    for (Vertex v : e)
        cert.weights[v] = 1;
    return cert;
}

} // namespace

std::vector<std::array<AffineExpr, 3>> rho_affine_table(int rows) {
    if (rows < 2)
        fail(Errc::invalid_parameters, "affine table needs at least two rows");
    const Rational half(1, 2);
    std::vector<std::array<AffineExpr, 3>> rho(static_cast<std::size_t>(rows));
    auto& first = rho[0];
    first[0] = AffineExpr{0, 1};      // t
    first[1] = AffineExpr{1, -half};  // -(t/2 - 1)
    first[2] = first[1];
    const AffineExpr one{1, 0};
    auto& second = rho[1];
    second[0] = -(one + first[1] + first[2]);
    second[2] = -(one + first[0] + first[1]);
    second[1] = one - (second[0] + second[2]);
    for (int i = 2; i < rows; ++i) {
        auto& row = rho[static_cast<std::size_t>(i)];
        const auto& prev = rho[static_cast<std::size_t>(i - 1)];
        const auto& prev2 = rho[static_cast<std::size_t>(i - 2)];
        row[0] = -(one + prev[1] + prev2[1]);
        row[2] = -(one + prev[0] + prev[1]);
        row[1] = one - (row[0] + row[2]);
    }
    return rho;
}

WeightCertificate rho_weights(const Part& part, const Hypergraph& remaining) {
    const int rows = static_cast<int>(part.edges.size());
    if (rows == 0)
        fail(Errc::invalid_parameters, "empty band has no certificate");
    (void)Matching(remaining, part.edges); // the band must still be present
    if (rows == 1)
        return all_ones(part.edges.front());

    const auto rho = rho_affine_table(rows);
    TInterval interval;
    interval.require(rho.back()[0], true);   // rho(x_{a+1,1}) > 0
    interval.require(-rho.back()[1], false); // rho(x_{a+1,2}) <= 0
    const auto t = interval.minimal_natural();
    if (!t)
        fail(Errc::no_admissible_t,
             "no natural t satisfies the terminal sign conditions for band of " +
                 std::to_string(rows) + " rows");

    WeightCertificate cert;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < 3; ++j)
            cert.weights[part.edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]] =
                rho[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].at(*t);
    return cert;
}

namespace {

/// Position bookkeeping for the r-uniform weight maps: rows in layout order,
/// vertices in ascending order, and the serpentine column traversal that the
/// construction's "consecutive elements" rule walks through.
struct BandFrame {
    const Part* part;
    int rows;
    int r;
    std::vector<Vertex> seq;          // ascending vertex sequence
    std::map<Vertex, int> pos;        // vertex -> index in seq
    std::vector<std::vector<int>> id; // [row][col] -> unknown index (= seq position)

    bool build(const Part& p, int uniformity) {
        part = &p;
        rows = static_cast<int>(p.edges.size());
        r = uniformity;
        for (const Edge& e : p.edges)
            seq.insert(seq.end(), e.begin(), e.end());
        std::sort(seq.begin(), seq.end());
        for (std::size_t i = 0; i < seq.size(); ++i)
            pos[seq[i]] = static_cast<int>(i);

        // The ascending vertex order must coincide with the serpentine
        // traversal (odd columns top-down, even columns bottom-up); bail out
        // otherwise so the caller can fall back to LP synthesis.
        std::vector<Vertex> serpentine;
        for (int col = 0; col < r; ++col) {
            if (col % 2 == 0)
                for (int row = 0; row < rows; ++row)
                    serpentine.push_back(vertex_at(row, col));
            else
                for (int row = rows - 1; row >= 0; --row)
                    serpentine.push_back(vertex_at(row, col));
        }
        if (serpentine != seq)
            return false;

        id.assign(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(r)));
        for (int row = 0; row < rows; ++row)
            for (int col = 0; col < r; ++col)
                id[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                    pos.at(vertex_at(row, col));
        return true;
    }

    Vertex vertex_at(int row, int col) const {
        return part->edges[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    }
};

/// One linear equation sum(coeff_i * w_i) + t_coeff * t = rhs.
struct AffineEquation {
    std::map<int, Rational> coeffs;
    Rational t_coeff{0};
    Rational rhs{0};
};

/// Solves the stacked equations for all weights as affine expressions in t.
/// Returns false when the system is inconsistent or leaves a weight (or a
/// coupling of t) undetermined.
bool solve_affine_system(int unknowns, const std::vector<AffineEquation>& equations,
                         std::vector<AffineExpr>& solution, std::optional<Rational>& forced_t) {
    const Eigen::Index n = unknowns;
    const Eigen::Index rows = static_cast<Eigen::Index>(equations.size());
    // Columns: weights, then t, then the right-hand side.
    MatrixXq a = MatrixXq::Zero(rows, n + 2);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (const auto& [j, c] : equations[static_cast<std::size_t>(i)].coeffs)
            a(i, j) += c;
        a(i, n) = equations[static_cast<std::size_t>(i)].t_coeff;
        a(i, n + 1) = equations[static_cast<std::size_t>(i)].rhs;
    }

    std::vector<Eigen::Index> pivot_row_of(static_cast<std::size_t>(n) + 1, -1);
    Eigen::Index next_row = 0;
    for (Eigen::Index col = 0; col <= n && next_row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = next_row; i < rows; ++i)
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        a.row(pivot).swap(a.row(next_row));
        a.row(next_row) /= a(next_row, col);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == next_row || a(i, col) == 0)
                continue;
            const Rational factor = a(i, col);
            a.row(i) -= factor * a.row(next_row);
        }
        pivot_row_of[static_cast<std::size_t>(col)] = next_row;
        ++next_row;
    }
    for (Eigen::Index i = next_row; i < rows; ++i)
        if (a(i, n + 1) != 0)
            return false; // inconsistent

    for (Eigen::Index j = 0; j < n; ++j)
        if (pivot_row_of[static_cast<std::size_t>(j)] < 0)
            return false; // some weight left free

    forced_t.reset();
    const Eigen::Index t_row = pivot_row_of[static_cast<std::size_t>(n)];
    if (t_row >= 0)
        forced_t = a(t_row, n + 1);

    solution.assign(static_cast<std::size_t>(n), AffineExpr{});
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index i = pivot_row_of[static_cast<std::size_t>(j)];
        solution[static_cast<std::size_t>(j)] = AffineExpr{a(i, n + 1), -a(i, n)};
    }
    return true;
}

/// Defining equations of the maps phi (odd r) and psi (even r), stated on the
/// band frame. Equations whose trailing run of "consecutive elements" would
/// leave the vertex sequence are skipped; the simultaneous solve plus the LP
/// fallback cover those boundary rows.
std::vector<AffineEquation> weight_map_equations(const BandFrame& f) {
    const int r = f.r;
    const int rows = f.rows;
    const bool odd = (r % 2 == 1);
    const int total = rows * r;
    std::vector<AffineEquation> eqs;

    // phi(x_11) = t
    {
        AffineEquation e;
        e.coeffs[f.id[0][0]] = 1;
        e.t_coeff = -1;
        eqs.push_back(std::move(e));
    }

    // First-row pairs: phi(x_{1i}) = phi(x_{1,i+1}) = -(1 + x_11 + ... +
    // x_{1,i-1} + the next r-i elements after x_{1,i+1} in the sequence).
    const int pair_limit = odd ? r - 1 : r - 2;
    for (int i = 2; i <= pair_limit; i += 2) {
        AffineEquation equal;
        equal.coeffs[f.id[0][static_cast<std::size_t>(i - 1)]] += 1;
        equal.coeffs[f.id[0][static_cast<std::size_t>(i)]] += -1;
        eqs.push_back(std::move(equal));

        const int run_start = f.id[0][static_cast<std::size_t>(i)] + 1; // after x_{1,i+1}
        if (run_start + (r - i) <= total) {
            AffineEquation e;
            e.rhs = -1;
            e.coeffs[f.id[0][static_cast<std::size_t>(i - 1)]] += 1;
            for (int j = 1; j <= i - 1; ++j)
                e.coeffs[f.id[0][static_cast<std::size_t>(j - 1)]] += 1;
            for (int s = 0; s < r - i; ++s)
                e.coeffs[run_start + s] += 1;
            eqs.push_back(std::move(e));
        }
    }

    // Last-column equations: backward reference for odd r, forward for even r.
    for (int row = 1; row < rows; ++row) {
        AffineEquation e;
        e.rhs = -1;
        if (odd) {
            e.coeffs[f.id[static_cast<std::size_t>(row)][static_cast<std::size_t>(r - 1)]] += 1;
            for (int j = 0; j < r - 1; ++j)
                e.coeffs[f.id[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(j)]] +=
                    1;
        } else {
            e.coeffs[f.id[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(r - 1)]] +=
                1;
            for (int j = 0; j < r - 1; ++j)
                e.coeffs[f.id[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)]] += 1;
        }
        eqs.push_back(std::move(e));
    }

    // Row equations for rows 2..a+1: phi(x_{lk}) = -(1 + x_{l1} + ... +
    // x_{l,k-1} + the next r-k elements after x_{l,k+1}).
    for (int row = 1; row < rows; ++row)
        for (int k = 1; k <= r - 1; ++k) {
            const int run_start =
                f.id[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] + 1;
            if (run_start + (r - k) > total)
                continue;
            AffineEquation e;
            e.rhs = -1;
            e.coeffs[f.id[static_cast<std::size_t>(row)][static_cast<std::size_t>(k - 1)]] += 1;
            for (int j = 1; j <= k - 1; ++j)
                e.coeffs[f.id[static_cast<std::size_t>(row)][static_cast<std::size_t>(j - 1)]] +=
                    1;
            for (int s = 0; s < r - k; ++s)
                e.coeffs[run_start + s] += 1;
            eqs.push_back(std::move(e));
        }

    // Every row sums to 1.
    for (int row = 0; row < rows; ++row) {
        AffineEquation e;
        e.rhs = 1;
        for (int j = 0; j < r; ++j)
            e.coeffs[f.id[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)]] += 1;
        eqs.push_back(std::move(e));
    }
    return eqs;
}

/// Ordering and sign conditions the maps demand, as one interval for t.
TInterval weight_map_constraints(const BandFrame& f, const std::vector<AffineExpr>& w) {
    const int r = f.r;
    const int rows = f.rows;
    const bool odd = (r % 2 == 1);
    TInterval interval;
    auto value = [&](int row, int col) {
        return w[static_cast<std::size_t>(
            f.id[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)])];
    };

    // The full weight sequence descends along ascending vertices; only the
    // designated first-row pairs may tie.
    std::set<int> tie_after;
    const int pair_limit = odd ? r - 1 : r - 2;
    for (int i = 2; i <= pair_limit; i += 2)
        tie_after.insert(f.id[0][static_cast<std::size_t>(i - 1)]);
    for (int p = 0; p + 1 < static_cast<int>(f.seq.size()); ++p) {
        const AffineExpr diff =
            w[static_cast<std::size_t>(p)] - w[static_cast<std::size_t>(p + 1)];
        interval.require(diff, tie_after.count(p) == 0);
    }

    interval.require(-value(0, 1), true); // phi(x_12) < 0
    for (int k = 1; k + 1 < r; ++k)       // first row weakly descends
        interval.require(value(0, k) - value(0, k + 1), false);
    for (int row = 1; row < rows; ++row)
        for (int k = 0; k + 1 < r; ++k) // later rows strictly descend
            interval.require(value(row, k) - value(row, k + 1), true);

    // Cross-row comparisons alternate with column parity.
    const int cross_limit = odd ? r : r - 1;
    for (int row = 1; row < rows; ++row) {
        for (int col = 1; col <= cross_limit; col += 2) // odd columns sink
            interval.require(value(row - 1, col - 1) - value(row, col - 1), true);
        for (int col = 2; col <= (odd ? r - 1 : r); col += 2) // even columns rise
            interval.require(value(row, col - 1) - value(row - 1, col - 1), true);
    }

    interval.require(value(rows - 1, 0), true);   // phi(x_{a+1,1}) > 0
    interval.require(-value(rows - 1, 1), false); // phi(x_{a+1,2}) <= 0
    return interval;
}

std::optional<WeightCertificate> constructive_r_uniform(const Part& part, int r) {
    BandFrame frame;
    if (!frame.build(part, r))
        return std::nullopt;

    std::vector<AffineExpr> w;
    std::optional<Rational> forced_t;
    if (!solve_affine_system(frame.rows * r, weight_map_equations(frame), w, forced_t))
        return std::nullopt;

    const TInterval interval = weight_map_constraints(frame, w);
    Rational t;
    if (forced_t) {
        if (*forced_t < 1 || denominator(*forced_t) != 1 || !interval.contains(*forced_t))
            return std::nullopt;
        t = *forced_t;
    } else {
        const auto minimal = interval.minimal_natural();
        if (!minimal)
            return std::nullopt;
        t = *minimal;
    }

    WeightCertificate cert;
    for (std::size_t i = 0; i < frame.seq.size(); ++i)
        cert.weights[frame.seq[i]] = w[i].at(t);
    return cert;
}

} // namespace

SynthesizedCertificate phi_psi_weights(const Part& part, const Hypergraph& remaining, int r) {
    if (part.edges.empty())
        fail(Errc::invalid_parameters, "empty band has no certificate");
    const Matching matching(remaining, part.edges);
    if (part.edges.size() == 1)
        return {all_ones(part.edges.front()), Provenance::singleton};

    if (auto cert = constructive_r_uniform(part, r))
        if (verify_certificate(remaining, matching, *cert))
            return {std::move(*cert), Provenance::constructive};

    if (auto cert = synthesize_weights(remaining, matching)) {
        if (!verify_certificate(remaining, matching, *cert))
            fail(Errc::certificate_unobtainable, "LP certificate failed replay");
        return {std::move(*cert), Provenance::lp_fallback};
    }
    fail(Errc::certificate_unobtainable,
         "no certificate for band; this contradicts the positivity theorem");
}

PmDecomposition pm_decompose_complete_3(int n) {
    if (n < 3)
        fail(Errc::invalid_parameters, "need n >= 3");
    PmDecomposition result;
    result.host = complete_uniform(n, 3);
    EdgeList remaining_edges = result.host.edges();
    for (const Part& band : enumerate_bands_3(n)) {
        const Hypergraph remaining(n, remaining_edges, 3);
        WeightCertificate cert = rho_weights(band, remaining);
        const Matching matching(remaining, band.edges);
        if (!verify_certificate(remaining, matching, cert))
            fail(Errc::certificate_unobtainable,
                 "constructed band certificate failed replay; this contradicts the proof");
        const Provenance prov =
            band.edges.size() == 1 ? Provenance::singleton : Provenance::constructive;
        result.parts.push_back(CertifiedPart{band, std::move(cert), prov});
        EdgeList next;
        for (const Edge& e : remaining_edges)
            if (!matching.contains(e))
                next.push_back(e);
        remaining_edges = std::move(next);
    }
    if (!remaining_edges.empty())
        fail(Errc::certificate_unobtainable, "bands failed to cover the edge set");
    return result;
}

PmDecomposition pm_decompose_complete_r(int n, int r) {
    if (r == 3)
        return pm_decompose_complete_3(n);
    if (r < 3 || n < r)
        fail(Errc::invalid_uniformity, "need n >= r >= 3");
    PmDecomposition result;
    result.host = complete_uniform(n, r);
    EdgeList remaining_edges = result.host.edges();
    for (const Part& band : enumerate_bands_r(n, r)) {
        const Hypergraph remaining(n, remaining_edges, r);
        SynthesizedCertificate made = phi_psi_weights(band, remaining, r);
        const Matching matching(remaining, band.edges);
        result.parts.push_back(CertifiedPart{band, std::move(made.certificate), made.provenance});
        EdgeList next;
        for (const Edge& e : remaining_edges)
            if (!matching.contains(e))
                next.push_back(e);
        remaining_edges = std::move(next);
    }
    if (!remaining_edges.empty())
        fail(Errc::certificate_unobtainable, "bands failed to cover the edge set");
    return result;
}

bool verify_decomposition(const PmDecomposition& d) {
    EdgeList remaining_edges = d.host.edges();
    for (const CertifiedPart& cp : d.parts) {
        const Hypergraph remaining(d.host.vertex_count(), remaining_edges, d.host.uniformity());
        for (const Edge& e : cp.part.edges)
            if (!remaining.has_edge(e))
                return false;
        Matching matching;
        try {
            matching = Matching(remaining, cp.part.edges);
        } catch (const Error&) {
            return false;
        }
        if (!verify_certificate(remaining, matching, cp.certificate))
            return false;
        EdgeList next;
        for (const Edge& e : remaining_edges)
            if (!matching.contains(e))
                next.push_back(e);
        remaining_edges = std::move(next);
    }
    return remaining_edges.empty();
}

} // namespace pmd
