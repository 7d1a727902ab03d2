#pragma once

#include <vector>

#include "pmd/hypergraph.hpp"
#include "pmd/rational.hpp"

namespace pmd {

/// A value that is affine in the free construction parameter t.
struct AffineExpr {
    Rational constant{0};
    Rational slope{0};

    Rational at(const Rational& t) const { return constant + slope * t; }

    AffineExpr operator-() const { return {-constant, -slope}; }
    AffineExpr& operator+=(const AffineExpr& o) {
        constant += o.constant;
        slope += o.slope;
        return *this;
    }
    AffineExpr& operator-=(const AffineExpr& o) {
        constant -= o.constant;
        slope -= o.slope;
        return *this;
    }
    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
    friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
    friend bool operator==(const AffineExpr& a, const AffineExpr& b) {
        return a.constant == b.constant && a.slope == b.slope;
    }
};

/// One band E_{l_1,...,l_{r-1}}: the edges whose consecutive sorted-vertex
/// pair sums equal the key. Edges double as the rows of the band's matrix
/// layout, ordered by ascending first coordinate; within a band the j-th
/// vertex of each row is the row's column-j entry.
struct Part {
    std::vector<int> key; // empty for parts that are plain matchings
    EdgeList edges;

    /// Largest last-column entry over the rows (the layout parameter m).
    int last_column_max() const;
    /// Row count minus one (the layout parameter a).
    int extra_rows() const { return static_cast<int>(edges.size()) - 1; }
};

/// Consecutive-pair sums (x_1+x_2, ..., x_{r-1}+x_r) of a sorted edge.
std::vector<int> band_key_of(const Edge& e);

/// The band for one key, possibly empty. Throws RangeViolation when a key
/// component leaves its admissible interval [2j+1, 2n-2r+2j+1].
Part band_edges_r(int n, int r, const std::vector<int>& key);
Part band_edges_3(int n, int l1, int l2);

/// All nonempty bands in lexicographic key order; their edges partition the
/// complete r-uniform hypergraph on n vertices.
std::vector<Part> enumerate_bands_r(int n, int r);
std::vector<Part> enumerate_bands_3(int n);

} // namespace pmd
