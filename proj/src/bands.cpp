#include "pmd/bands.hpp"

#include <algorithm>
#include <map>

namespace pmd {

int Part::last_column_max() const {
    int m = 0;
    for (const Edge& row : edges)
        m = std::max(m, row.back());
    return m;
}

std::vector<int> band_key_of(const Edge& e) {
    std::vector<int> key;
    for (std::size_t j = 0; j + 1 < e.size(); ++j)
        key.push_back(e[j] + e[j + 1]);
    return key;
}

Part band_edges_r(int n, int r, const std::vector<int>& key) {
    if (r < 2 || n < r)
        fail(Errc::invalid_uniformity, "need n >= r >= 2");
    if (static_cast<int>(key.size()) != r - 1)
        fail(Errc::range_violation, "band key needs r-1 components");
    for (int j = 1; j <= r - 1; ++j) {
        const int l = key[static_cast<std::size_t>(j - 1)];
        if (l < 2 * j + 1 || l > 2 * n - 2 * r + 2 * j + 1)
            fail(Errc::range_violation, "l_" + std::to_string(j) + "=" + std::to_string(l) +
                                            " outside [" + std::to_string(2 * j + 1) + "," +
                                            std::to_string(2 * n - 2 * r + 2 * j + 1) + "]");
    }

    // A band edge is determined by its largest vertex: x_r = lambda and
    // x_j = l_j - x_{j+1} downwards. Valid lambdas form an interval; the scan
    // keeps the derivation obvious.
    EdgeList rows;
    for (int lambda = 1; lambda <= n; ++lambda) {
        Edge e(static_cast<std::size_t>(r));
        e[static_cast<std::size_t>(r - 1)] = lambda;
        for (int j = r - 2; j >= 0; --j)
            e[static_cast<std::size_t>(j)] =
                key[static_cast<std::size_t>(j)] - e[static_cast<std::size_t>(j + 1)];
        bool valid = e.front() >= 1;
        for (int j = 0; valid && j + 1 < r; ++j)
            valid = e[static_cast<std::size_t>(j)] < e[static_cast<std::size_t>(j + 1)];
        if (valid)
            rows.push_back(std::move(e));
    }
    std::sort(rows.begin(), rows.end()); // ascending first coordinate = layout row order
    return Part{key, std::move(rows)};
}

Part band_edges_3(int n, int l1, int l2) {
    return band_edges_r(n, 3, {l1, l2});
}

std::vector<Part> enumerate_bands_r(int n, int r) {
    const Hypergraph complete = complete_uniform(n, r);
    std::map<std::vector<int>, EdgeList> grouped;
    for (const Edge& e : complete.edges())
        grouped[band_key_of(e)].push_back(e);
    std::vector<Part> bands;
    bands.reserve(grouped.size());
    for (auto& [key, rows] : grouped) {
        std::sort(rows.begin(), rows.end());
        bands.push_back(Part{key, std::move(rows)});
    }
    return bands; // std::map already yields lexicographic key order
}

std::vector<Part> enumerate_bands_3(int n) {
    return enumerate_bands_r(n, 3);
}

} // namespace pmd
