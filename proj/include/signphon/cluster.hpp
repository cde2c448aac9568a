#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "signphon/errors.hpp"
#include "signphon/metric.hpp"
#include "signphon/union_find.hpp"

namespace signphon {

struct GroupingMethod {
    double threshold = 0.5;
};

struct DbscanMethod {
    double eps = 0.5;
    int min_samples = 1;
};

struct DbscanConfig {
    double eps = 0.5;
    int min_samples = 1;

    void validate() const {
        if (eps <= 0.0) throw ConfigError("eps must be > 0");
        if (min_samples < 1) throw ConfigError("min_samples must be >= 1");
    }
};

/// Cluster label per phoneme; -1 marks noise. Non-noise labels are contiguous
/// 0..n_clusters-1, ordered by each cluster's smallest member index.
struct Clustering {
    std::vector<int> labels;
    std::variant<GroupingMethod, DbscanMethod> method;
    int n_clusters = 0;
    std::optional<double> silhouette;

    int noise_count() const {
        return static_cast<int>(std::count(labels.begin(), labels.end(), -1));
    }

    std::vector<int> cluster_sizes() const {
        std::vector<int> sizes(n_clusters, 0);
        for (int l : labels) {
            if (l >= 0) ++sizes[l];
        }
        return sizes;
    }
};

namespace detail {

/// Remaps raw labels so clusters are numbered by smallest member index.
inline int canonicalize_labels(std::vector<int>& labels) {
    std::vector<int> order;  // raw label -> canonical, built in first-seen order
    std::vector<int> mapping;
    for (int& l : labels) {
        if (l < 0) continue;
        if (l >= static_cast<int>(mapping.size())) mapping.resize(l + 1, -1);
        if (mapping[l] == -1) {
            mapping[l] = static_cast<int>(order.size());
            order.push_back(l);
        }
        l = mapping[l];
    }
    return static_cast<int>(order.size());
}

}  // namespace detail

/// Iterative grouping run to its fixpoint: clusters are the connected
/// components of the graph with an edge wherever two phonemes are similar
/// (distance <= 1 - threshold). Union-find makes the result independent of
/// iteration order.
inline Clustering grouping_cluster(const AffinityMatrix& m, double threshold) {
    const std::size_t n = m.size();
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (1.0 - m.at(i, j) >= threshold) uf.unite(i, j);
        }
    }
    Clustering c;
    c.method = GroupingMethod{threshold};
    c.labels.resize(n);
    std::vector<int> root_label(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = uf.find(i);
        if (root_label[r] == -1) root_label[r] = next++;
        c.labels[i] = root_label[r];
    }
    c.n_clusters = next;
    return c;
}

/// DBSCAN over a precomputed distance matrix. The eps-neighborhood includes
/// the point itself; a point is core when its neighborhood reaches
/// min_samples. Clusters are the components of the core-core eps graph;
/// a border point joins the cluster of its lowest-index core neighbor;
/// everything else is noise.
inline Clustering dbscan_cluster(const AffinityMatrix& m, const DbscanConfig& cfg = {}) {
    cfg.validate();
    const std::size_t n = m.size();

    std::vector<char> core(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int count = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j) <= cfg.eps) ++count;
        }
        core[i] = count >= cfg.min_samples;
    }

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!core[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (core[j] && m.at(i, j) <= cfg.eps) uf.unite(i, j);
        }
    }

    Clustering c;
    c.method = DbscanMethod{cfg.eps, cfg.min_samples};
    c.labels.assign(n, -1);
    std::vector<int> root_label(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!core[i]) continue;
        const std::size_t r = uf.find(i);
        if (root_label[r] == -1) root_label[r] = next++;
        c.labels[i] = root_label[r];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (core[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (core[j] && m.at(i, j) <= cfg.eps) {
                c.labels[i] = c.labels[j];  // lowest-index core neighbor
                break;
            }
        }
    }
    c.n_clusters = detail::canonicalize_labels(c.labels);
    return c;
}

/// Mean silhouette over non-noise points: s(i) = (b - a) / max(a, b) with
/// a = mean distance to own cluster's other members and b = the smallest mean
/// distance to another cluster. Singleton points score 0; noise is excluded.
/// nullopt when fewer than two non-noise clusters exist.
inline std::optional<double> silhouette_score(const AffinityMatrix& m, const Clustering& c) {
    const std::size_t n = m.size();
    if (c.n_clusters < 2) return std::nullopt;
    const std::vector<int> sizes = c.cluster_sizes();

    double total = 0.0;
    std::size_t scored = 0;
    std::vector<double> sum_to_cluster(c.n_clusters);
    for (std::size_t i = 0; i < n; ++i) {
        const int li = c.labels[i];
        if (li < 0) continue;
        ++scored;
        if (sizes[li] == 1) continue;  // contributes 0

        std::fill(sum_to_cluster.begin(), sum_to_cluster.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (c.labels[j] >= 0 && j != i) sum_to_cluster[c.labels[j]] += m.at(i, j);
        }
        const double a = sum_to_cluster[li] / (sizes[li] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int k = 0; k < c.n_clusters; ++k) {
            if (k == li) continue;
            b = std::min(b, sum_to_cluster[k] / sizes[k]);
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    if (scored == 0) return std::nullopt;
    return total / static_cast<double>(scored);
}

/// 2-D embedding of the phonemes plus the share of positive eigenvalue mass
/// each axis explains.
struct Projection2D {
    std::vector<Vec2> coords;
    std::array<double, 2> explained{0.0, 0.0};
};

/// Classical multidimensional scaling: double-center the squared-distance
/// matrix, take the top-2 eigenpairs, scale eigenvectors by sqrt(eigenvalue)
/// (negative eigenvalues clamp to 0). Each axis is flipped so its first
/// nonzero coordinate is positive.
inline Projection2D project_2d(const AffinityMatrix& m) {
    const std::size_t n = m.size();
    if (n < 3) {
        throw TooFewPoints("project_2d needs at least 3 points, got " + std::to_string(n));
    }

    Eigen::MatrixXd sq(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = m.at(i, j);
            sq(i, j) = d * d;
        }
    }
    const Eigen::VectorXd row_mean = sq.rowwise().mean();
    const double total_mean = sq.mean();
    Eigen::MatrixXd b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            b(i, j) = -0.5 * (sq(i, j) - row_mean(i) - row_mean(j) + total_mean);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    const Eigen::VectorXd& evals = es.eigenvalues();  // ascending
    const Eigen::MatrixXd& evecs = es.eigenvectors();

    double positive_mass = 0.0;
    for (Eigen::Index k = 0; k < evals.size(); ++k) positive_mass += std::max(evals(k), 0.0);

    Projection2D out;
    out.coords.resize(n);
    const std::array<Eigen::Index, 2> top{static_cast<Eigen::Index>(n) - 1,
                                          static_cast<Eigen::Index>(n) - 2};
    for (int axis = 0; axis < 2; ++axis) {
        const double lambda = std::max(evals(top[axis]), 0.0);
        const double scale = std::sqrt(lambda);
        Eigen::VectorXd col = evecs.col(top[axis]) * scale;
        for (Eigen::Index i = 0; i < col.size(); ++i) {
            if (col(i) != 0.0) {
                if (col(i) < 0.0) col = -col;
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            (axis == 0 ? out.coords[i].x : out.coords[i].y) = col(static_cast<Eigen::Index>(i));
        }
        out.explained[axis] = positive_mass > 0.0 ? lambda / positive_mass : 0.0;
    }
    return out;
}

struct SweepRow {
    double param = 0.0;
    int n_clusters = 0;
    double mean_size = 0.0;
    std::optional<double> silhouette;
};

namespace detail {

inline SweepRow sweep_row(const AffinityMatrix& m, const Clustering& c, double param) {
    SweepRow row;
    row.param = param;
    row.n_clusters = c.n_clusters;
    const int member_count = static_cast<int>(c.labels.size()) - c.noise_count();
    row.mean_size = c.n_clusters > 0 ? static_cast<double>(member_count) / c.n_clusters : 0.0;
    row.silhouette = silhouette_score(m, c);
    return row;
}

}  // namespace detail

inline std::vector<SweepRow> sweep_grouping(const AffinityMatrix& m,
                                            const std::vector<double>& thresholds) {
    std::vector<SweepRow> rows;
    rows.reserve(thresholds.size());
    for (double t : thresholds) {
        rows.push_back(detail::sweep_row(m, grouping_cluster(m, t), t));
    }
    return rows;
}

inline std::vector<SweepRow> sweep_dbscan(const AffinityMatrix& m, double eps,
                                          const std::vector<int>& min_samples_values) {
    std::vector<SweepRow> rows;
    rows.reserve(min_samples_values.size());
    for (int ms : min_samples_values) {
        rows.push_back(detail::sweep_row(m, dbscan_cluster(m, {eps, ms}),
                                         static_cast<double>(ms)));
    }
    return rows;
}

}  // namespace signphon
