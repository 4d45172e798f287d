#include "tms/gluing.hpp"

#include <map>
#include <stdexcept>

namespace tms {

namespace {

/// Deduplicates the space-factor rows (columns 1..dim-1) of the embeddings
/// of two spaces into one ambient; returns the node rows and per-point node
/// ids.
Matrix<Scalar> dedup_rows(const FrechetEmbedding& ea, const FrechetEmbedding& eb,
                          std::vector<int>& a_to_node, std::vector<int>& b_to_node) {
    const int width = ea.dim() - 1;
    std::map<std::vector<Scalar>, int> seen;
    std::vector<std::vector<Scalar>> rows;
    auto intern = [&](const FrechetEmbedding& e, int point) {
        std::vector<Scalar> row;
        row.reserve(width);
        for (int k = 1; k < e.dim(); ++k) row.push_back(e.coord(point, k));
        auto [it, inserted] = seen.emplace(row, static_cast<int>(rows.size()));
        if (inserted) rows.push_back(std::move(row));
        return it->second;
    };
    a_to_node.resize(ea.point_count());
    for (int i = 0; i < ea.point_count(); ++i) a_to_node[i] = intern(ea, i);
    b_to_node.resize(eb.point_count());
    for (int i = 0; i < eb.point_count(); ++i) b_to_node[i] = intern(eb, i);

    Matrix<Scalar> out(rows.size(), width, Scalar(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int k = 0; k < width; ++k) out(r, k) = rows[r][k];
    return out;
}

Matrix<Scalar> pairwise_sup(const Matrix<Scalar>& rows) {
    const std::size_t n = rows.rows();
    Matrix<Scalar> d(n, n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar best(0);
            for (std::size_t k = 0; k < rows.cols(); ++k) {
                Scalar v = abs(rows(i, k) - rows(j, k));
                if (best < v) best = std::move(v);
            }
            d(i, j) = best;
            d(j, i) = std::move(best);
        }
    return d;
}

void check_embedding(const FrechetEmbedding& e, const TimedMetricSpace& s,
                     const char* name) {
    if (!e.timed())
        throw std::invalid_argument(std::string(name) + " must be a timed embedding");
    int tw = -1;
    if (!e.time_preserving(s, &tw))
        throw std::invalid_argument(std::string(name) + " is not time preserving at point " +
                                    std::to_string(tw));
    std::pair<int, int> dw;
    if (!e.distance_preserving(s, &dw))
        throw std::invalid_argument(std::string(name) + " does not preserve the distance of (" +
                                    std::to_string(dw.first) + "," +
                                    std::to_string(dw.second) + ")");
}

}  // namespace

Scalar GluedSpace::side_distance(int side, int a, int b) const {
    const Matrix<Scalar>& d = side == 0 ? dl_ : dr_;
    return d(a, b);
}

Scalar GluedSpace::slice_distance(Node a, Node b) const {
    if (a.side == b.side) return side_distance(a.side, a.id, b.id);
    if (a.side == 0) return cross_(a.id, b.id);
    return cross_(b.id, a.id);
}

Scalar GluedSpace::product_distance(const Scalar& ta, Node a, const Scalar& tb,
                                    Node b) const {
    if (a.side == b.side) return max(abs(ta - tb), side_distance(a.side, a.id, b.id));
    const Node& left = a.side == 0 ? a : b;
    const Node& right = a.side == 0 ? b : a;
    const Scalar& tl = a.side == 0 ? ta : tb;
    const Scalar& tr = a.side == 0 ? tb : ta;
    const TimedMetricSpace& x2 = spaces_[1];
    Scalar best(0);
    bool have = false;
    for (int x = 0; x < x2.size(); ++x) {
        Scalar v = max(abs(tl - x2.tau(x)), dl_(left.id, x2_to_left_[x])) +
                   max(abs(x2.tau(x) - tr), dr_(x2_to_right_[x], right.id));
        if (!have || v < best) {
            best = std::move(v);
            have = true;
        }
    }
    return best;
}

int GluedSpace::quotient_class(Node n) const {
    return node_class_[n.side == 0 ? n.id : left_count() + n.id];
}

Scalar GluedSpace::psi_hausdorff() const {
    const TimedMetricSpace& x1 = spaces_[0];
    const TimedMetricSpace& x3 = spaces_[2];
    Scalar h(0);
    auto one_side = [&](const TimedMetricSpace& from, const TimedMetricSpace& to,
                        bool from_is_x1) {
        for (int i = 0; i < from.size(); ++i) {
            Node a = from_is_x1 ? x1_node(i) : x3_node(i);
            bool first = true;
            Scalar nearest(0);
            for (int j = 0; j < to.size(); ++j) {
                Node b = from_is_x1 ? x3_node(j) : x1_node(j);
                Scalar v = product_distance(from.tau(i), a, to.tau(j), b);
                if (first || v < nearest) {
                    nearest = std::move(v);
                    first = false;
                }
            }
            h = max(h, nearest);
        }
    };
    one_side(x1, x3, true);
    one_side(x3, x1, false);
    return h;
}

ValidationReport GluedSpace::verify() const {
    ValidationReport report = validate_metric(quotient_);

    const TimedMetricSpace& x1 = spaces_[0];
    const TimedMetricSpace& x2 = spaces_[1];
    const TimedMetricSpace& x3 = spaces_[2];
    const int nl = left_count(), nr = right_count();

    // Restriction: quotient distances between left classes reproduce the
    // left ambient's sup metric; same on the right.
    for (int a = 0; a < nl; ++a)
        for (int b = a + 1; b < nl; ++b)
            if (!x2.eq(quotient_.dist(node_class_[a], node_class_[b]), dl_(a, b)))
                report.add(Axiom::MetricRestriction, {0, a, b});
    for (int a = 0; a < nr; ++a)
        for (int b = a + 1; b < nr; ++b)
            if (!x2.eq(quotient_.dist(node_class_[nl + a], node_class_[nl + b]), dr_(a, b)))
                report.add(Axiom::MetricRestriction, {1, a, b});

    // Merged copies must be metrically indistinguishable.
    for (int x : identified_x2_) {
        int a = x2_to_left_[x], b = x2_to_right_[x];
        for (int c = 0; c < nl; ++c)
            if (!x2.eq(cross_(c, b), dl_(c, a)))
                report.add(Axiom::MetricRestriction, {x, c}, "merged copy mismatch");
        for (int c = 0; c < nr; ++c)
            if (!x2.eq(cross_(a, c), dr_(b, c)))
                report.add(Axiom::MetricRestriction, {x, c}, "merged copy mismatch");
    }

    // Cross formula is symmetric in its two one-sided readings.
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nr; ++b) {
            Scalar mirrored(0);
            bool have = false;
            for (int x = 0; x < x2.size(); ++x) {
                Scalar v = max(x2.tau(x), dr_(x2_to_right_[x], b)) +
                           max(x2.tau(x), dl_(a, x2_to_left_[x]));
                if (!have || v < mirrored) {
                    mirrored = std::move(v);
                    have = true;
                }
            }
            if (!x2.eq(mirrored, cross_(a, b)))
                report.add(Axiom::Symmetry, {a, b}, "one-sided cross formulas disagree");
        }

    // Composite maps preserve times trivially; check distances.
    for (int i = 0; i < x1.size(); ++i)
        for (int j = i + 1; j < x1.size(); ++j)
            if (!x1.eq(max(abs(x1.tau(i) - x1.tau(j)), dl_(x1_to_left_[i], x1_to_left_[j])),
                       x1.dist(i, j)))
                report.add(Axiom::DistancePreservation, {1, i, j});
    for (int i = 0; i < x3.size(); ++i)
        for (int j = i + 1; j < x3.size(); ++j)
            if (!x3.eq(max(abs(x3.tau(i) - x3.tau(j)), dr_(x3_to_right_[i], x3_to_right_[j])),
                       x3.dist(i, j)))
                report.add(Axiom::DistancePreservation, {3, i, j});

    // Product metric: symmetry and triangle over every lifted image point.
    struct P {
        Scalar t;
        Node n;
    };
    std::vector<P> pts;
    for (int i = 0; i < x1.size(); ++i) pts.push_back({x1.tau(i), x1_node(i)});
    for (int x = 0; x < x2.size(); ++x) pts.push_back({x2.tau(x), x2_left_node(x)});
    for (int x = 0; x < x2.size(); ++x) pts.push_back({x2.tau(x), x2_right_node(x)});
    for (int k = 0; k < x3.size(); ++k) pts.push_back({x3.tau(k), x3_node(k)});
    const int np = static_cast<int>(pts.size());
    Matrix<Scalar> pd(np, np, Scalar(0));
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            pd(i, j) = product_distance(pts[i].t, pts[i].n, pts[j].t, pts[j].n);
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j)
            if (!x2.eq(pd(i, j), pd(j, i)))
                report.add(Axiom::Symmetry, {i, j}, "product metric");
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) {
            if (j == i) continue;
            for (int k = 0; k < np; ++k) {
                if (k == i || k == j) continue;
                if (!x2.le(pd(i, k), pd(i, j) + pd(j, k)))
                    report.add(Axiom::Triangle, {i, j, k}, "product metric");
            }
        }
    // The two copies of every X2 point coincide under the product metric.
    for (int x = 0; x < x2.size(); ++x)
        if (!x2.eq(product_distance(x2.tau(x), x2_left_node(x), x2.tau(x), x2_right_node(x)),
                   Scalar(0)))
            report.add(Axiom::DistancePreservation, {2, x}, "X2 copies not identified");
    return report;
}

GluedSpace glue(const TimedMetricSpace& x1, const TimedMetricSpace& x2,
                const TimedMetricSpace& x3, const FrechetEmbedding& e1,
                const FrechetEmbedding& e2, const FrechetEmbedding& f2,
                const FrechetEmbedding& f3) {
    require_valid(x1);
    require_valid(x2);
    require_valid(x3);
    check_embedding(e1, x1, "left embedding of X1");
    check_embedding(e2, x2, "left embedding of X2");
    check_embedding(f2, x2, "right embedding of X2");
    check_embedding(f3, x3, "right embedding of X3");
    if (e1.dim() != e2.dim() || f2.dim() != f3.dim())
        throw std::invalid_argument("embedding pairs must share their ambient dimension");

    GluedSpace g;
    g.spaces_ = {x1, x2, x3};
    g.left_rows_ = dedup_rows(e1, e2, g.x1_to_left_, g.x2_to_left_);
    g.right_rows_ = dedup_rows(f2, f3, g.x2_to_right_, g.x3_to_right_);
    g.dl_ = pairwise_sup(g.left_rows_);
    g.dr_ = pairwise_sup(g.right_rows_);

    const int nl = static_cast<int>(g.left_rows_.rows());
    const int nr = static_cast<int>(g.right_rows_.rows());
    g.cross_ = Matrix<Scalar>(nl, nr, Scalar(0));
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nr; ++b) {
            Scalar best(0);
            bool have = false;
            for (int x = 0; x < x2.size(); ++x) {
                Scalar v = max(x2.tau(x), g.dl_(a, g.x2_to_left_[x])) +
                           max(x2.tau(x), g.dr_(g.x2_to_right_[x], b));
                if (!have || v < best) {
                    best = std::move(v);
                    have = true;
                }
            }
            g.cross_(a, b) = std::move(best);
        }

    // Quotient the zero-distance cross pairs.
    const int total = nl + nr;
    std::vector<int> root(total);
    for (int i = 0; i < total; ++i) root[i] = i;
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nr; ++b)
            if (x2.eq(g.cross_(a, b), Scalar(0))) root[find(nl + b)] = find(a);
    for (int x = 0; x < x2.size(); ++x)
        if (find(g.x2_to_left_[x]) == find(nl + g.x2_to_right_[x]))
            g.identified_x2_.push_back(x);

    g.node_class_.assign(total, -1);
    std::vector<int> reps;
    for (int i = 0; i < total; ++i) {
        int r = find(i);
        if (g.node_class_[r] < 0) {
            g.node_class_[r] = static_cast<int>(reps.size());
            reps.push_back(r);
        }
        g.node_class_[i] = g.node_class_[r];
    }
    const int classes = static_cast<int>(reps.size());
    std::vector<std::string> labels(classes);
    for (int c = 0; c < classes; ++c) {
        int r = reps[c];
        labels[c] = r < nl ? "z12#" + std::to_string(r) : "z23#" + std::to_string(r - nl);
    }
    auto node_of = [&](int flat) {
        return flat < nl ? GluedSpace::Node{0, flat} : GluedSpace::Node{1, flat - nl};
    };
    Matrix<Scalar> qd(classes, classes, Scalar(0));
    for (int a = 0; a < classes; ++a)
        for (int b = 0; b < classes; ++b)
            if (a != b) qd(a, b) = g.slice_distance(node_of(reps[a]), node_of(reps[b]));
    g.quotient_ = MetricSpace(std::move(labels), std::move(qd), x2.metric().policy());
    return g;
}

TriangleReport triangle_check(const TimedMetricSpace& x1, const TimedMetricSpace& x2,
                              const TimedMetricSpace& x3, const SearchOptions& opts) {
    UpperBound u12 = tgh_upper_bound(x1, x2, UpperBoundMode::FromCorrespondence, opts);
    UpperBound u23 = tgh_upper_bound(x2, x3, UpperBoundMode::FromCorrespondence, opts);
    UpperBound u13 = tgh_upper_bound(x1, x3, UpperBoundMode::FromCorrespondence, opts);
    GluedSpace g = glue(x1, x2, x3, u12.witness_x, u12.witness_y, u23.witness_x,
                        u23.witness_y);
    TriangleReport report{u12.value, u23.value,  g.psi_hausdorff(),
                          u13.value, Scalar(0), false,
                          {}};
    bool exact = x1.exact() && x2.exact() && x3.exact();
    if (!exact)
        report.slack = max(max(x1.tolerance(), x2.tolerance()), x3.tolerance());
    report.glued_checks = g.verify();
    report.holds =
        report.u13 <= report.u12 + report.u23 + Scalar(2) * report.slack;
    return report;
}

}  // namespace tms
