#include "goldbach/lattice.hpp"

#include "goldbach/error.hpp"

#include <algorithm>
#include <sstream>

namespace goldbach {

Integer gcd_of_vector(const IntVec& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd_nonneg(g, x);
    return g;
}

Integer gcd_of_family(const std::vector<IntVec>& vs) {
    Integer g = 0;
    for (const auto& v : vs) g = gcd_nonneg(g, gcd_of_vector(v));
    return g;
}

namespace {

void require_uniform_dimension(const std::vector<IntVec>& points) {
    if (points.empty()) raise(ErrorKind::InvalidArgument, "empty point list");
    for (const auto& p : points)
        if (p.size() != points.front().size())
            raise(ErrorKind::DimensionMismatch, "points of mixed dimension");
}

/// Decides whether {x >= 0 : A x = b} is non-empty. Phase-1 simplex with
/// Bland's rule on exact rationals; sizes here are tiny (dim+1 rows).
bool rational_feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    if (m == 0) return true;

    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& x : A[i]) x = -x;
        }
    }

    // tableau columns: n structural, m artificial, then the rhs
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1;
        t[i][cols - 1] = b[i];
        basis[i] = n + i;
    }
    // objective row (z - c for minimizing the artificial sum): the artificial
    // columns are basic and start at reduced cost 0, structural columns carry
    // their column sums, the rhs slot carries the current objective value
    std::vector<Rational> obj(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) obj[j] += t[i][j];
        obj[cols - 1] += t[i][cols - 1];
    }

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (obj[j] > 0) {
                enter = j;
                break;  // Bland: smallest eligible index
            }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) break;  // cannot happen while obj[enter] > 0, kept as a guard

        Rational pivot = t[leave][enter];
        for (auto& x : t[leave]) x /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational factor = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
        }
        if (obj[enter] != 0) {
            Rational factor = obj[enter];
            for (std::size_t j = 0; j < cols; ++j) obj[j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }
    return obj[cols - 1] == 0;
}

bool in_convex_hull(const std::vector<IntVec>& pts, const IntVec& p) {
    if (pts.empty()) return false;
    const std::size_t dim = p.size();
    std::vector<std::vector<Rational>> A(dim + 1, std::vector<Rational>(pts.size()));
    std::vector<Rational> b(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) A[i][j] = Rational(pts[j][i]);
        b[i] = Rational(p[i]);
    }
    for (std::size_t j = 0; j < pts.size(); ++j) A[dim][j] = 1;
    b[dim] = 1;
    return rational_feasible(std::move(A), std::move(b));
}

}  // namespace

LatticePolytope hull_vertices(const std::vector<IntVec>& points) {
    require_uniform_dimension(points);
    std::vector<IntVec> unique = points;
    std::sort(unique.begin(), unique.end(), lex_less);
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    std::vector<IntVec> vertices;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        std::vector<IntVec> others;
        others.reserve(unique.size() - 1);
        for (std::size_t j = 0; j < unique.size(); ++j)
            if (j != i) others.push_back(unique[j]);
        if (others.empty() || !in_convex_hull(others, unique[i])) vertices.push_back(unique[i]);
    }
    return LatticePolytope{points.front().size(), std::move(vertices)};
}

bool in_affine_hull(const std::vector<IntVec>& pts, const IntVec& p) {
    if (pts.empty()) return false;
    for (const auto& q : pts)
        if (q.size() != p.size()) raise(ErrorKind::DimensionMismatch, "points of mixed dimension");

    const std::size_t dim = p.size();
    const std::size_t k = pts.size() - 1;
    // solve sum_i mu_i (pts_i - pts_0) = p - pts_0 for unrestricted mu
    std::vector<std::vector<Rational>> mat(dim, std::vector<Rational>(k + 1));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < k; ++c) mat[r][c] = Rational(pts[c + 1][r] - pts[0][r]);
        mat[r][k] = Rational(p[r] - pts[0][r]);
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < dim; ++col) {
        std::size_t pivot = row;
        while (pivot < dim && mat[pivot][col] == 0) ++pivot;
        if (pivot == dim) continue;
        std::swap(mat[row], mat[pivot]);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == row || mat[r][col] == 0) continue;
            Rational factor = mat[r][col] / mat[row][col];
            for (std::size_t c = col; c <= k; ++c) mat[r][c] -= factor * mat[row][c];
        }
        ++row;
    }
    for (std::size_t r = 0; r < dim; ++r) {
        bool zero_coeffs = true;
        for (std::size_t c = 0; c < k; ++c)
            if (mat[r][c] != 0) {
                zero_coeffs = false;
                break;
            }
        if (zero_coeffs && mat[r][k] != 0) return false;
    }
    return true;
}

bool segment_indecomposable(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) raise(ErrorKind::DimensionMismatch, "segment endpoints of mixed dimension");
    if (a == b) raise(ErrorKind::DegenerateSegment, "segment endpoints coincide");
    return gcd_of_vector(vec_sub(b, a)) == 1;
}

bool pyramid_indecomposable(const std::vector<IntVec>& base, const IntVec& apex) {
    require_uniform_dimension(base);
    if (base.front().size() != apex.size())
        raise(ErrorKind::DimensionMismatch, "apex dimension differs from the base");
    LatticePolytope hull = hull_vertices(base);
    if (in_affine_hull(hull.vertices, apex))
        raise(ErrorKind::ApexInBaseHyperplane, "apex lies in the affine hull of the base");
    std::vector<IntVec> edges;
    edges.reserve(hull.vertices.size());
    for (const auto& v : hull.vertices) edges.push_back(vec_sub(apex, v));
    return gcd_of_family(edges) == 1;
}

LatticePolytope minkowski_sum(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    require_uniform_dimension(a);
    require_uniform_dimension(b);
    std::vector<IntVec> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& p : a)
        for (const auto& q : b) sums.push_back(vec_add(p, q));
    return hull_vertices(sums);
}

namespace {

Integer cross2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

/// CCW vertex cycle starting at the lex-min vertex. Input must be the sorted
/// hull vertex list of a genuine polygon (>= 3 vertices).
std::vector<IntVec> ccw_cycle(const std::vector<IntVec>& vertices) {
    std::vector<IntVec> cycle = vertices;
    const IntVec origin = cycle.front();  // lex-min
    std::sort(cycle.begin() + 1, cycle.end(), [&](const IntVec& a, const IntVec& b) {
        return cross2(vec_sub(a, origin), vec_sub(b, origin)) > 0;
    });
    return cycle;
}

std::vector<IntVec> walk_from_origin(const std::vector<std::pair<Integer, IntVec>>& scaled_edges) {
    std::vector<IntVec> points;
    IntVec cur(2, Integer(0));
    points.push_back(cur);
    for (const auto& [len, dir] : scaled_edges) {
        if (len == 0) continue;
        cur = vec_add(cur, vec_scale(dir, len));
        points.push_back(cur);
    }
    return points;
}

DecomposabilityVerdict segment_summands_by_scan(const IntVec& a, const IntVec& b) {
    // independent of the gcd criterion: scan the bounding box for a lattice
    // point strictly between the endpoints
    IntVec d = vec_sub(b, a);
    Integer x_lo = std::min(a[0], b[0]), x_hi = std::max(a[0], b[0]);
    Integer y_lo = std::min(a[1], b[1]), y_hi = std::max(a[1], b[1]);
    for (Integer x = x_lo; x <= x_hi; ++x) {
        for (Integer y = y_lo; y <= y_hi; ++y) {
            IntVec p{x, y};
            if (p == a || p == b) continue;
            if (cross2(vec_sub(p, a), d) != 0) continue;
            SummandWitness w;
            w.part_a = {IntVec{0, 0}, vec_sub(p, a)};
            w.part_b = {a, vec_sub(b, vec_sub(p, a))};
            std::sort(w.part_a.begin(), w.part_a.end(), lex_less);
            std::sort(w.part_b.begin(), w.part_b.end(), lex_less);
            return {DecomposabilityVerdict::Status::Decomposable, "interior lattice point found", w};
        }
    }
    return {DecomposabilityVerdict::Status::Indecomposable, "no interior lattice point", std::nullopt};
}

}  // namespace

DecomposabilityVerdict polygon_summands_2d(const LatticePolytope& input, const OracleConfig& config) {
    if (input.dim != 2) raise(ErrorKind::DimensionMismatch, "the exhaustive oracle handles dimension 2 only");
    const LatticePolytope poly = hull_vertices(input.vertices);  // tolerate non-vertex points
    if (poly.vertices.size() < 2) raise(ErrorKind::InvalidArgument, "need at least two vertices");
    for (const auto& v : poly.vertices)
        for (const auto& x : v)
            if (x > config.coordinate_bound || x < -config.coordinate_bound)
                return {DecomposabilityVerdict::Status::Unknown, "coordinate bound exceeded", std::nullopt};

    if (poly.vertices.size() == 2) return segment_summands_by_scan(poly.vertices[0], poly.vertices[1]);

    const std::vector<IntVec> cycle = ccw_cycle(poly.vertices);
    const std::size_t k = cycle.size();
    std::vector<Integer> lengths(k);
    std::vector<IntVec> dirs(k);
    for (std::size_t j = 0; j < k; ++j) {
        IntVec e = vec_sub(cycle[(j + 1) % k], cycle[j]);
        Integer m = gcd_of_vector(e);
        lengths[j] = m;
        dirs[j] = IntVec{e[0] / m, e[1] / m};
    }

    Integer combinations = 1;
    for (const auto& m : lengths) combinations *= (m + 1);
    if (combinations > config.split_budget)
        return {DecomposabilityVerdict::Status::Unknown, "split budget exceeded", std::nullopt};

    std::vector<Integer> choice(k, Integer(0));
    while (true) {
        // advance the mixed-radix counter
        std::size_t pos = 0;
        while (pos < k) {
            if (choice[pos] < lengths[pos]) {
                ++choice[pos];
                for (std::size_t q = 0; q < pos; ++q) choice[q] = 0;
                break;
            }
            ++pos;
        }
        if (pos == k) break;

        bool all_full = true;
        for (std::size_t j = 0; j < k; ++j)
            if (choice[j] != lengths[j]) {
                all_full = false;
                break;
            }
        if (all_full) continue;

        Integer sx = 0, sy = 0;
        for (std::size_t j = 0; j < k; ++j) {
            sx += choice[j] * dirs[j][0];
            sy += choice[j] * dirs[j][1];
        }
        if (sx != 0 || sy != 0) continue;

        std::vector<std::pair<Integer, IntVec>> part_a, part_b;
        for (std::size_t j = 0; j < k; ++j) {
            part_a.emplace_back(choice[j], dirs[j]);
            part_b.emplace_back(lengths[j] - choice[j], dirs[j]);
        }
        LatticePolytope a = hull_vertices(walk_from_origin(part_a));
        LatticePolytope b = hull_vertices(walk_from_origin(part_b));
        // both walks start at their lex-min vertex, and lex-min is additive
        // under Minkowski sums, so anchoring B at the input's lex-min vertex
        // aligns the reconstruction exactly
        std::vector<IntVec> b_shifted;
        for (const auto& p : b.vertices) b_shifted.push_back(vec_add(p, poly.vertices.front()));
        if (minkowski_sum(a.vertices, b_shifted).vertices == poly.vertices) {
            SummandWitness w{a.vertices, b_shifted};
            return {DecomposabilityVerdict::Status::Decomposable, "edge split found", w};
        }
    }
    return {DecomposabilityVerdict::Status::Indecomposable, "exhaustive split search", std::nullopt};
}

DecomposabilityVerdict decide_indecomposable(const LatticePolytope& input, const OracleConfig& config) {
    if (input.vertices.empty()) raise(ErrorKind::InvalidArgument, "empty polytope");
    const LatticePolytope poly = hull_vertices(input.vertices);
    const auto& verts = poly.vertices;

    if (verts.size() == 1)
        return {DecomposabilityVerdict::Status::Indecomposable, "single point (by convention)", std::nullopt};

    if (verts.size() == 2) {
        IntVec d = vec_sub(verts[1], verts[0]);
        Integer g = gcd_of_vector(d);
        if (g == 1)
            return {DecomposabilityVerdict::Status::Indecomposable, "segment gcd = 1", std::nullopt};
        IntVec prim(d.size());
        for (std::size_t j = 0; j < d.size(); ++j) prim[j] = d[j] / g;
        SummandWitness w;
        w.part_a = {IntVec(d.size(), Integer(0)), prim};
        w.part_b = {verts[0], vec_sub(verts[1], prim)};
        std::sort(w.part_a.begin(), w.part_a.end(), lex_less);
        std::sort(w.part_b.begin(), w.part_b.end(), lex_less);
        return {DecomposabilityVerdict::Status::Decomposable, "segment gcd = " + g.str(), w};
    }

    // pyramid criterion: look for a vertex outside the affine hull of the rest
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::vector<IntVec> others;
        others.reserve(verts.size() - 1);
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (j != i) others.push_back(verts[j]);
        if (in_affine_hull(others, verts[i])) continue;

        std::vector<IntVec> edges;
        for (const auto& o : others) edges.push_back(vec_sub(verts[i], o));
        Integer g = gcd_of_family(edges);
        if (g == 1)
            return {DecomposabilityVerdict::Status::Indecomposable, "pyramid gcd = 1", std::nullopt};

        // all apex-to-base vectors are divisible by g, so scaling the shifted
        // polytope by 1/g and (g-1)/g yields an integral summand pair
        std::vector<IntVec> part_a{verts[i]}, part_b{IntVec(verts[i].size(), Integer(0))};
        for (const auto& o : others) {
            IntVec d = vec_sub(o, verts[i]);
            IntVec small(d.size()), large(d.size());
            for (std::size_t c = 0; c < d.size(); ++c) {
                small[c] = d[c] / g + verts[i][c];
                large[c] = d[c] / g * (g - 1);
            }
            part_a.push_back(small);
            part_b.push_back(large);
        }
        LatticePolytope a = hull_vertices(part_a);
        LatticePolytope b = hull_vertices(part_b);
        if (minkowski_sum(a.vertices, b.vertices).vertices != verts)
            return {DecomposabilityVerdict::Status::Unknown, "pyramid witness failed to reconstruct",
                    std::nullopt};
        return {DecomposabilityVerdict::Status::Decomposable, "pyramid gcd = " + g.str(),
                SummandWitness{a.vertices, b.vertices}};
    }

    if (poly.dim == 2) return polygon_summands_2d(poly, config);
    return {DecomposabilityVerdict::Status::Unknown, "no applicable criterion", std::nullopt};
}

GoldbachConditionVerdict goldbach_condition_check(const LatticePolytope& P, const std::vector<IntVec>& witness,
                                                  const OracleConfig& config) {
    for (const auto& w : witness) {
        if (w.size() != P.dim) raise(ErrorKind::DimensionMismatch, "witness point dimension differs from P");
        if (!vec_is_nonnegative(w))
            raise(ErrorKind::InvalidArgument, "witness points must have non-negative coordinates");
    }
    if (witness.empty()) return {GoldbachConditionVerdict::Status::Fails, "empty witness"};

    for (std::size_t j = 0; j < P.dim; ++j) {
        bool all_nonzero = true;
        for (const auto& w : witness)
            if (w[j] == 0) {
                all_nonzero = false;
                break;
            }
        if (all_nonzero)
            return {GoldbachConditionVerdict::Status::Fails,
                    "(ii) witness supports all contain coordinate " + std::to_string(j + 1)};
    }

    DecomposabilityVerdict own = decide_indecomposable(hull_vertices(witness), config);
    if (own.decomposable())
        return {GoldbachConditionVerdict::Status::Fails, "(i) witness hull decomposable: " + own.reason};
    if (own.unknown())
        return {GoldbachConditionVerdict::Status::Unknown, "(i) undecided: " + own.reason};

    std::vector<IntVec> joint = P.vertices;
    joint.insert(joint.end(), witness.begin(), witness.end());
    DecomposabilityVerdict both = decide_indecomposable(hull_vertices(joint), config);
    if (both.decomposable())
        return {GoldbachConditionVerdict::Status::Fails, "(iii) joint hull decomposable: " + both.reason};
    if (both.unknown())
        return {GoldbachConditionVerdict::Status::Unknown, "(iii) undecided: " + both.reason};

    return {GoldbachConditionVerdict::Status::Holds, "conditions (i)-(iii) verified"};
}

std::string format_point_matrix(const std::vector<IntVec>& points) {
    std::ostringstream out;
    for (const auto& p : points) {
        out << "|";
        for (const auto& x : p) out << " " << x.str();
        out << " |\n";
    }
    return out.str();
}

std::vector<IntVec> parse_point_list(const std::string& text) {
    std::vector<IntVec> points;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        IntVec p;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            cell.erase(std::remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
            if (cell.empty()) raise(ErrorKind::InvalidArgument, "empty coordinate in point list");
            p.push_back(Integer(cell));
        }
        if (p.empty()) raise(ErrorKind::InvalidArgument, "empty point in point list");
        points.push_back(std::move(p));
    }
    if (points.empty()) raise(ErrorKind::InvalidArgument, "empty point list");
    return points;
}

}  // namespace goldbach
