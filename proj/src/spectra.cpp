#include "ogs/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ogs/errors.hpp"

namespace ogs {

Rational MatrixKind::clique_eigenvalue(const Int& degree) const {
    switch (tag) {
        case Tag::Adjacency: return Rational(-1);
        case Tag::AAlpha: return alpha * Rational(degree) - (Rational(1) - alpha);
        case Tag::Laplacian: return Rational(degree) + 1;
        case Tag::SignlessLaplacian: return Rational(degree) - 1;
    }
    return Rational(0);
}

Int Spectrum::total_multiplicity() const {
    Int total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

// (alpha_num/alpha_den) pair as doubles for matrix fill.
struct KindWeights {
    double diag_deg;   // coefficient of degree on the diagonal
    double off;        // coefficient of adjacency off-diagonal
};

KindWeights weights(const MatrixKind& kind) {
    switch (kind.tag) {
        case MatrixKind::Tag::Adjacency: return {0.0, 1.0};
        case MatrixKind::Tag::AAlpha: {
            double a = kind.alpha.get_d();
            return {a, 1.0 - a};
        }
        case MatrixKind::Tag::Laplacian: return {1.0, -1.0};
        case MatrixKind::Tag::SignlessLaplacian: return {1.0, 1.0};
    }
    return {0.0, 0.0};
}

struct KindWeightsExact {
    Rational diag_deg, off;
};

KindWeightsExact weights_exact(const MatrixKind& kind) {
    switch (kind.tag) {
        case MatrixKind::Tag::Adjacency: return {Rational(0), Rational(1)};
        case MatrixKind::Tag::AAlpha: return {kind.alpha, Rational(1) - kind.alpha};
        case MatrixKind::Tag::Laplacian: return {Rational(1), Rational(-1)};
        case MatrixKind::Tag::SignlessLaplacian: return {Rational(1), Rational(1)};
    }
    return {Rational(0), Rational(0)};
}

std::vector<std::size_t> vertex_degrees(const DenseGraph& g) {
    std::vector<std::size_t> deg(g.n, 0);
    for (std::size_t i = 0; i < g.n; ++i) {
        std::size_t d = 0;
        const std::uint64_t* row = g.bits.data() + i * g.words_per_row;
        for (std::size_t w = 0; w < g.words_per_row; ++w)
            d += static_cast<std::size_t>(__builtin_popcountll(row[w]));
        deg[i] = d;
    }
    return deg;
}

}  // namespace

Eigen::MatrixXd build_matrix(const DenseGraph& g, const MatrixKind& kind) {
    if (g.n > kDenseCap) throw CapExceeded("matrix dimension exceeds dense cap");
    auto [wd, wo] = weights(kind);
    auto deg = vertex_degrees(g);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.n, g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        m(i, i) = wd * static_cast<double>(deg[i]);
        for (std::size_t j = 0; j < g.n; ++j)
            if (j != i && g.adjacent(i, j)) m(i, j) = wo;
    }
    return m;
}

RationalMatrix build_matrix_rational(const DenseGraph& g, const MatrixKind& kind) {
    auto [wd, wo] = weights_exact(kind);
    auto deg = vertex_degrees(g);
    RationalMatrix m(g.n, std::vector<Rational>(g.n, Rational(0)));
    for (std::size_t i = 0; i < g.n; ++i) {
        m[i][i] = wd * Rational(static_cast<unsigned long>(deg[i]));
        for (std::size_t j = 0; j < g.n; ++j)
            if (j != i && g.adjacent(i, j)) m[i][j] = wo;
    }
    return m;
}

std::vector<double> dense_spectrum(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw NotSymmetric("matrix is not square");
    double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12) throw NotSymmetric("matrix asymmetry " + std::to_string(asym));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed to converge");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

RationalMatrix quotient_matrix(const OrderClassGraph& cg, const MatrixKind& kind) {
    auto [wd, wo] = weights_exact(kind);
    std::size_t t = cg.num_classes();
    auto stats = graph_stats(cg);
    RationalMatrix q(t, std::vector<Rational>(t, Rational(0)));
    for (std::size_t i = 0; i < t; ++i) {
        q[i][i] = wd * Rational(stats.degrees_by_class[i]) +
                  wo * Rational(cg.classes[i].size - 1);
        for (std::size_t j = 0; j < t; ++j)
            if (j != i && cg.rel[i][j]) q[i][j] = wo * Rational(cg.classes[j].size);
    }
    return q;
}

std::vector<double> quotient_eigenvalues(const RationalMatrix& q,
                                         const std::vector<Int>& sizes) {
    std::size_t t = q.size();
    if (sizes.size() != t) throw std::invalid_argument("sizes/quotient mismatch");
    std::vector<double> s(t);
    for (std::size_t i = 0; i < t; ++i) s[i] = std::sqrt(sizes[i].get_d());
    Eigen::MatrixXd m(t, t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            m(i, j) = q[i][j].get_d() * s[i] / s[j];
    // Exact similarity-symmetric; average away rounding noise.
    Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("quotient eigensolver failed");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Spectrum group_eigenvalues(std::vector<double> values, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite eigenvalue");
    std::sort(values.begin(), values.end());
    Spectrum out;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i + 1;
        double sum = values[i];
        while (j < values.size() && values[j] - values[j - 1] <= tol) {
            sum += values[j];
            ++j;
        }
        out.entries.push_back(
            {sum / static_cast<double>(j - i), Int(static_cast<unsigned long>(j - i)),
             std::nullopt});
        i = j;
    }
    std::reverse(out.entries.begin(), out.entries.end());
    return out;
}

Spectrum structural_spectrum(const OrderClassGraph& cg, const MatrixKind& kind,
                             double merge_tol) {
    auto stats = graph_stats(cg);

    // Exact clique families, merged by rational equality.
    std::map<Rational, Int> clique;
    for (std::size_t i = 0; i < cg.num_classes(); ++i)
        if (cg.classes[i].size >= 2)
            clique[kind.clique_eigenvalue(stats.degrees_by_class[i])] +=
                cg.classes[i].size - 1;

    std::vector<Int> sizes;
    sizes.reserve(cg.num_classes());
    for (const auto& c : cg.classes) sizes.push_back(c.size);
    std::vector<double> roots = quotient_eigenvalues(quotient_matrix(cg, kind), sizes);

    struct Item {
        double value;
        Int mult;
        std::optional<Rational> exact;
    };
    std::vector<Item> items;
    for (const auto& [val, mult] : clique) items.push_back({val.get_d(), mult, val});
    for (double r : roots) items.push_back({r, Int(1), std::nullopt});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.value < b.value; });

    double radius = 1.0;
    for (const auto& it : items) radius = std::max(radius, std::abs(it.value));
    double tol = merge_tol * radius;

    Spectrum out;
    std::size_t i = 0;
    while (i < items.size()) {
        std::size_t j = i + 1;
        while (j < items.size() && items[j].value - items[j - 1].value <= tol) ++j;
        SpectrumEntry e;
        e.multiplicity = 0;
        double weighted = 0;
        double total = 0;
        for (std::size_t k = i; k < j; ++k) {
            e.multiplicity += items[k].mult;
            double w = items[k].mult.get_d();
            weighted += items[k].value * w;
            total += w;
            if (items[k].exact && !e.exact) e.exact = items[k].exact;
        }
        // Anchor merged entries at the exact clique value when one is present.
        e.value = e.exact ? e.exact->get_d() : weighted / total;
        out.entries.push_back(std::move(e));
        i = j;
    }
    std::reverse(out.entries.begin(), out.entries.end());
    return out;
}

Rational det_exact(RationalMatrix m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational factor = m[row][col] * inv;
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

RationalPoly charpoly_exact(const RationalMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix not square");

    // Faddeev-LeVerrier: M_1 = m, c_k = -tr(m M_k)/k with M_{k+1} = m M_k + c_k I.
    RationalPoly p;
    p.coeffs.assign(n + 1, Rational(0));
    p.coeffs[n] = 1;
    RationalMatrix mk(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) mk[i][i] = 1;  // M_0 = I
    for (std::size_t k = 1; k <= n; ++k) {
        // mk <- m * mk
        RationalMatrix next(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (m[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[i][j] += m[i][l] * mk[l][j];
            }
        mk = std::move(next);
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += mk[i][i];
        Rational ck = -trace / Rational(static_cast<unsigned long>(k));
        p.coeffs[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk[i][i] += ck;
    }

    // Self-check against an independent exact determinant.
    for (long x : {0L, 1L, -2L}) {
        RationalMatrix shifted = m;
        for (std::size_t i = 0; i < n; ++i) {
            for (auto& v : shifted[i]) v = -v;
            shifted[i][i] += Rational(x);
        }
        if (p.eval(Rational(x)) != det_exact(shifted))
            throw std::logic_error("charpoly self-check failed at x=" +
                                   std::to_string(x));
    }
    return p;
}

}  // namespace ogs
