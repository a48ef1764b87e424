#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ogs/graph.hpp"

namespace ogs {

/// Which matrix of the graph to build/analyze. AAlpha(alpha) is
/// alpha*D + (1-alpha)*A; alpha is carried as an exact rational.
struct MatrixKind {
    enum class Tag { Adjacency, AAlpha, Laplacian, SignlessLaplacian };

    Tag tag = Tag::Adjacency;
    Rational alpha;  // meaningful for AAlpha only

    static MatrixKind adjacency() { return {Tag::Adjacency, Rational(0)}; }
    static MatrixKind a_alpha(Rational a) { return {Tag::AAlpha, std::move(a)}; }
    static MatrixKind laplacian() { return {Tag::Laplacian, Rational(0)}; }
    static MatrixKind signless_laplacian() {
        return {Tag::SignlessLaplacian, Rational(0)};
    }

    /// Eigenvalue contributed by each "extra" vertex of a clique class with
    /// the given constant degree.
    Rational clique_eigenvalue(const Int& degree) const;
};

struct SpectrumEntry {
    double value = 0;
    Int multiplicity;
    std::optional<Rational> exact;  // set when the value is known exactly
};

/// Eigenvalues with multiplicities, sorted by value descending.
struct Spectrum {
    std::vector<SpectrumEntry> entries;

    Int total_multiplicity() const;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Monic polynomial, coefficients from constant up to leading term.
struct RationalPoly {
    std::vector<Rational> coeffs;  // coeffs[i] multiplies x^i; back() == 1

    std::size_t degree() const { return coeffs.size() - 1; }
    Rational eval(const Rational& x) const;
};

Eigen::MatrixXd build_matrix(const DenseGraph& g, const MatrixKind& kind);

/// Exact-rational variant of build_matrix, for identity audits.
RationalMatrix build_matrix_rational(const DenseGraph& g, const MatrixKind& kind);

/// All eigenvalues of a real symmetric matrix, ascending. Oracle path.
std::vector<double> dense_spectrum(const Eigen::MatrixXd& m);

/// Equitable-partition quotient over the order classes, exact rational.
/// Classes in canonical (ascending order) ordering.
RationalMatrix quotient_matrix(const OrderClassGraph& cg, const MatrixKind& kind);

/// Eigenvalues of an equitable quotient matrix with the given cell sizes.
/// The quotient is similar to a symmetric matrix via diag(sqrt(size)).
std::vector<double> quotient_eigenvalues(const RationalMatrix& q,
                                         const std::vector<Int>& sizes);

/// Sort ascending, greedily merge runs with consecutive gaps <= tol into
/// multiplicity-weighted means; result sorted descending.
Spectrum group_eigenvalues(std::vector<double> values, double tol);

constexpr double kDefaultMergeTol = 1e-6;

/// Full spectrum from the equitable partition: clique eigenvalues per class
/// (multiplicity size-1) plus the quotient eigenvalues, merged. Exact clique
/// values survive a merge as the entry's exact anchor.
Spectrum structural_spectrum(const OrderClassGraph& cg, const MatrixKind& kind,
                             double merge_tol = kDefaultMergeTol);

Rational det_exact(RationalMatrix m);

/// Monic characteristic polynomial det(xI - m) by Faddeev-LeVerrier over
/// rationals; self-checked against det_exact at x in {0, 1, -2}.
RationalPoly charpoly_exact(const RationalMatrix& m);

}  // namespace ogs
