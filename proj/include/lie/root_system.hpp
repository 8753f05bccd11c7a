#pragma once

#include <compare>
#include <numeric>
#include <vector>

#include "lie/rational.hpp"
#include "lie/simple_type.hpp"

namespace lie {

// Generalized Cartan matrix, row-major, with the convention
//   a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j) = <alpha_i, alpha_j^vee>.
// So column j is divided by the length of alpha_j, and a root's coordinates
// in the fundamental-weight basis are A^T applied to its simple-root
// coordinates.
class CartanMatrix {
  public:
    CartanMatrix() = default;
    CartanMatrix(int n, std::vector<int> entries);

    int size() const { return n_; }
    int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    CartanMatrix transpose() const;

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

  private:
    int n_ = 0;
    std::vector<int> a_;
};

// A root written in the simple-root basis; all coordinates share one sign.
struct Root {
    std::vector<int> coords;

    int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
};

// An integral weight in the fundamental-weight basis.
struct Weight {
    std::vector<int> coords;

    bool dominant() const {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

enum class Normalization {
    Normalized,  // long roots have squared length 2
    Canonical,   // Normalized divided by 2h^vee (restriction of the trace form of ad)
};

// Symmetric positive-definite form on the span of the simple roots, stored as
// the Gram matrix g_ij = (alpha_i, alpha_j).
class BilinearForm {
  public:
    BilinearForm() = default;
    BilinearForm(int n, std::vector<Rat> gram, Normalization norm);

    int size() const { return n_; }
    Normalization normalization() const { return norm_; }
    const Rat& operator()(int i, int j) const { return g_[static_cast<std::size_t>(i) * n_ + j]; }

    // x^T G y for vectors in simple-root coordinates.
    Rat pairing(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
    Rat pairing(const Root& x, const Root& y) const;

    BilinearForm scaled(const Rat& factor, Normalization norm) const;

  private:
    int n_ = 0;
    std::vector<Rat> g_;
    Normalization norm_ = Normalization::Normalized;
};

// Standard Cartan matrix of an admissible simple type, Bourbaki node order.
// Throws InputError if t is not admissible.
CartanMatrix cartan_matrix(SimpleType t);

// All positive roots generated from the simple ones by root strings, sorted
// by height and then lexicographically.  Terminates for any Cartan matrix of
// finite type; a matrix of non-finite type makes the closure diverge, which
// is reported as a ConsistencyError after a generous cutoff.
std::vector<Root> positive_roots(const CartanMatrix& c);

// The invariant form scaled so that max_i (alpha_i, alpha_i) = 2, obtained by
// symmetrizing the Cartan matrix.  Throws ConsistencyError if the matrix is
// not symmetrizable or the result is not symmetric.
BilinearForm normalized_form(const CartanMatrix& c);

struct RootSystem {
    SimpleType simple_type{};
    CartanMatrix cartan;
    std::vector<Root> positive_roots;  // sorted by (height, lex)
    BilinearForm form;                 // Normalized

    Root theta;    // dominant long root (the highest root)
    Root theta_s;  // dominant short root (= theta when simply laced)
    int r = 1;     // (theta,theta)/(theta_s,theta_s), in {1,2,3}

    Weight rho;                  // half-sum of positive roots: all-ones weight
    std::vector<Rat> rho_check;  // rho^vee = sum of positive coroots, simple-root coords

    std::vector<int> exponents;  // ascending
    int h = 0;                   // Coxeter number
    int h_star = 0;              // dual Coxeter number h^vee
    int h_star_dual = 0;         // h^vee of the Langlands dual system
    int dim_g = 0;               // rank + number of roots

    // Validates admissibility, then assembles everything above.
    static RootSystem build(SimpleType t);

    // Same recipe without the low-rank admissibility gate, for systems like
    // D_3 that only arise internally as unfolding partners.
    static RootSystem build_unvalidated(SimpleType t);

    int rank() const { return cartan.size(); }

    // d_j = (alpha_j, alpha_j)/2 under the normalized form; 1 for long roots.
    const std::vector<Rat>& symmetrizer() const { return d_; }

    // Fundamental-weight coordinates of a vector given in simple-root
    // coordinates: mu = A^T c.
    Weight to_weight(const Root& g) const;
    Weight simple_root_weight(int i) const;  // row i of the Cartan matrix

    // Simple-root coordinates of a weight: c = A^{-T} mu (exact).
    std::vector<Rat> root_coords(const Weight& w) const;

    // Pairings under the normalized form.
    Rat pair(const Weight& a, const Weight& b) const;
    Rat pair(const Weight& a, const Root& b) const;
    // (a, sum_j v_j alpha_j) = sum_j a_j v_j d_j for v in simple-root coords.
    Rat pair_weight_rvec(const Weight& a, const std::vector<Rat>& v) const;

    BilinearForm canonical_form() const;  // form / (2 h_star)

    const std::vector<Weight>& positive_root_weights() const { return posroot_weights_; }

  private:
    std::vector<Rat> d_;
    std::vector<Rat> inv_cartan_t_;  // (A^T)^{-1}, row-major
    std::vector<Weight> posroot_weights_;

    static RootSystem assemble(SimpleType label, CartanMatrix cm);
    friend RootSystem dual_root_system(const RootSystem& rs);
};

// The system built from the transposed Cartan matrix, with the dual label.
RootSystem dual_root_system(const RootSystem& rs);

}  // namespace lie
