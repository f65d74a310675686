#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include "braidgal/scalar.hpp"

namespace braidgal {

/// A morphism between based vector spaces over a fixed Field, stored as a
/// dense rows x cols matrix. Column j is the image of the j-th domain basis
/// vector. Tensor legs are flattened row-major: the basis index of v_i (x) w_j
/// in V (x) W is i * dim(W) + j, and kron() below is the unique realization of
/// (x) on morphisms under that convention.
class LinMap {
  public:
    LinMap(const Field &f, int rows, int cols);

    static LinMap identity(const Field &f, int n);
    static LinMap zero(const Field &f, int rows, int cols) { return LinMap(f, rows, cols); }
    /// Row-major integer literals, mostly for structure-constant tables.
    static LinMap from_rows(const Field &f, std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field &field() const { return field_; }

    const Scalar &at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, Scalar v) { e_[static_cast<std::size_t>(r) * cols_ + c] = std::move(v); }

    bool operator==(const LinMap &o) const;
    bool operator!=(const LinMap &o) const { return !(*this == o); }
    bool is_zero() const;

    LinMap operator+(const LinMap &o) const;
    LinMap operator-(const LinMap &o) const;
    /// Composition f * g = f after g; requires f.cols == g.rows.
    LinMap operator*(const LinMap &o) const;
    LinMap transpose() const;
    LinMap scaled(const Scalar &s) const;

    /// First column where two equal-shaped maps differ, for counterexample
    /// reporting. Empty when equal.
    std::optional<int> first_differing_column(const LinMap &o) const;

  private:
    Field field_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

std::ostream &operator<<(std::ostream &os, const LinMap &m);

LinMap compose(const LinMap &f, const LinMap &g);

/// Kronecker product realizing (x) on morphisms; kron(f, g) maps the domain
/// basis vector i * g.cols + j to f(e_i) (x) g(e_j).
LinMap kron(const LinMap &a, const LinMap &b);

template <typename... Rest> LinMap kron(const LinMap &a, const LinMap &b, const Rest &...rest) {
    return kron(kron(a, b), rest...);
}

/// (f_1 (x) ... (x) f_k) * m computed leg by leg, without materializing the
/// Kronecker product of the factors; the workhorse behind every large
/// structural composite.
LinMap kmul_list(const std::vector<const LinMap *> &factors, const LinMap &m);

template <typename... Fs> LinMap kmul(const LinMap &m, const Fs &...factors) {
    return kmul_list({&factors...}, m);
}

/// The plain flip V (x) W -> W (x) V, v_i (x) w_j -> w_j (x) v_i.
LinMap swap_map(const Field &f, int dim_v, int dim_w);

/// Adjacent-leg flip built from kron and swap_map: exchanges legs i and i+1
/// of a tensor product with the given leg dimensions.
LinMap leg_transposition(const Field &f, const std::vector<int> &dims, std::size_t i);

/// Arbitrary leg permutation as a composition of adjacent flips. perm[k] is
/// the source leg that ends up in position k.
LinMap leg_permutation(const Field &f, const std::vector<int> &dims, const std::vector<int> &perm);

int rank(const LinMap &f);

/// Basis of ker(f) as an injection K -> dom(f); empty when the kernel is 0
/// (zero-dimensional objects are not represented).
std::optional<LinMap> kernel_basis(const LinMap &f);

/// Surjection q: cod(f) -> cod(f)/Im(f) given by reduction against a reduced
/// basis of Im(f); q * f == 0 and rank(q) == f.rows - rank(f). Empty when the
/// quotient is 0.
std::optional<LinMap> cokernel_projection(const LinMap &f);

LinMap invert(const LinMap &f); // throws NotInvertible / DimensionMismatch
std::optional<LinMap> try_invert(const LinMap &f);

/// Any exact solution X of a * X = b, or empty when inconsistent.
std::optional<LinMap> solve(const LinMap &a, const LinMap &b);

/// The unique g with p * g = f, for injective p; throws NotFactorable when
/// Im(f) is not contained in Im(p).
LinMap solve_factor_through_mono(const LinMap &p, const LinMap &f);

/// Any right inverse of a surjection q; throws NotInvertible when q is not
/// surjective.
LinMap right_inverse(const LinMap &q);

/// The g with g * q = f for a surjection q, obtained from a right inverse and
/// verified; throws NotWellDefined when f does not descend along q.
LinMap solve_factor_through_epi(const LinMap &q, const LinMap &f);

} // namespace braidgal
