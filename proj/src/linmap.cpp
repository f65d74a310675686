#include "braidgal/linmap.hpp"

#include <algorithm>
#include <numeric>

namespace braidgal {

namespace {

void require_same_field(const LinMap &a, const LinMap &b) {
    if (a.field() != b.field())
        throw FieldMismatch("maps over different fields");
}

} // namespace

LinMap::LinMap(const Field &f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw DimensionMismatch("zero-dimensional spaces are not represented");
    e_.assign(static_cast<std::size_t>(rows) * cols, Scalar::of(f, 0));
}

LinMap LinMap::identity(const Field &f, int n) {
    LinMap m(f, n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, Scalar::of(f, 1));
    return m;
}

LinMap LinMap::from_rows(const Field &f, std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows.begin()->size());
    LinMap m(f, r, c);
    int i = 0;
    for (const auto &row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw DimensionMismatch("ragged rows");
        int j = 0;
        for (long v : row)
            m.set(i, j++, Scalar::of(f, v));
        ++i;
    }
    return m;
}

bool LinMap::operator==(const LinMap &o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    return e_ == o.e_;
}

bool LinMap::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar &s) { return s.is_zero(); });
}

LinMap LinMap::operator+(const LinMap &o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("shape mismatch in +");
    LinMap r(field_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = e_[k] + o.e_[k];
    return r;
}

LinMap LinMap::operator-(const LinMap &o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("shape mismatch in -");
    LinMap r(field_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = e_[k] - o.e_[k];
    return r;
}

LinMap LinMap::operator*(const LinMap &o) const {
    require_same_field(*this, o);
    if (cols_ != o.rows_)
        throw DimensionMismatch("inner dimensions differ in composition");
    LinMap r(field_, rows_, o.cols_);
    // sparse-aware: walk nonzeros of *this row-wise, then the matching row
    // of o; structural maps in this library are mostly permutation-sparse
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar &fik = at(i, k);
            if (fik.is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar &gkj = o.at(k, j);
                if (gkj.is_zero())
                    continue;
                r.set(i, j, r.at(i, j) + fik * gkj);
            }
        }
    }
    return r;
}

LinMap LinMap::transpose() const {
    LinMap r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.set(j, i, at(i, j));
    return r;
}

LinMap LinMap::scaled(const Scalar &s) const {
    LinMap r(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.set(i, j, at(i, j) * s);
    return r;
}

std::optional<int> LinMap::first_differing_column(const LinMap &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("shape mismatch in comparison");
    for (int j = 0; j < cols_; ++j)
        for (int i = 0; i < rows_; ++i)
            if (at(i, j) != o.at(i, j))
                return j;
    return std::nullopt;
}

std::ostream &operator<<(std::ostream &os, const LinMap &m) {
    for (int i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m.at(i, j).str();
        os << (i + 1 == m.rows() ? "]" : "\n");
    }
    return os;
}

LinMap compose(const LinMap &f, const LinMap &g) { return f * g; }

LinMap kron(const LinMap &a, const LinMap &b) {
    require_same_field(a, b);
    LinMap r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const Scalar &va = a.at(ia, ja);
            if (va.is_zero())
                continue;
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb) {
                    const Scalar &vb = b.at(ib, jb);
                    if (vb.is_zero())
                        continue;
                    r.set(ia * b.rows() + ib, ja * b.cols() + jb, va * vb);
                }
        }
    return r;
}

LinMap kmul_list(const std::vector<const LinMap *> &factors, const LinMap &m) {
    long dom = 1, cod = 1;
    for (const LinMap *f : factors) {
        require_same_field(*f, m);
        dom *= f->cols();
        cod *= f->rows();
    }
    if (dom != m.rows())
        throw DimensionMismatch("kmul: factor domains do not match the map");

    // per-factor nonzeros grouped by column
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> cols_nnz(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const LinMap &f = *factors[i];
        cols_nnz[i].resize(f.cols());
        for (int r = 0; r < f.rows(); ++r)
            for (int c = 0; c < f.cols(); ++c)
                if (!f.at(r, c).is_zero())
                    cols_nnz[i][c].emplace_back(r, f.at(r, c));
    }

    LinMap result(m.field(), static_cast<int>(cod), m.cols());
    std::vector<Scalar> cur, next;
    for (int j = 0; j < m.cols(); ++j) {
        cur.assign(m.rows(), Scalar());
        for (int r = 0; r < m.rows(); ++r)
            cur[r] = m.at(r, j);
        long done_rows = 1, pending_cols = dom;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const LinMap &f = *factors[i];
            pending_cols /= f.cols();
            long right = pending_cols;
            next.assign(static_cast<std::size_t>(done_rows) * f.rows() * right, Scalar());
            for (long idx = 0; idx < static_cast<long>(cur.size()); ++idx) {
                if (cur[idx].is_zero())
                    continue;
                long l = idx / (f.cols() * right);
                long rem = idx % (f.cols() * right);
                long c = rem / right, rt = rem % right;
                for (const auto &[r, val] : cols_nnz[i][c])
                    next[(l * f.rows() + r) * right + rt] += val * cur[idx];
            }
            cur.swap(next);
            done_rows *= f.rows();
        }
        for (long r = 0; r < cod; ++r)
            if (!cur[r].is_zero())
                result.set(static_cast<int>(r), j, cur[r]);
    }
    return result;
}

LinMap swap_map(const Field &f, int dim_v, int dim_w) {
    LinMap r(f, dim_v * dim_w, dim_v * dim_w);
    Scalar one = Scalar::of(f, 1);
    for (int i = 0; i < dim_v; ++i)
        for (int j = 0; j < dim_w; ++j)
            r.set(j * dim_v + i, i * dim_w + j, one);
    return r;
}

LinMap leg_transposition(const Field &f, const std::vector<int> &dims, std::size_t i) {
    if (i + 1 >= dims.size())
        throw DimensionMismatch("leg index out of range");
    LinMap m = swap_map(f, dims[i], dims[i + 1]);
    int left = 1, right = 1;
    for (std::size_t k = 0; k < i; ++k)
        left *= dims[k];
    for (std::size_t k = i + 2; k < dims.size(); ++k)
        right *= dims[k];
    if (left > 1)
        m = kron(LinMap::identity(f, left), m);
    if (right > 1)
        m = kron(m, LinMap::identity(f, right));
    return m;
}

LinMap leg_permutation(const Field &f, const std::vector<int> &dims, const std::vector<int> &perm) {
    if (perm.size() != dims.size())
        throw DimensionMismatch("permutation length mismatch");
    // bubble-sort the wanted source legs into place; each adjacent exchange
    // is a leg_transposition on the current dimension list
    std::vector<int> cur(perm.size());
    std::iota(cur.begin(), cur.end(), 0);
    std::vector<int> cur_dims = dims;
    int total = 1;
    for (int d : dims)
        total *= d;
    LinMap acc = LinMap::identity(f, total);
    for (std::size_t target = 0; target < perm.size(); ++target) {
        std::size_t pos = target;
        while (cur[pos] != perm[target])
            ++pos;
        for (std::size_t k = pos; k > target; --k) {
            acc = leg_transposition(f, cur_dims, k - 1) * acc;
            std::swap(cur[k - 1], cur[k]);
            std::swap(cur_dims[k - 1], cur_dims[k]);
        }
    }
    return acc;
}

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref_inplace(LinMap &m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row)
            for (int j = col; j < m.cols(); ++j) {
                Scalar t = m.at(row, j);
                m.set(row, j, m.at(piv, j));
                m.set(piv, j, std::move(t));
            }
        Scalar inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j)
            if (!m.at(row, j).is_zero())
                m.set(row, j, m.at(row, j) * inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row)
                continue;
            const Scalar &factor = m.at(i, col);
            if (factor.is_zero())
                continue;
            Scalar neg = -factor;
            for (int j = col; j < m.cols(); ++j) {
                const Scalar &rj = m.at(row, j);
                if (!rj.is_zero())
                    m.set(i, j, m.at(i, j) + neg * rj);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(const LinMap &f) {
    LinMap m = f;
    return static_cast<int>(rref_inplace(m).size());
}

std::optional<LinMap> kernel_basis(const LinMap &f) {
    LinMap m = f;
    std::vector<int> pivots = rref_inplace(m);
    int r = static_cast<int>(pivots.size());
    int dim = f.cols() - r;
    if (dim == 0)
        return std::nullopt;
    LinMap k(f.field(), f.cols(), dim);
    std::vector<bool> is_pivot(f.cols(), false);
    for (int c : pivots)
        is_pivot[c] = true;
    int col = 0;
    for (int free = 0; free < f.cols(); ++free) {
        if (is_pivot[free])
            continue;
        k.set(free, col, Scalar::of(f.field(), 1));
        for (int i = 0; i < r; ++i)
            k.set(pivots[i], col, -m.at(i, free));
        ++col;
    }
    return k;
}

std::optional<LinMap> cokernel_projection(const LinMap &f) {
    // row-reduce a basis of Im(f), then project onto the non-pivot
    // coordinates of the reduced representative
    LinMap m = f.transpose();
    std::vector<int> pivots = rref_inplace(m);
    int r = static_cast<int>(pivots.size());
    int dim = f.rows() - r;
    if (dim == 0)
        return std::nullopt;
    std::vector<bool> is_pivot(f.rows(), false);
    for (int c : pivots)
        is_pivot[c] = true;
    LinMap q(f.field(), dim, f.rows());
    int row = 0;
    for (int free = 0; free < f.rows(); ++free) {
        if (is_pivot[free])
            continue;
        q.set(row, free, Scalar::of(f.field(), 1));
        for (int i = 0; i < r; ++i)
            q.set(row, pivots[i], -m.at(i, free));
        ++row;
    }
    return q;
}

std::optional<LinMap> solve(const LinMap &a, const LinMap &b) {
    if (a.rows() != b.rows())
        throw DimensionMismatch("solve: row mismatch");
    require_same_field(a, b);
    LinMap aug(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j)
            aug.set(i, a.cols() + j, b.at(i, j));
    }
    std::vector<int> pivots = rref_inplace(aug);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] >= a.cols())
            return std::nullopt; // inconsistent
    LinMap x(a.field(), a.cols(), b.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (int j = 0; j < b.cols(); ++j)
            x.set(pivots[k], j, aug.at(static_cast<int>(k), a.cols() + j));
    return x;
}

LinMap invert(const LinMap &f) {
    auto inv = try_invert(f);
    if (!inv)
        throw NotInvertible("matrix is singular");
    return *inv;
}

std::optional<LinMap> try_invert(const LinMap &f) {
    if (f.rows() != f.cols())
        throw DimensionMismatch("only square maps can be inverted");
    auto x = solve(f, LinMap::identity(f.field(), f.rows()));
    if (!x || rank(f) != f.rows())
        return std::nullopt;
    return x;
}

LinMap solve_factor_through_mono(const LinMap &p, const LinMap &f) {
    if (p.rows() != f.rows())
        throw DimensionMismatch("factor: codomain mismatch");
    if (rank(p) != p.cols())
        throw NotFactorable("p is not injective");
    auto g = solve(p, f);
    if (!g)
        throw NotFactorable("image does not factor through the mono");
    return *g;
}

LinMap right_inverse(const LinMap &q) {
    auto r = solve(q, LinMap::identity(q.field(), q.rows()));
    if (!r)
        throw NotInvertible("map is not surjective");
    return *r;
}

LinMap solve_factor_through_epi(const LinMap &q, const LinMap &f) {
    if (q.cols() != f.cols())
        throw DimensionMismatch("factor: domain mismatch");
    LinMap g = f * right_inverse(q);
    if (g * q != f)
        throw NotWellDefined("map does not descend along the epi");
    return g;
}

} // namespace braidgal
