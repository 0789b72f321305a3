#pragma once

// Prime-field arithmetic and small dense matrices over F_q with exact
// Gaussian elimination.  q is a prime (prime powers are rejected); entries
// are canonical representatives in 0..q-1.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace coha {

class prime_field {
public:
    prime_field() = default;
    explicit prime_field(std::uint32_t q) : q_(q) {
        if (q < 2) throw std::invalid_argument("prime_field: q < 2");
        for (std::uint32_t p = 2; p * p <= q; ++p)
            if (q % p == 0) throw std::invalid_argument("prime_field: q must be prime");
    }
    std::uint32_t q() const { return q_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % q_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + q_ - b) % q_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("prime_field: inverse of 0");
        return pow(a, q_ - 2);
    }
    // smallest generator of F_q^*
    std::uint32_t primitive_root() const {
        if (q_ == 2) return 1;
        std::vector<std::uint32_t> prime_factors;
        std::uint32_t m = q_ - 1;
        for (std::uint32_t p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                prime_factors.push_back(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1) prime_factors.push_back(m);
        for (std::uint32_t g = 2; g < q_; ++g) {
            bool ok = true;
            for (auto p : prime_factors)
                if (pow(g, (q_ - 1) / p) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
        throw std::logic_error("prime_field: no primitive root found");
    }

private:
    std::uint32_t q_ = 2;
};

class fq_matrix {
public:
    fq_matrix() = default;
    fq_matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::uint32_t& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    bool is_zero() const {
        for (auto v : data_)
            if (v) return false;
        return true;
    }
    static fq_matrix identity(int n) {
        fq_matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    friend bool operator==(const fq_matrix&, const fq_matrix&) = default;

    fq_matrix mul(const prime_field& F, const fq_matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("fq_matrix: shape mismatch in mul");
        fq_matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                std::uint32_t v = at(i, k);
                if (!v) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = F.add(r.at(i, j), F.mul(v, o.at(k, j)));
            }
        return r;
    }
    fq_matrix add(const prime_field& F, const fq_matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("fq_matrix: shape mismatch in add");
        fq_matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = F.add(r.data_[i], o.data_[i]);
        return r;
    }
    fq_matrix sub(const prime_field& F, const fq_matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("fq_matrix: shape mismatch in sub");
        fq_matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = F.sub(r.data_[i], o.data_[i]);
        return r;
    }
    fq_matrix scale(const prime_field& F, std::uint32_t c) const {
        fq_matrix r = *this;
        for (auto& v : r.data_) v = F.mul(v, c);
        return r;
    }
    bool nilpotent(const prime_field& F) const {
        if (rows_ != cols_) throw std::invalid_argument("fq_matrix: nilpotency needs a square matrix");
        fq_matrix p = *this;
        int steps = 0;
        while (!p.is_zero()) {
            if (++steps > rows_ + 1) return false;  // index bounded by dimension
            p = p.mul(F, *this);
        }
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> data_;
};

// in-place row reduction; returns the rank
inline int fq_rank(const prime_field& F, fq_matrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.at(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(rank, c));
        std::uint32_t inv = F.inv(m.at(rank, col));
        for (int c = col; c < m.cols(); ++c) m.at(rank, c) = F.mul(m.at(rank, c), inv);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            std::uint32_t f = m.at(r, col);
            if (!f) continue;
            for (int c = col; c < m.cols(); ++c) m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

// basis of the right null space of m (vectors of length cols)
inline std::vector<std::vector<std::uint32_t>> fq_nullspace(const prime_field& F, fq_matrix m) {
    const int cols = m.cols();
    std::vector<int> pivot_of_col(static_cast<std::size_t>(cols), -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < m.rows(); ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.at(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
        std::uint32_t inv = F.inv(m.at(rank, col));
        for (int c = col; c < cols; ++c) m.at(rank, c) = F.mul(m.at(rank, c), inv);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            std::uint32_t f = m.at(r, col);
            if (!f) continue;
            for (int c = col; c < cols; ++c) m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(rank, c)));
        }
        pivot_of_col[static_cast<std::size_t>(col)] = rank;
        ++rank;
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[static_cast<std::size_t>(free_col)] >= 0) continue;
        std::vector<std::uint32_t> v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(free_col)] = 1;
        for (int col = 0; col < cols; ++col) {
            int piv = pivot_of_col[static_cast<std::size_t>(col)];
            if (piv >= 0) v[static_cast<std::size_t>(col)] = F.neg(m.at(piv, free_col));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace coha
