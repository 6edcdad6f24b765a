#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

/// A linear operator on a finite-dimensional space, stored column-sparse
/// with exact scalar entries.  All arithmetic is exact; equality is entrywise.
template <class Ring>
class ExactOperator {
public:
    using Scalar = typename Ring::Scalar;
    using Column = std::map<int, Scalar>;

    ExactOperator() : dim_(0) {}
    explicit ExactOperator(int dim) : dim_(dim), cols_(static_cast<std::size_t>(dim)) {}

    static ExactOperator zero(int dim) { return ExactOperator(dim); }

    static ExactOperator identity(int dim) {
        ExactOperator id(dim);
        for (int j = 0; j < dim; ++j) id.cols_[static_cast<std::size_t>(j)][j] = Ring::one();
        return id;
    }

    static ExactOperator scalar(int dim, const Scalar& c) {
        ExactOperator s(dim);
        if (!(c == Ring::zero()))
            for (int j = 0; j < dim; ++j) s.cols_[static_cast<std::size_t>(j)][j] = c;
        return s;
    }

    int dimension() const { return dim_; }

    const Column& column(int j) const { return cols_[static_cast<std::size_t>(j)]; }

    Scalar entry(int i, int j) const {
        const Column& col = cols_[static_cast<std::size_t>(j)];
        auto it = col.find(i);
        return it == col.end() ? Ring::zero() : it->second;
    }

    void add_entry(int i, int j, const Scalar& c) {
        Column& col = cols_[static_cast<std::size_t>(j)];
        auto it = col.find(i);
        if (it == col.end()) {
            if (!(c == Ring::zero())) col.emplace(i, c);
        } else {
            it->second = it->second + c;
            if (it->second == Ring::zero()) col.erase(it);
        }
    }

    void set_entry(int i, int j, const Scalar& c) {
        Column& col = cols_[static_cast<std::size_t>(j)];
        if (c == Ring::zero())
            col.erase(i);
        else
            col[i] = c;
    }

    bool is_zero() const {
        for (const Column& col : cols_)
            if (!col.empty()) return false;
        return true;
    }

    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const Column& col : cols_) n += col.size();
        return n;
    }

    ExactOperator& operator+=(const ExactOperator& o) {
        check_dim(o);
        for (int j = 0; j < dim_; ++j)
            for (const auto& [i, c] : o.cols_[static_cast<std::size_t>(j)]) add_entry(i, j, c);
        return *this;
    }

    ExactOperator& operator-=(const ExactOperator& o) {
        check_dim(o);
        for (int j = 0; j < dim_; ++j)
            for (const auto& [i, c] : o.cols_[static_cast<std::size_t>(j)])
                add_entry(i, j, Ring::zero() - c);
        return *this;
    }

    friend ExactOperator operator+(ExactOperator a, const ExactOperator& b) { return a += b; }
    friend ExactOperator operator-(ExactOperator a, const ExactOperator& b) { return a -= b; }

    ExactOperator operator-() const {
        ExactOperator out(dim_);
        for (int j = 0; j < dim_; ++j)
            for (const auto& [i, c] : cols_[static_cast<std::size_t>(j)])
                out.cols_[static_cast<std::size_t>(j)].emplace(i, Ring::zero() - c);
        return out;
    }

    ExactOperator scaled(const Scalar& c) const {
        ExactOperator out(dim_);
        if (c == Ring::zero()) return out;
        for (int j = 0; j < dim_; ++j)
            for (const auto& [i, e] : cols_[static_cast<std::size_t>(j)]) {
                Scalar p = e * c;
                if (!(p == Ring::zero())) out.cols_[static_cast<std::size_t>(j)].emplace(i, p);
            }
        return out;
    }

    /// Operator composition: (*this) then applied after o, i.e. matrix
    /// product (*this) * o.
    ExactOperator operator*(const ExactOperator& o) const {
        check_dim(o);
        ExactOperator out(dim_);
        for (int j = 0; j < dim_; ++j) {
            Column& dest = out.cols_[static_cast<std::size_t>(j)];
            for (const auto& [k, c] : o.cols_[static_cast<std::size_t>(j)]) {
                for (const auto& [i, a] : cols_[static_cast<std::size_t>(k)]) {
                    Scalar p = a * c;
                    auto it = dest.find(i);
                    if (it == dest.end()) {
                        if (!(p == Ring::zero())) dest.emplace(i, std::move(p));
                    } else {
                        it->second = it->second + p;
                        if (it->second == Ring::zero()) dest.erase(it);
                    }
                }
            }
        }
        return out;
    }

    ExactOperator power(int k) const {
        if (k < 0) throw std::invalid_argument("ExactOperator::power: negative exponent");
        ExactOperator out = identity(dim_);
        for (int s = 0; s < k; ++s) out = out * (*this);
        return out;
    }

    bool operator==(const ExactOperator& o) const { return dim_ == o.dim_ && cols_ == o.cols_; }
    bool operator!=(const ExactOperator& o) const { return !(*this == o); }

private:
    void check_dim(const ExactOperator& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("ExactOperator: dimension mismatch");
    }

    int dim_;
    std::vector<Column> cols_;
};

}  // namespace schur
