#pragma once

#include <stdexcept>
#include <vector>

#include "schur/rootdata.hpp"

namespace schur {

/// The basis {v_w : w in {1..n}^d} of n-dimensional column space tensored
/// with itself d times.  Words map to flat indices in row-major fashion, so
/// the first tensor slot is the most significant digit.
class TensorBasis {
public:
    TensorBasis(int n, int d) : n_(n), d_(d) {
        if (n < 1 || d < 1) throw std::invalid_argument("TensorBasis: need n, d >= 1");
        dim_ = 1;
        for (int i = 0; i < d; ++i) {
            if (dim_ > 1000000 / n) throw std::invalid_argument("TensorBasis: dimension too large");
            dim_ *= n;
        }
        words_.reserve(static_cast<std::size_t>(dim_));
        weights_.reserve(static_cast<std::size_t>(dim_));
        std::vector<int> w(static_cast<std::size_t>(d), 1);
        for (int idx = 0; idx < dim_; ++idx) {
            words_.push_back(w);
            Composition mu(static_cast<std::size_t>(n), 0);
            for (int letter : w) ++mu[static_cast<std::size_t>(letter) - 1];
            weights_.push_back(std::move(mu));
            for (int p = d - 1; p >= 0; --p) {
                if (w[static_cast<std::size_t>(p)] < n) {
                    ++w[static_cast<std::size_t>(p)];
                    break;
                }
                w[static_cast<std::size_t>(p)] = 1;
            }
        }
    }

    int n() const { return n_; }
    int d() const { return d_; }
    int dimension() const { return dim_; }

    const std::vector<int>& word(int index) const {
        return words_[static_cast<std::size_t>(index)];
    }

    int index(const std::vector<int>& word) const {
        if (static_cast<int>(word.size()) != d_)
            throw std::invalid_argument("TensorBasis: word length mismatch");
        int idx = 0;
        for (int letter : word) {
            if (letter < 1 || letter > n_)
                throw std::invalid_argument("TensorBasis: letter out of range");
            idx = idx * n_ + (letter - 1);
        }
        return idx;
    }

    /// Weight of a basis word: entry i counts the letters equal to i.
    const Composition& weight(int index) const {
        return weights_[static_cast<std::size_t>(index)];
    }

private:
    int n_;
    int d_;
    int dim_;
    std::vector<std::vector<int>> words_;
    std::vector<Composition> weights_;
};

}  // namespace schur
