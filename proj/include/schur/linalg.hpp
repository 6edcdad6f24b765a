#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schur/operator.hpp"

namespace schur {

template <class Ring>
std::map<long, typename Ring::Scalar> operator_to_vector(const ExactOperator<Ring>& op) {
    std::map<long, typename Ring::Scalar> vec;
    const long dim = op.dimension();
    for (int j = 0; j < op.dimension(); ++j)
        for (const auto& [i, c] : op.column(j)) vec.emplace(static_cast<long>(i) * dim + j, c);
    return vec;
}

/// Incremental sparse Gaussian elimination over the scalar field.  Each
/// inserted vector either raises the rank or is recognized as dependent.
/// With tracking enabled, express() recovers exact coordinates of a target
/// in terms of the inserted generators.
template <class Ring>
class LinearSolver {
public:
    using Scalar = typename Ring::Scalar;
    using Vec = std::map<long, Scalar>;
    using Coords = std::map<std::size_t, Scalar>;

    explicit LinearSolver(bool track_coordinates = true) : track_(track_coordinates) {}

    std::size_t generator_count() const { return count_; }
    std::size_t rank() const { return rows_.size(); }

    /// Inserts the next generator; returns true when it is independent of
    /// the previously inserted ones.
    bool insert(Vec row) {
        Coords combo;
        if (track_) combo.emplace(count_, Ring::one());
        reduce(row, track_ ? &combo : nullptr);
        ++count_;
        if (row.empty()) return false;
        Scalar lead = row.begin()->second;
        for (auto& [k, c] : row) c = c / lead;
        if (track_)
            for (auto& [g, c] : combo) c = c / lead;
        pivot_of_key_.emplace(row.begin()->first, rows_.size());
        rows_.push_back(PivotRow{std::move(row), std::move(combo)});
        return true;
    }

    bool insert(const ExactOperator<Ring>& op) { return insert(operator_to_vector(op)); }

    bool in_span(Vec target) const {
        reduce(target, nullptr);
        return target.empty();
    }

    bool in_span(const ExactOperator<Ring>& op) const { return in_span(operator_to_vector(op)); }

    /// Coordinates of target as a combination of the inserted generators,
    /// or nullopt when it lies outside their span.
    std::optional<Coords> express(Vec target) const {
        if (!track_) throw std::logic_error("LinearSolver: coordinate tracking disabled");
        Coords coords;
        while (!target.empty()) {
            auto it = pivot_of_key_.find(target.begin()->first);
            if (it == pivot_of_key_.end()) return std::nullopt;
            const PivotRow& p = rows_[it->second];
            Scalar alpha = target.begin()->second;
            axpy(target, p.row, alpha);
            for (const auto& [g, c] : p.combo) {
                Scalar add = alpha * c;
                auto jt = coords.find(g);
                if (jt == coords.end()) {
                    if (!(add == Ring::zero())) coords.emplace(g, std::move(add));
                } else {
                    jt->second = jt->second + add;
                    if (jt->second == Ring::zero()) coords.erase(jt);
                }
            }
        }
        return coords;
    }

    std::optional<Coords> express(const ExactOperator<Ring>& op) const {
        return express(operator_to_vector(op));
    }

private:
    struct PivotRow {
        Vec row;
        Coords combo;
    };

    // target -= alpha * row, where row has unit leading coefficient.
    static void axpy(Vec& target, const Vec& row, const Scalar& alpha) {
        for (const auto& [k, c] : row) {
            Scalar sub = alpha * c;
            auto it = target.find(k);
            if (it == target.end()) {
                if (!(sub == Ring::zero())) target.emplace(k, Ring::zero() - sub);
            } else {
                it->second = it->second - sub;
                if (it->second == Ring::zero()) target.erase(it);
            }
        }
    }

    void reduce(Vec& row, Coords* combo) const {
        while (!row.empty()) {
            auto it = pivot_of_key_.find(row.begin()->first);
            if (it == pivot_of_key_.end()) return;
            const PivotRow& p = rows_[it->second];
            Scalar alpha = row.begin()->second;
            axpy(row, p.row, alpha);
            if (combo)
                for (const auto& [g, c] : p.combo) {
                    Scalar sub = alpha * c;
                    auto jt = combo->find(g);
                    if (jt == combo->end()) {
                        if (!(sub == Ring::zero())) combo->emplace(g, Ring::zero() - sub);
                    } else {
                        jt->second = jt->second - sub;
                        if (jt->second == Ring::zero()) combo->erase(jt);
                    }
                }
        }
    }

    bool track_;
    std::size_t count_ = 0;
    std::map<long, std::size_t> pivot_of_key_;
    std::vector<PivotRow> rows_;
};

/// Rank of the span of a family of operators.
template <class Ring>
std::size_t span_rank(const std::vector<ExactOperator<Ring>>& ops) {
    LinearSolver<Ring> solver(false);
    for (const auto& op : ops) solver.insert(op);
    return solver.rank();
}

}  // namespace schur
