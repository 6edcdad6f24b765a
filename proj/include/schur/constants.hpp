#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/basis.hpp"
#include "schur/scalar_ring.hpp"

namespace schur {

/// Multiplication table of a realized basis: the product of elements a and
/// b expanded back into coordinates.  Entries are stored sparsely.
template <class Ring>
struct StructureConstants {
    std::size_t size = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, typename Ring::Scalar>> table;
    bool all_integral = true;
};

template <class Ring>
StructureConstants<Ring> structure_constants(const BasisRealization<Ring>& real) {
    StructureConstants<Ring> out;
    out.size = real.ops.size();
    for (std::size_t a = 0; a < real.ops.size(); ++a)
        for (std::size_t b = 0; b < real.ops.size(); ++b) {
            auto prod = real.ops[a] * real.ops[b];
            if (prod.is_zero()) continue;
            auto coords = real.solver.express(operator_to_vector(prod));
            if (!coords)
                throw std::logic_error("structure_constants: product escaped the basis span");
            for (const auto& [idx, c] : *coords)
                if (!Ring::is_integral(c)) out.all_integral = false;
            out.table.emplace(std::make_pair(a, b), std::move(*coords));
        }
    return out;
}

/// Compares the quantum table at v = 1 with the classical table entry by
/// entry; both must come from identically enumerated families.
inline bool constants_match_at_v1(const StructureConstants<ClassicalRing>& classical,
                                  const StructureConstants<QuantumRing>& quantum,
                                  std::string* witness = nullptr) {
    if (classical.size != quantum.size) {
        if (witness) *witness = "family sizes differ";
        return false;
    }
    auto describe = [&](std::size_t a, std::size_t b) {
        return "entry (" + std::to_string(a) + "," + std::to_string(b) + ")";
    };
    for (std::size_t a = 0; a < classical.size; ++a)
        for (std::size_t b = 0; b < classical.size; ++b) {
            auto key = std::make_pair(a, b);
            auto itc = classical.table.find(key);
            auto itq = quantum.table.find(key);
            std::map<std::size_t, BigRational> cc, qq;
            if (itc != classical.table.end())
                for (const auto& [idx, c] : itc->second)
                    if (!(c == 0)) cc[idx] = c;
            if (itq != quantum.table.end())
                for (const auto& [idx, c] : itq->second) {
                    auto s = specialize_scalar(c);
                    if (!s) {
                        if (witness) *witness = describe(a, b) + ": pole at v=1";
                        return false;
                    }
                    if (!(*s == 0)) qq[idx] = *s;
                }
            if (cc != qq) {
                if (witness) *witness = describe(a, b) + ": coordinate mismatch";
                return false;
            }
        }
    return true;
}

}  // namespace schur
