#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace czlab {

/// Nodes and weights of a Gaussian rule on its reference interval.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1]. Rules are computed once per order
/// (Golub-Welsch) and cached; the returned reference stays valid.
const GaussRule& gauss_legendre(int order);

/// Gauss-Laguerre rule for the weight e^{-u} on [0, inf).
const GaussRule& gauss_laguerre(int order);

/// Pairwise (tree) summation in index order. The grouping depends only on
/// the length of the input, so the result is bit-reproducible.
template <class T>
T pairwise_sum(std::span<const T> values)
{
    constexpr std::size_t leaf = 8;
    if (values.empty()) return T{};
    if (values.size() <= leaf) {
        T acc = values[0];
        for (std::size_t i = 1; i < values.size(); ++i) acc = acc + values[i];
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& values)
{
    return pairwise_sum(std::span<const T>(values));
}

}  // namespace czlab
