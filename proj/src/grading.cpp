#include "lierigid/grading.hpp"

#include "lierigid/errors.hpp"
#include "lierigid/repthy.hpp"

#include <algorithm>
#include <string>

namespace lierigid {

ParabolicMarking ParabolicMarking::from_one_based(const RootSystem& rs, const std::vector<int64_t>& nodes)
{
    if (nodes.empty())
        throw InputError("marked", "at least one node must be marked");
    ParabolicMarking m;
    for (auto n : nodes) {
        if (n < 1 || static_cast<std::size_t>(n) > rs.rank())
            throw InputError("marked", "node " + std::to_string(n) + " is outside 1.." + std::to_string(rs.rank()));
        m.nodes.push_back(static_cast<std::size_t>(n - 1));
    }
    std::sort(m.nodes.begin(), m.nodes.end());
    m.nodes.erase(std::unique(m.nodes.begin(), m.nodes.end()), m.nodes.end());
    return m;
}

std::vector<bool> ParabolicMarking::mask(std::size_t rank) const
{
    std::vector<bool> out(rank, false);
    for (auto n : nodes)
        out[n] = true;
    return out;
}

bool ParabolicMarking::contains(std::size_t node) const
{
    return std::binary_search(nodes.begin(), nodes.end(), node);
}

std::vector<int64_t> ParabolicMarking::one_based() const
{
    std::vector<int64_t> out;
    for (auto n : nodes)
        out.push_back(static_cast<int64_t>(n) + 1);
    return out;
}

GradingElement::GradingElement(const RootSystem& rs, const ParabolicMarking& marking)
    : coeff_(rs.rank()), mask_(marking.mask(rs.rank()))
{
    if (marking.nodes.empty())
        throw InputError("marked", "at least one node must be marked");
    for (auto i : marking.nodes)
        if (i >= rs.rank())
            throw InputError("marked", "node index out of range");
    for (std::size_t j = 0; j < rs.rank(); ++j)
        for (auto i : marking.nodes)
            coeff_[j] += rs.inverse_cartan()(j, i);
}

Rational GradingElement::operator()(const Weight& nu) const
{
    Rational z = 0;
    for (std::size_t j = 0; j < coeff_.size(); ++j)
        if (nu[j])
            z += nu[j] * coeff_[j];
    return z;
}

int64_t GradingElement::on_root(const RootCoords& alpha) const
{
    int64_t z = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (mask_[i])
            z += alpha[i];
    return z;
}

GradingElement grading_element(const RootSystem& rs, const ParabolicMarking& marking)
{
    return GradingElement(rs, marking);
}

std::size_t GradedDims::total() const
{
    std::size_t t = 0;
    for (const auto& [d, n] : dims)
        t += n;
    return t;
}

GradedDims grade_algebra(const RootSystem& rs, const ParabolicMarking& marking)
{
    const GradingElement z(rs, marking);
    GradedDims g;
    g.dims[0] = rs.rank();
    for (const auto& alpha : rs.positive_roots()) {
        const int64_t d = z.on_root(alpha);
        g.dims[d] += 1;
        g.dims[-d] += 1;
        g.depth = std::max(g.depth, d);
    }
    return g;
}

GradedDims grade_module(const RootSystem& rs, const ParabolicMarking& marking, const Weight& lam)
{
    if (lam.size() != rs.rank())
        throw InputError("weight", "expected " + std::to_string(rs.rank()) + " coordinates, got " +
                                       std::to_string(lam.size()));
    for (std::size_t j = 0; j < rs.rank(); ++j)
        if (lam[j] != 0 && !marking.contains(j))
            throw InputError("weight", "coordinate " + std::to_string(j + 1) +
                                           " is nonzero on an unmarked node; the highest weight must be "
                                           "supported on the marked nodes");
    const GradingElement z(rs, marking);
    const Rational top = z(lam);
    GradedDims g;
    for (const auto& [nu, m] : weight_multiplicities(rs, lam)) {
        const Rational shift = z(nu) - top;
        const int64_t d = to_int64(shift);
        g.dims[d] += m;
        g.depth = std::max(g.depth, -d);
    }
    return g;
}

} // namespace lierigid
