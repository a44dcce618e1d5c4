#include "jnmf/partition.hpp"

#include "jnmf/errors.hpp"

#include <algorithm>
#include <map>

namespace jnmf {

Partition::Partition(std::vector<int> assignment) : assignment_(std::move(assignment)) {
    int max_label = -1;
    for (int l : assignment_) {
        if (l < 0)
            throw ParameterError("community labels must be nonnegative");
        max_label = std::max(max_label, l);
    }
    sizes_.assign(static_cast<std::size_t>(max_label + 1), 0);
    for (int l : assignment_)
        ++sizes_[static_cast<std::size_t>(l)];
    if (std::find(sizes_.begin(), sizes_.end(), std::size_t{0}) != sizes_.end())
        throw ParameterError("community labels must be contiguous from 0");
}

Partition Partition::compacted(std::span<const int> raw_labels) {
    std::map<int, int> remap;
    for (int l : raw_labels)
        remap.emplace(l, 0);
    int next = 0;
    for (auto& [raw, compact] : remap)
        compact = next++;
    std::vector<int> out;
    out.reserve(raw_labels.size());
    for (int l : raw_labels)
        out.push_back(remap[l]);
    return Partition(std::move(out));
}

std::vector<std::vector<int>> Partition::members() const {
    std::vector<std::vector<int>> out(sizes_.size());
    for (std::size_t i = 0; i < assignment_.size(); ++i)
        out[static_cast<std::size_t>(assignment_[i])].push_back(static_cast<int>(i));
    return out;
}

bool Partition::equivalent(const Partition& other) const {
    if (size() != other.size() || communities() != other.communities())
        return false;
    std::vector<int> forward(communities(), -1), backward(communities(), -1);
    for (std::size_t i = 0; i < size(); ++i) {
        const int a = assignment_[i];
        const int b = other.assignment_[i];
        if (forward[a] == -1 && backward[b] == -1) {
            forward[a] = b;
            backward[b] = a;
        } else if (forward[a] != b || backward[b] != a) {
            return false;
        }
    }
    return true;
}

} // namespace jnmf
