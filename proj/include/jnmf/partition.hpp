#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace jnmf {

/// Hard assignment of n nodes to c communities labelled 0..c-1, every label used.
class Partition {
  public:
    Partition() = default;

    /// Takes labels that are already contiguous from 0; throws ParameterError otherwise.
    explicit Partition(std::vector<int> assignment);

    /// Relabels arbitrary nonnegative labels to 0..c-1 in ascending order of the
    /// original label, dropping unused ones.
    static Partition compacted(std::span<const int> raw_labels);

    std::size_t size() const noexcept { return assignment_.size(); }
    std::size_t communities() const noexcept { return sizes_.size(); }
    int label(std::size_t node) const { return assignment_.at(node); }
    const std::vector<int>& assignment() const noexcept { return assignment_; }
    const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }

    /// Node indices of each community, ascending.
    std::vector<std::vector<int>> members() const;

    /// Same grouping of nodes, ignoring label names.
    bool equivalent(const Partition& other) const;

    bool operator==(const Partition&) const = default;

  private:
    std::vector<int> assignment_;
    std::vector<std::size_t> sizes_;
};

} // namespace jnmf
