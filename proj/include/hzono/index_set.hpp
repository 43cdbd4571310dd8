#ifndef HZONO_INDEX_SET_HPP_
#define HZONO_INDEX_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hzono {

// Subset of the binary factor indices {0, ..., 31}, stored as a bit mask.
class IndexSet {
public:
    constexpr IndexSet() = default;
    static constexpr IndexSet from_mask(std::uint32_t mask) { return IndexSet(mask); }
    static IndexSet of(std::initializer_list<int> elements);
    // {0, ..., n-1}
    static IndexSet first(int n);

    constexpr std::uint32_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }
    constexpr bool is_subset_of(IndexSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool disjoint(IndexSet other) const { return (mask_ & other.mask_) == 0; }
    constexpr IndexSet with(int i) const { return IndexSet(mask_ | (1U << i)); }

    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.mask_ | b.mask_); }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.mask_ & b.mask_); }
    // set difference
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.mask_ & ~b.mask_); }
    friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

    std::vector<int> elements() const;
    // every subset, ascending mask order (the empty set first)
    std::vector<IndexSet> subsets() const;

private:
    constexpr explicit IndexSet(std::uint32_t mask) : mask_(mask) {}
    std::uint32_t mask_ = 0;
};

// Subsets of {0..n-1} with exactly k elements, ascending mask order.
std::vector<IndexSet> subsets_of_size(int n, int k);

// Subsets with at most k elements, ordered by size then mask.
std::vector<IndexSet> subsets_up_to_size(int n, int k);

// "{1,3}" with 1-based labels, the way the factors are usually written.
std::string to_string(IndexSet s);

}  // namespace hzono

#endif  // HZONO_INDEX_SET_HPP_
