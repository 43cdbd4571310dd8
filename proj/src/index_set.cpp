#include "hzono/index_set.hpp"

#include "hzono/errors.hpp"

namespace hzono {

IndexSet IndexSet::of(std::initializer_list<int> elements)
{
    IndexSet s;
    for (int i : elements) {
        if (i < 0 || i >= 32)
            throw DimensionMismatch("IndexSet: element out of range");
        s = s.with(i);
    }
    return s;
}

IndexSet IndexSet::first(int n)
{
    if (n < 0 || n > 31)
        throw DimensionMismatch("IndexSet: size out of range");
    return IndexSet((std::uint32_t{1} << n) - 1U);
}

std::vector<int> IndexSet::elements() const
{
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (contains(i))
            out.push_back(i);
    return out;
}

std::vector<IndexSet> IndexSet::subsets() const
{
    std::vector<IndexSet> out;
    out.reserve(std::size_t{1} << size());
    // ascending submask enumeration
    std::uint32_t sub = 0;
    for (;;) {
        out.push_back(IndexSet(sub));
        if (sub == mask_)
            break;
        sub = (sub - mask_) & mask_;
    }
    return out;
}

std::vector<IndexSet> subsets_of_size(int n, int k)
{
    std::vector<IndexSet> out;
    if (k < 0 || k > n)
        return out;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t m = 0; m < limit; ++m)
        if (std::popcount(m) == k)
            out.push_back(IndexSet::from_mask(m));
    return out;
}

std::vector<IndexSet> subsets_up_to_size(int n, int k)
{
    std::vector<IndexSet> out;
    for (int s = 0; s <= k && s <= n; ++s) {
        auto layer = subsets_of_size(n, s);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::string to_string(IndexSet s)
{
    std::string out = "{";
    bool first = true;
    for (int i : s.elements()) {
        if (!first)
            out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

}  // namespace hzono
