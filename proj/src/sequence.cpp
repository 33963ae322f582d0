#include "engelset/sequence.hpp"

#include <algorithm>
#include <string>

namespace engelset {

ShiftSequence::ShiftSequence(int d, std::vector<int> abs_pattern, std::vector<int> signs)
    : d_(d), abs_pattern_(std::move(abs_pattern)), signs_(std::move(signs)) {
    if (d_ < 2) throw ValidationError("dimension must be at least 2");
    if (static_cast<int>(abs_pattern_.size()) != d_ - 1)
        throw ValidationError("abs_pattern must have d-1 entries");
    std::vector<int> sorted = abs_pattern_;
    std::sort(sorted.begin(), sorted.end());
    for (int s = 0; s < d_ - 1; ++s)
        if (sorted[s] != s + 1)
            throw ValidationError("abs_pattern must be a permutation of 1..d-1");
    if (signs_.empty()) throw ValidationError("sign pattern must be nonempty");
    if (signs_.size() % static_cast<std::size_t>(d_ - 1) != 0)
        throw ValidationError("sign period must be a multiple of d-1, got " + std::to_string(signs_.size()));
    for (int s : signs_)
        if (s != 1 && s != -1) throw ValidationError("signs must be +-1");
}

std::size_t ShiftSequence::mod_index(std::int64_t i, int n) {
    // 1-based term index onto 0-based pattern index.
    std::int64_t r = (i - 1) % n;
    if (r < 0) r += n;
    return static_cast<std::size_t>(r);
}

}  // namespace engelset
