#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ladder/fuchsian.hpp"

namespace ladder {

struct WordElement {
  GroupWord word;
  MoebiusElement element;
};

// Visits every normal-form word of generator length <= max_len (the empty
// word included) exactly once, in a fixed depth-first order, with the
// evaluated matrix carried along incrementally.
void for_each_normal_word(
    const LadderParams& params, int max_len,
    const std::function<void(const GroupWord&, const MoebiusElement&)>& fn);

// Same enumeration, materialized. `parallel` fans the first syllable out
// over OpenMP; the output order is identical either way.
std::vector<WordElement> collect_ball(const LadderParams& params, int max_len,
                                      bool parallel = true);

// Closed-count of normal-form words of generator length <= max_len,
// via the free-product growth recursion; cross-checks the enumeration.
std::uint64_t normal_form_count(int max_len);

// No word of the ball maps a cusp of {infinity, 0, -1} into the open
// interval (lambda, 1/lambda). Serial and OpenMP variants agree exactly.
bool cusp_gap_holds(const LadderParams& params, int max_len, bool parallel);

// Batch point reduction; parallel across points.
std::vector<ReductionResult> reduce_batch(const FundamentalDomain& dom,
                                          const std::vector<HalfPlanePoint>& zs,
                                          bool parallel = true);

}  // namespace ladder
