#pragma once

#include "fairdex/model.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace fairdex {

// Verdict strength on a fixed allocation: EF implies EFX implies EF1
// implies EF2.
enum class Notion { EF, EF1, EFX, EF2 };

const char* to_string(Notion notion);
std::optional<Notion> notion_from_string(std::string_view text);

struct PairVerdict {
    int agent = 0;
    int other = 0;
    bool pass = true;
    Value gap;
    // On a pass: a certifying removal set (empty when there is no envy);
    // deleting these items leaves a nonpositive gap. On a failure: the
    // offending items — for EFX the first envy-reducing item whose removal
    // leaves envy behind, for EF1/EF2 the best removal set, which still
    // fails.
    std::vector<int> witness;
};

struct FairnessVerdict {
    Notion notion = Notion::EF;
    bool pass = true;
    std::vector<PairVerdict> pairs;               // ordered pairs, (0,1), (0,2), ...
    std::optional<std::size_t> first_violation;   // index into pairs
};

FairnessVerdict check_ef(const Instance& inst, const Allocation& alloc);
FairnessVerdict check_ef1(const Instance& inst, const Allocation& alloc);
FairnessVerdict check_efx(const Instance& inst, const Allocation& alloc);
FairnessVerdict check_ef2(const Instance& inst, const Allocation& alloc);
FairnessVerdict check_fairness(const Instance& inst, const Allocation& alloc, Notion notion);

}
