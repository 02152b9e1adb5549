#include "fairdex/fairness.hpp"

#include "fairdex/errors.hpp"

#include <algorithm>
#include <cctype>

namespace fairdex {

namespace {

// Literal reading of the EFX quantifier: an envious pair with no strictly
// envy-reducing item satisfies the definition. (For a fixed allocation the
// gap equals the sum of all deltas, so this branch cannot fire; it is kept
// explicit so the opposite reading is a one-line change.)
constexpr bool efx_vacuous_pair_passes = true;

PairVerdict judge_ef(const Instance&, const Allocation&, EnvyGap gap)
{
    PairVerdict verdict{gap.agent, gap.other, gap.gap <= 0, std::move(gap.gap), {}};
    return verdict;
}

PairVerdict judge_ef1(const Instance& inst, const Allocation& alloc, EnvyGap gap)
{
    PairVerdict verdict{gap.agent, gap.other, true, std::move(gap.gap), {}};
    if (inst.item_count() == 0)
        return verdict;    // no item to remove, but also no envy possible
    auto table = delta_table(inst, alloc, gap.agent, gap.other);
    int best = 0;
    for (int a = 1; a < inst.item_count(); ++a)
        if (table.of(a) > table.of(best))
            best = a;
    verdict.pass = verdict.gap <= table.of(best);
    if (! verdict.pass || verdict.gap > 0)
        verdict.witness = {best};
    return verdict;
}

PairVerdict judge_efx(const Instance& inst, const Allocation& alloc, EnvyGap gap)
{
    PairVerdict verdict{gap.agent, gap.other, true, std::move(gap.gap), {}};
    if (verdict.gap <= 0)
        return verdict;
    auto table = delta_table(inst, alloc, gap.agent, gap.other);
    int least_positive = -1;
    for (int a = 0; a < inst.item_count(); ++a) {
        if (table.of(a) <= 0)
            continue;
        if (verdict.gap > table.of(a)) {
            // removing a strictly decreases the envy yet leaves some behind
            verdict.pass = false;
            verdict.witness = {a};
            return verdict;
        }
        if (least_positive == -1 || table.of(a) < table.of(least_positive))
            least_positive = a;
    }
    if (least_positive == -1) {
        verdict.pass = efx_vacuous_pair_passes;
        return verdict;
    }
    verdict.witness = {least_positive};
    return verdict;
}

PairVerdict judge_ef2(const Instance& inst, const Allocation& alloc, EnvyGap gap)
{
    PairVerdict verdict{gap.agent, gap.other, true, std::move(gap.gap), {}};
    if (verdict.gap <= 0)
        return verdict;
    auto table = delta_table(inst, alloc, gap.agent, gap.other);
    int first = -1, second = -1;
    for (int a = 0; a < inst.item_count(); ++a) {
        if (first == -1 || table.of(a) > table.of(first)) {
            second = first;
            first = a;
        }
        else if (second == -1 || table.of(a) > table.of(second)) {
            second = a;
        }
    }
    Value slack = 0;
    if (first != -1 && table.of(first) > 0) {
        slack = table.of(first);
        verdict.witness = {first};
        if (second != -1 && table.of(second) > 0) {
            slack += table.of(second);
            verdict.witness.push_back(second);
        }
    }
    verdict.pass = verdict.gap <= slack;
    if (verdict.pass) {
        // trim the certificate to the smallest sufficient removal set
        if (verdict.witness.size() == 2 && verdict.gap <= table.of(first))
            verdict.witness.pop_back();
    }
    else if (verdict.witness.empty() && first != -1) {
        verdict.witness = {first};
        if (second != -1)
            verdict.witness.push_back(second);
    }
    return verdict;
}

template <typename Judge>
FairnessVerdict run_checks(const Instance& inst, const Allocation& alloc, Notion notion, Judge judge)
{
    FairnessVerdict verdict;
    verdict.notion = notion;
    for (int i = 0; i < inst.agent_count(); ++i)
        for (int j = 0; j < inst.agent_count(); ++j) {
            if (i == j)
                continue;
            auto pair = judge(inst, alloc, envy_gap(inst, alloc, i, j));
            if (! pair.pass && ! verdict.first_violation) {
                verdict.pass = false;
                verdict.first_violation = verdict.pairs.size();
            }
            verdict.pairs.push_back(std::move(pair));
        }
    return verdict;
}

}

const char* to_string(Notion notion)
{
    switch (notion) {
    case Notion::EF: return "EF";
    case Notion::EF1: return "EF1";
    case Notion::EFX: return "EFX";
    case Notion::EF2: return "EF2";
    }
    return "?";
}

std::optional<Notion> notion_from_string(std::string_view text)
{
    std::string upper;
    upper.reserve(text.size());
    for (char c : text)
        upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (upper == "EF")
        return Notion::EF;
    if (upper == "EF1")
        return Notion::EF1;
    if (upper == "EFX")
        return Notion::EFX;
    if (upper == "EF2")
        return Notion::EF2;
    return std::nullopt;
}

FairnessVerdict check_ef(const Instance& inst, const Allocation& alloc)
{
    return run_checks(inst, alloc, Notion::EF, judge_ef);
}

FairnessVerdict check_ef1(const Instance& inst, const Allocation& alloc)
{
    return run_checks(inst, alloc, Notion::EF1, judge_ef1);
}

FairnessVerdict check_efx(const Instance& inst, const Allocation& alloc)
{
    return run_checks(inst, alloc, Notion::EFX, judge_efx);
}

FairnessVerdict check_ef2(const Instance& inst, const Allocation& alloc)
{
    return run_checks(inst, alloc, Notion::EF2, judge_ef2);
}

FairnessVerdict check_fairness(const Instance& inst, const Allocation& alloc, Notion notion)
{
    switch (notion) {
    case Notion::EF: return check_ef(inst, alloc);
    case Notion::EF1: return check_ef1(inst, alloc);
    case Notion::EFX: return check_efx(inst, alloc);
    case Notion::EF2: return check_ef2(inst, alloc);
    }
    throw InputError("unknown fairness notion");
}

}
