#include "delchoice/core.hpp"

#include <cmath>
#include <sstream>

namespace delchoice {

bool is_eligible(const EligibleSet& set, const Solution& sol) {
    switch (set.kind) {
        case SetKind::ThresholdInclusive:
            return sol.x >= set.tau;
        case SetKind::ThresholdStrict:
            return sol.x > set.tau;
        case SetKind::AcceptAll:
            return true;
        case SetKind::AcceptNone:
            return false;
        case SetKind::Explicit:
            for (const auto& [px, py] : set.points) {
                if (std::abs(px - sol.x) <= EligibleSet::kMatchTol &&
                    std::abs(py - sol.y) <= EligibleSet::kMatchTol)
                    return true;
            }
            return false;
    }
    return false;
}

std::string describe(const EligibleSet& set) {
    std::ostringstream os;
    switch (set.kind) {
        case SetKind::ThresholdInclusive: os << "inclusive(" << set.tau << ")"; break;
        case SetKind::ThresholdStrict: os << "strict(" << set.tau << ")"; break;
        case SetKind::AcceptAll: os << "accept_all"; break;
        case SetKind::AcceptNone: os << "accept_none"; break;
        case SetKind::Explicit: os << "explicit[" << set.points.size() << "]"; break;
    }
    return os.str();
}

Outcome round_outcome(const EligibleSet& set, const Realization& realization,
                      const Proposal& proposal) {
    if (proposal.is_null()) return {};
    const std::size_t i = *proposal.index;
    if (i >= realization.solutions.size())
        throw std::out_of_range("invalid proposal: index out of bounds");
    const Solution& sol = realization.solutions[i];
    if (!is_eligible(set, sol)) return {};
    return {true, sol.x, sol.y};
}

double History::total_principal_utility() const {
    double total = 0.0;
    for (const auto& rec : records) total += rec.principal_utility;
    return total;
}

}  // namespace delchoice
