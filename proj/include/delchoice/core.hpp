#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core domain types for the repeated delegated choice game: solutions carry a
// principal utility x and an agent utility y, both in [0,1]; the principal
// screens proposals through an announced eligible set.
namespace delchoice {

inline void check_utility(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
}

struct Solution {
    int id = 0;
    double x = 0.0;  // principal utility
    double y = 0.0;  // agent utility

    Solution() = default;
    Solution(int id_, double x_, double y_) : id(id_), x(x_), y(y_) {
        check_utility(x, "Solution.x");
        check_utility(y, "Solution.y");
    }
    bool operator==(const Solution&) const = default;
};

// The ex-post draw of all non-null solutions for one round. The null solution
// is implicit; proposing it is represented by a null Proposal.
struct Realization {
    int round = 1;
    std::vector<Solution> solutions;
};

enum class SetKind { ThresholdInclusive, ThresholdStrict, AcceptAll, AcceptNone, Explicit };

// Threshold eligible sets E_tau (x >= tau) and E_tau^> (x > tau), plus the
// trivial sets and an explicit point list used by test fixtures.
struct EligibleSet {
    SetKind kind = SetKind::AcceptAll;
    double tau = 0.0;
    std::vector<std::pair<double, double>> points;  // Explicit only

    static constexpr double kMatchTol = 1e-12;

    static EligibleSet inclusive(double t) {
        check_utility(t, "threshold");
        return {SetKind::ThresholdInclusive, t, {}};
    }
    static EligibleSet strict(double t) {
        check_utility(t, "threshold");
        return {SetKind::ThresholdStrict, t, {}};
    }
    static EligibleSet accept_all() { return {SetKind::AcceptAll, 0.0, {}}; }
    static EligibleSet accept_none() { return {SetKind::AcceptNone, 0.0, {}}; }
    static EligibleSet explicit_points(std::vector<std::pair<double, double>> pts) {
        return {SetKind::Explicit, 0.0, std::move(pts)};
    }

    bool operator==(const EligibleSet&) const = default;
};

bool is_eligible(const EligibleSet& set, const Solution& sol);

std::string describe(const EligibleSet& set);

// Null (propose nothing) or the index of a solution within the round's
// realization.
struct Proposal {
    std::optional<std::size_t> index;

    static Proposal null() { return {}; }
    static Proposal of(std::size_t i) { return {i}; }
    bool is_null() const { return !index.has_value(); }
    bool operator==(const Proposal&) const = default;
};

struct Outcome {
    bool accepted = false;
    double principal_utility = 0.0;
    double agent_utility_raw = 0.0;
};

// Resolves a round: an eligible non-null proposal is accepted and pays
// (X_a, Y_a); anything else pays (0, 0) to both sides.
Outcome round_outcome(const EligibleSet& set, const Realization& realization,
                      const Proposal& proposal);

struct RoundRecord {
    int round = 0;
    EligibleSet eligible;
    Proposal proposal;
    bool accepted = false;
    double principal_utility = 0.0;    // 0 unless accepted
    double agent_utility_raw = 0.0;    // 0 unless accepted
    double agent_utility_discounted = 0.0;
    double proposal_x = 0.0;  // ex-ante utilities of the proposed solution
    double proposal_y = 0.0;  // (0 for a null proposal)
};

struct History {
    std::vector<RoundRecord> records;

    int rounds() const { return static_cast<int>(records.size()); }
    double total_principal_utility() const;
};

}  // namespace delchoice
