#include "delchoice/mechanisms.hpp"

#include <algorithm>
#include <limits>

namespace delchoice {

int ucb_grid_size(int T) {
    if (T < 2) throw std::invalid_argument("T must be at least 2");
    return static_cast<int>(std::ceil(std::pow(T / std::log(T), 0.25)));
}

// --- IterativeSearch -------------------------------------------------------

EligibleSet IterativeSearch::announce(int) {
    return committed_ ? EligibleSet::inclusive(tau_) : EligibleSet::strict(tau_);
}

void IterativeSearch::feedback(const RoundRecord& rec) {
    if (committed_) return;
    if (rec.accepted)
        tau_ = rec.principal_utility;
    else
        committed_ = true;
}

// --- DelayedIterativeSearch ------------------------------------------------

DelayedIterativeSearch::DelayedIterativeSearch(double gamma, double y_min)
    : delay_(delay_rounds(gamma, y_min)) {}

EligibleSet DelayedIterativeSearch::announce(int) {
    if (committed_) return EligibleSet::inclusive(tau_);
    if (wait_left_ == 0) probe_pending_ = true;
    return EligibleSet::strict(tau_);
}

void DelayedIterativeSearch::feedback(const RoundRecord& rec) {
    if (committed_) return;
    if (probe_pending_) {
        probe_pending_ = false;
        if (rec.accepted)
            tau_next_ = rec.principal_utility;
        else
            finish_flag_ = true;
        wait_left_ = delay_;
        if (wait_left_ == 0) {
            if (finish_flag_) committed_ = true;
            else tau_ = tau_next_;
        }
        return;
    }
    if (wait_left_ > 0 && --wait_left_ == 0) {
        if (finish_flag_) committed_ = true;
        else tau_ = tau_next_;
    }
}

// --- DelayedBinarySearch -----------------------------------------------------

DelayedBinarySearch::DelayedBinarySearch(double gamma, double y_min, int T)
    : delay_(delay_rounds(gamma, y_min)), width_target_(1.0 / T) {
    if (T < 1) throw std::invalid_argument("T must be at least 1");
}

EligibleSet DelayedBinarySearch::announce(int) {
    if (committed_) return EligibleSet::inclusive(l_);
    if (wait_left_ > 0) return EligibleSet::inclusive(l_);
    probe_tau_ = (l_ + r_) / 2.0;
    probe_pending_ = true;
    return EligibleSet::strict(probe_tau_);
}

void DelayedBinarySearch::feedback(const RoundRecord& rec) {
    if (committed_) return;
    if (probe_pending_) {
        probe_pending_ = false;
        if (rec.accepted)
            l_ = probe_tau_;
        else
            r_ = probe_tau_;
        wait_left_ = delay_;
        if (r_ - l_ <= width_target_ && wait_left_ == 0) committed_ = true;
        return;
    }
    if (wait_left_ > 0 && --wait_left_ == 0 && r_ - l_ <= width_target_)
        committed_ = true;
}

// --- DelayedProgressiveSearch ------------------------------------------------

DelayedProgressiveSearch::DelayedProgressiveSearch(double gamma, double L1, double L2,
                                                   double d, double beta,
                                                   EpsSchedule schedule)
    : gamma_(gamma),
      L1_(L1),
      d_(d),
      beta_(beta),
      alpha_(L1 - (beta + 2.0) / (2.0 * beta) * L2),
      schedule_(schedule) {
    if (beta < 2.0) throw std::invalid_argument("beta must be at least 2");
    if (d <= 0.0) throw std::invalid_argument("d must be positive");
    if (alpha_ <= 0.0)
        throw std::invalid_argument("require L1 - (beta+2)/(2 beta) * L2 > 0");
    t_gamma(gamma);  // validates gamma
}

int DelayedProgressiveSearch::current_delay() const {
    const double eps = schedule_ == EpsSchedule::Fixed ? alpha_ * beta_ * d_
                                                       : alpha_ * (r_ - l_);
    return delay_rounds(gamma_, std::max(eps, 1e-300));
}

void DelayedProgressiveSearch::maybe_commit() {
    if (r_ - l_ <= beta_ * d_) {
        phase_ = Phase::Committed;
        committed_ = true;
    }
}

EligibleSet DelayedProgressiveSearch::announce(int) {
    switch (phase_) {
        case Phase::AwaitFirst:
            return EligibleSet::accept_all();
        case Phase::InitialWait:
            return EligibleSet::inclusive(0.0);
        case Phase::Probe:
            probe_tau_ = (l_ + r_) / 2.0;
            probe_pending_ = true;
            return EligibleSet::strict(probe_tau_);
        case Phase::Wait:
        case Phase::Committed:
            return EligibleSet::inclusive(l_);
    }
    return EligibleSet::inclusive(l_);
}

void DelayedProgressiveSearch::feedback(const RoundRecord& rec) {
    switch (phase_) {
        case Phase::AwaitFirst:
            if (rec.accepted) {
                l_ = rec.principal_utility;
                y_ = rec.agent_utility_raw;
                r_ = std::min(1.0, l_ + y_ / L1_);
                // The fixed schedule follows the main-text pseudocode, which
                // opens with an E_0 block of D rounds after the first proposal.
                if (schedule_ == EpsSchedule::Fixed) {
                    wait_left_ = current_delay();
                    phase_ = wait_left_ > 0 ? Phase::InitialWait : Phase::Probe;
                } else {
                    phase_ = Phase::Probe;
                }
                maybe_commit();
            }
            break;
        case Phase::InitialWait:
            if (--wait_left_ == 0) {
                phase_ = Phase::Probe;
                maybe_commit();
            }
            break;
        case Phase::Probe: {
            probe_pending_ = false;
            if (rec.accepted) {
                l_ = rec.principal_utility;
                y_ = rec.agent_utility_raw;
            } else {
                r_ = probe_tau_;
            }
            wait_left_ = current_delay();
            phase_ = wait_left_ > 0 ? Phase::Wait : Phase::Probe;
            if (wait_left_ == 0) {
                r_ = std::min(r_, l_ + y_ / L1_);
                maybe_commit();
            }
            break;
        }
        case Phase::Wait:
            if (--wait_left_ == 0) {
                r_ = std::min(r_, l_ + y_ / L1_);
                phase_ = Phase::Probe;
                maybe_commit();
            }
            break;
        case Phase::Committed:
            break;
    }
}

// --- UcbThreshold -----------------------------------------------------------

UcbThreshold::UcbThreshold(int T) : Q_(ucb_grid_size(T)) {
    pulls_.assign(Q_, 0);
    reward_sum_.assign(Q_, 0.0);
}

int UcbThreshold::pick_arm(int round) const {
    for (int i = 0; i < Q_; ++i)
        if (pulls_[i] == 0) return i;
    int best = 0;
    double best_index = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < Q_; ++i) {
        const double mean = reward_sum_[i] / pulls_[i];
        const double bonus = std::sqrt(2.0 * std::log(static_cast<double>(round)) / pulls_[i]);
        const double index = mean + bonus;
        if (index > best_index) {
            best_index = index;
            best = i;
        }
    }
    return best;
}

EligibleSet UcbThreshold::announce(int round) {
    last_arm_ = pick_arm(round);
    return EligibleSet::inclusive(arm_threshold(last_arm_));
}

void UcbThreshold::feedback(const RoundRecord& rec) {
    if (last_arm_ < 0) return;
    pulls_[last_arm_] += 1;
    reward_sum_[last_arm_] += rec.principal_utility;
    last_arm_ = -1;
}

// --- SuccessiveEliminationDelayed ---------------------------------------------

SuccessiveEliminationDelayed::SuccessiveEliminationDelayed(int Q, int D, double delta,
                                                           int T)
    : Q_(Q), D_(D), T_(T), delta_(delta) {
    if (Q < 1) throw std::invalid_argument("Q must be at least 1");
    if (D < 0 || delta < 0.0 || T < 1)
        throw std::invalid_argument("invalid successive elimination parameters");
    active_.assign(Q_, true);
}

EligibleSet SuccessiveEliminationDelayed::announce(int) {
    if (sweep_pos_ >= sweep_.size()) {
        sweep_.clear();
        for (int i = 0; i < Q_; ++i)
            if (active_[i]) sweep_.push_back(i);
        sweep_pos_ = 0;
    }
    last_arm_ = sweep_[sweep_pos_++];
    return EligibleSet::inclusive(arm_threshold(last_arm_));
}

void SuccessiveEliminationDelayed::feedback(const RoundRecord& rec) {
    pull_arm_.push_back(last_arm_);
    pull_reward_.push_back(rec.principal_utility);
    last_arm_ = -1;
    if (sweep_pos_ >= sweep_.size()) eliminate(static_cast<int>(pull_arm_.size()));
}

void SuccessiveEliminationDelayed::eliminate(int now_round) {
    const int cutoff = now_round - D_;  // only feedback from rounds <= t - D
    if (visible_count_.empty()) {
        visible_count_.assign(Q_, 0);
        visible_sum_.assign(Q_, 0.0);
    }
    // cutoff is monotone in now_round, so the visible stats advance incrementally
    while (processed_ < pull_arm_.size() && processed_ < static_cast<std::size_t>(std::max(cutoff, 0))) {
        visible_count_[pull_arm_[processed_]] += 1;
        visible_sum_[pull_arm_[processed_]] += pull_reward_[processed_];
        ++processed_;
    }
    std::vector<double> lcb(Q_, 0.0), ucb(Q_, 0.0);
    const double log_term = 2.0 * std::log(static_cast<double>(T_));
    for (int i = 0; i < Q_; ++i) {
        if (!active_[i]) continue;
        const int count = visible_count_[i];
        const double sum = visible_sum_[i];
        const int n = std::max(count, 1);
        const double mean = sum / n;
        const double width = std::sqrt(log_term / n);
        lcb[i] = mean - width - delta_;
        ucb[i] = mean + width + delta_;
    }
    double best_lcb = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < Q_; ++i)
        if (active_[i]) best_lcb = std::max(best_lcb, lcb[i]);
    for (int i = 0; i < Q_; ++i)
        if (active_[i] && ucb[i] < best_lcb) active_[i] = false;
}

std::unique_ptr<SuccessiveEliminationDelayed> stochastic_strategic_mechanism(
    double gamma, double L1, double y_min, int T) {
    if (L1 <= 0.0 || y_min <= 0.0)
        throw std::invalid_argument("L1 and y_min must be positive");
    const double eps = std::min(L1 / T, y_min);
    const int D = delay_rounds(gamma, eps);
    const double delta = eps / L1;
    return std::make_unique<SuccessiveEliminationDelayed>(ucb_grid_size(T), D, delta, T);
}

// --- DelayWrapper ------------------------------------------------------------

DelayWrapper::DelayWrapper(std::unique_ptr<Mechanism> inner, int D)
    : inner_(std::move(inner)), D_(D) {
    if (D < 0) throw std::invalid_argument("delay must be nonnegative");
}

DelayWrapper::DelayWrapper(const DelayWrapper& other)
    : inner_(other.inner_->clone()), D_(other.D_), pending_(other.pending_) {}

EligibleSet DelayWrapper::announce(int round) {
    while (!pending_.empty() && pending_.front().round <= round - D_) {
        inner_->feedback(pending_.front());
        pending_.pop_front();
    }
    return inner_->announce(round);
}

void DelayWrapper::feedback(const RoundRecord& rec) { pending_.push_back(rec); }

}  // namespace delchoice
