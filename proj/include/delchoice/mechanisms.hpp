#pragma once

#include <cmath>
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "delchoice/core.hpp"

// Principal-side algorithms. Each mechanism is a deterministic state machine:
// announce(t) emits the eligible set for round t, feedback(rec) delivers the
// resolved round. Delayed algorithms embed their own delay schedule; the
// generic delay wrapper additionally hides recent feedback from any inner
// mechanism.
namespace delchoice {

inline double t_gamma(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("gamma must lie in (0,1)");
    return 1.0 / (1.0 - gamma);
}

// D = ceil(T_gamma * ln(T_gamma / eps)): the delay confining a gamma-
// discounting agent to eps-best responses.
inline int delay_rounds(double gamma, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
    const double tg = t_gamma(gamma);
    return static_cast<int>(std::ceil(tg * std::log(tg / eps)));
}

class Mechanism {
public:
    virtual ~Mechanism() = default;
    virtual EligibleSet announce(int round) = 0;
    virtual void feedback(const RoundRecord& rec) = 0;
    virtual std::unique_ptr<Mechanism> clone() const = 0;
    virtual std::string name() const = 0;
};

// IterativeSearch: probe E^>_tau, ratchet tau up to each accepted proposal's
// x, and commit to E_tau once a probe comes back empty.
class IterativeSearch final : public Mechanism {
public:
    EligibleSet announce(int round) override;
    void feedback(const RoundRecord& rec) override;
    std::unique_ptr<Mechanism> clone() const override {
        return std::make_unique<IterativeSearch>(*this);
    }
    std::string name() const override { return "iterative_search"; }
    double tau() const { return tau_; }
    bool committed() const { return committed_; }

private:
    double tau_ = 0.0;
    bool committed_ = false;
};

// DelayedIterativeSearch: each probe is followed by D filler rounds of the
// same strict threshold before the probe's answer is acted upon.
class DelayedIterativeSearch final : public Mechanism {
public:
    DelayedIterativeSearch(double gamma, double y_min);
    EligibleSet announce(int round) override;
    void feedback(const RoundRecord& rec) override;
    std::unique_ptr<Mechanism> clone() const override {
        return std::make_unique<DelayedIterativeSearch>(*this);
    }
    std::string name() const override { return "delayed_iterative_search"; }
    int delay() const { return delay_; }
    double tau() const { return tau_; }
    bool committed() const { return committed_; }

private:
    int delay_;
    double tau_ = 0.0;
    double tau_next_ = 0.0;
    bool finish_flag_ = false;
    bool committed_ = false;
    int wait_left_ = 0;  // filler rounds remaining; probe when 0
    bool probe_pending_ = false;
};

// DelayedBinarySearch: halve [l, r] by probing E^>_{(l+r)/2}, announcing
// E_l for D rounds between probes, until r - l <= 1/T.
class DelayedBinarySearch final : public Mechanism {
public:
    DelayedBinarySearch(double gamma, double y_min, int T);
    EligibleSet announce(int round) override;
    void feedback(const RoundRecord& rec) override;
    std::unique_ptr<Mechanism> clone() const override {
        return std::make_unique<DelayedBinarySearch>(*this);
    }
    std::string name() const override { return "delayed_binary_search"; }
    int delay() const { return delay_; }
    double lower() const { return l_; }
    double upper() const { return r_; }
    bool committed() const { return committed_; }

private:
    int delay_;
    double width_target_;
    double l_ = 0.0;
    double r_ = 1.0;
    bool committed_ = false;
    int wait_left_ = 0;
    bool probe_pending_ = false;
    double probe_tau_ = 0.0;
};

enum class EpsSchedule { Fixed, Adaptive };

// DelayedProgressiveSearch: interval search under the d-dense and Lipschitz
// assumptions; r is repeatedly clamped to l + y/L1.
class DelayedProgressiveSearch final : public Mechanism {
public:
    DelayedProgressiveSearch(double gamma, double L1, double L2, double d,
                             double beta = 4.0, EpsSchedule schedule = EpsSchedule::Fixed);
    EligibleSet announce(int round) override;
    void feedback(const RoundRecord& rec) override;
    std::unique_ptr<Mechanism> clone() const override {
        return std::make_unique<DelayedProgressiveSearch>(*this);
    }
    std::string name() const override { return "delayed_progressive_search"; }
    double lower() const { return l_; }
    double upper() const { return r_; }
    double alpha() const { return alpha_; }
    bool committed() const { return committed_; }

private:
    int current_delay() const;
    void maybe_commit();

    double gamma_, L1_, d_, beta_, alpha_;
    EpsSchedule schedule_;
    enum class Phase { AwaitFirst, InitialWait, Probe, Wait, Committed } phase_ = Phase::AwaitFirst;
    double l_ = 0.0, r_ = 1.0, y_ = 0.0;
    bool committed_ = false;
    int wait_left_ = 0;
    double probe_tau_ = 0.0;
    bool probe_pending_ = false;
};

// UCB1 over the threshold grid {1/Q, ..., Q/Q} with Q = ceil((T/ln T)^(1/4));
// the round's realized principal utility is the reward.
class UcbThreshold final : public Mechanism {
public:
    explicit UcbThreshold(int T);
    EligibleSet announce(int round) override;
    void feedback(const RoundRecord& rec) override;
    std::unique_ptr<Mechanism> clone() const override {
        return std::make_unique<UcbThreshold>(*this);
    }
    std::string name() const override { return "ucb_threshold"; }
    int num_arms() const { return Q_; }
    double arm_threshold(int i) const { return static_cast<double>(i + 1) / Q_; }
    const std::vector<int>& pulls() const { return pulls_; }

private:
    int pick_arm(int round) const;

    int Q_;
    std::vector<int> pulls_;
    std::vector<double> reward_sum_;
    int last_arm_ = -1;
};

// SuccessiveEliminationDelayed: round-robin over the active arms; after each
// sweep, confidence bounds computed from feedback of rounds <= t - D (widened
// by delta) eliminate dominated arms.
class SuccessiveEliminationDelayed final : public Mechanism {
public:
    SuccessiveEliminationDelayed(int Q, int D, double delta, int T);
    EligibleSet announce(int round) override;
    void feedback(const RoundRecord& rec) override;
    std::unique_ptr<Mechanism> clone() const override {
        return std::make_unique<SuccessiveEliminationDelayed>(*this);
    }
    std::string name() const override { return "successive_elimination_delayed"; }
    int num_arms() const { return Q_; }
    double arm_threshold(int i) const { return static_cast<double>(i + 1) / Q_; }
    const std::vector<bool>& active() const { return active_; }
    bool is_active(int i) const { return active_[static_cast<std::size_t>(i)]; }
    int delay() const { return D_; }
    double delta() const { return delta_; }

private:
    void eliminate(int now_round);

    int Q_, D_, T_;
    double delta_;
    std::vector<bool> active_;
    std::vector<int> pull_arm_;        // arm pulled at round r (1-based index r-1)
    std::vector<double> pull_reward_;  // realized reward at round r
    std::vector<int> sweep_;           // arms of the in-progress sweep, in order
    std::size_t sweep_pos_ = 0;
    int last_arm_ = -1;
    std::vector<int> visible_count_;    // pulls visible past the delay cutoff
    std::vector<double> visible_sum_;
    std::size_t processed_ = 0;
};

// Theorem 4.2 composition: successive elimination with eps = min(L1/T, y_min),
// D = ceil(T_gamma ln(T_gamma/eps)), delta = eps/L1 and the UCB arm grid.
std::unique_ptr<SuccessiveEliminationDelayed> stochastic_strategic_mechanism(
    double gamma, double L1, double y_min, int T);

// Presents to the inner mechanism only feedback from rounds <= t - D.
class DelayWrapper final : public Mechanism {
public:
    DelayWrapper(std::unique_ptr<Mechanism> inner, int D);
    DelayWrapper(const DelayWrapper& other);
    EligibleSet announce(int round) override;
    void feedback(const RoundRecord& rec) override;
    std::unique_ptr<Mechanism> clone() const override {
        return std::make_unique<DelayWrapper>(*this);
    }
    std::string name() const override { return "delayed(" + inner_->name() + ")"; }
    int delay() const { return D_; }

private:
    std::unique_ptr<Mechanism> inner_;
    int D_;
    std::deque<RoundRecord> pending_;
};

int ucb_grid_size(int T);  // Q = ceil((T / ln T)^(1/4))

}  // namespace delchoice
