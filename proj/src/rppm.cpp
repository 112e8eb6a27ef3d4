#include "delchoice/rppm.hpp"

#include <stdexcept>

namespace delchoice {

KlFixedValuePricer::KlFixedValuePricer(int T) {
    if (T < 2) throw std::invalid_argument("T must be at least 2");
    commit_width_ = 1.0 / T;
    step_ = (hi_ - lo_) * rel_step_;
    next_price_ = lo_ + step_;
}

void KlFixedValuePricer::next_phase() {
    rel_step_ *= rel_step_;
    step_ = (hi_ - lo_) * rel_step_;
    next_price_ = lo_ + step_;
}

double KlFixedValuePricer::post(int) {
    if (!committed_ && hi_ - lo_ <= commit_width_) committed_ = true;
    if (committed_) {
        last_price_ = lo_;
        return lo_;
    }
    // phase exhausted without a rejection: lo has climbed to within one step
    // of hi, so the interval already shrank; move to a finer grid
    while (next_price_ > hi_ + 1e-15) {
        next_phase();
        if (hi_ - lo_ <= commit_width_) {
            committed_ = true;
            last_price_ = lo_;
            return lo_;
        }
    }
    last_price_ = next_price_;
    return last_price_;
}

void KlFixedValuePricer::observe(bool bought) {
    if (committed_) return;
    if (bought) {
        lo_ = last_price_;
        next_price_ = lo_ + step_;
    } else {
        hi_ = last_price_;
        next_phase();
    }
}

RppmRun run_rppm(Pricer& pricer, double value, int T) {
    check_utility(value, "buyer value");
    RppmRun run;
    run.prices.reserve(T);
    run.sales.reserve(T);
    for (int t = 1; t <= T; ++t) {
        const double p = pricer.post(t);
        const bool bought = value >= p;
        pricer.observe(bought);
        run.prices.push_back(p);
        run.sales.push_back(bought ? 1 : 0);
        if (bought) run.revenue += p;
    }
    run.regret = T * value - run.revenue;
    return run;
}

DelegationAdapter::DelegationAdapter(std::unique_ptr<Pricer> pricer)
    : pricer_(std::move(pricer)) {}

DelegationAdapter::DelegationAdapter(const DelegationAdapter& other)
    : pricer_(other.pricer_->clone()) {}

EligibleSet DelegationAdapter::announce(int round) {
    return EligibleSet::inclusive(pricer_->post(round));
}

void DelegationAdapter::feedback(const RoundRecord& rec) {
    pricer_->observe(rec.accepted);
}

}  // namespace delchoice
