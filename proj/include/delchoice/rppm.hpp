#pragma once

#include <memory>
#include <vector>

#include "delchoice/mechanisms.hpp"

// Repeated posted-price mechanism: a buyer with fixed value v buys iff the
// posted price is at most v. The delegation adapter turns any pricer into a
// threshold mechanism for the deterministic myopic setting.
namespace delchoice {

class Pricer {
public:
    virtual ~Pricer() = default;
    virtual double post(int round) = 0;
    virtual void observe(bool bought) = 0;
    virtual std::unique_ptr<Pricer> clone() const = 0;
};

// Always posts the same price.
class ConstantPricer final : public Pricer {
public:
    explicit ConstantPricer(double price) : price_(price) {}
    double post(int) override { return price_; }
    void observe(bool) override {}
    std::unique_ptr<Pricer> clone() const override {
        return std::make_unique<ConstantPricer>(*this);
    }

private:
    double price_;
};

// Phased interval refinement for a fixed unknown value: within a phase, probe
// ascending grid points of relative step s (s squares between phases, so the
// feasible interval width roughly squares per phase). A rejection at p shrinks
// hi to p and ends the phase; once hi - lo <= 1/T the pricer commits to lo.
class KlFixedValuePricer final : public Pricer {
public:
    explicit KlFixedValuePricer(int T);
    double post(int round) override;
    void observe(bool bought) override;
    std::unique_ptr<Pricer> clone() const override {
        return std::make_unique<KlFixedValuePricer>(*this);
    }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool committed() const { return committed_; }

private:
    void next_phase();

    double lo_ = 0.0;
    double hi_ = 1.0;
    double rel_step_ = 0.5;
    double step_ = 0.5;
    double next_price_ = 0.5;
    double commit_width_;
    double last_price_ = 0.0;
    bool committed_ = false;
};

struct RppmRun {
    std::vector<double> prices;
    std::vector<char> sales;
    double revenue = 0.0;
    double regret = 0.0;  // T*v - revenue for a fixed-value buyer
};

RppmRun run_rppm(Pricer& pricer, double value, int T);

// Appendix-D style adapter: posted price p becomes the announced threshold
// E_p; an accepted proposal maps to "buyer bought".
class DelegationAdapter final : public Mechanism {
public:
    explicit DelegationAdapter(std::unique_ptr<Pricer> pricer);
    DelegationAdapter(const DelegationAdapter& other);
    EligibleSet announce(int round) override;
    void feedback(const RoundRecord& rec) override;
    std::unique_ptr<Mechanism> clone() const override {
        return std::make_unique<DelegationAdapter>(*this);
    }
    std::string name() const override { return "delegation_adapter"; }

private:
    std::unique_ptr<Pricer> pricer_;
};

}  // namespace delchoice
