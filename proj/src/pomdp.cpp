#include "sbpi/pomdp.hpp"

#include <cmath>
#include <cstddef>

namespace sbpi {

namespace {

constexpr double kProbTolerance = 1e-9;

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

BeliefState::BeliefState(std::vector<double> p) : probs(std::move(p)) {
    require(!probs.empty(), "belief state must have at least one entry");
    double sum = 0.0;
    for (double v : probs) {
        require(v >= 0.0, "belief state entries must be non-negative");
        sum += v;
    }
    require(std::abs(sum - 1.0) <= kProbTolerance, "belief state must sum to 1");
}

BeliefState BeliefState::uniform(int num_states) {
    return BeliefState(std::vector<double>(static_cast<std::size_t>(num_states),
                                           1.0 / static_cast<double>(num_states)));
}

BeliefState BeliefState::point_mass(int num_states, int state) {
    std::vector<double> p(static_cast<std::size_t>(num_states), 0.0);
    p.at(static_cast<std::size_t>(state)) = 1.0;
    return BeliefState(std::move(p));
}

Pomdp::Pomdp(int num_states, int num_actions, int num_observations,
             std::vector<double> transition, std::vector<double> observation,
             std::vector<double> reward, double discount,
             std::optional<BeliefState> start,
             std::vector<std::string> state_names,
             std::vector<std::string> action_names,
             std::vector<std::string> observation_names)
    : num_states_(num_states),
      num_actions_(num_actions),
      num_observations_(num_observations),
      transition_(std::move(transition)),
      observation_(std::move(observation)),
      reward_(std::move(reward)),
      discount_(discount),
      state_names_(std::move(state_names)),
      action_names_(std::move(action_names)),
      observation_names_(std::move(observation_names)) {
    require(num_states_ >= 1 && num_actions_ >= 1 && num_observations_ >= 1,
            "POMDP dimensions must be positive");
    require(discount_ > 0.0 && discount_ < 1.0, "discount must lie in (0, 1)");

    const auto S = static_cast<std::size_t>(num_states_);
    const auto A = static_cast<std::size_t>(num_actions_);
    const auto Z = static_cast<std::size_t>(num_observations_);
    require(transition_.size() == S * A * S, "transition table has wrong size");
    require(observation_.size() == A * S * Z, "observation table has wrong size");
    require(reward_.size() == S * A, "reward table has wrong size");

    for (int s = 0; s < num_states_; ++s) {
        for (int a = 0; a < num_actions_; ++a) {
            double sum = 0.0;
            for (int s2 = 0; s2 < num_states_; ++s2) {
                double p = this->transition(s, a, s2);
                require(p >= 0.0, "transition probabilities must be non-negative");
                sum += p;
            }
            require(std::abs(sum - 1.0) <= kProbTolerance,
                    "transition row does not sum to 1 for (s=" + std::to_string(s) +
                        ", a=" + std::to_string(a) + ")");
        }
    }
    for (int a = 0; a < num_actions_; ++a) {
        for (int s2 = 0; s2 < num_states_; ++s2) {
            double sum = 0.0;
            for (int z = 0; z < num_observations_; ++z) {
                double p = this->observation(a, s2, z);
                require(p >= 0.0, "observation probabilities must be non-negative");
                sum += p;
            }
            require(std::abs(sum - 1.0) <= kProbTolerance,
                    "observation row does not sum to 1 for (s'=" + std::to_string(s2) +
                        ", a=" + std::to_string(a) + ")");
        }
    }

    max_abs_reward_ = 0.0;
    for (double r : reward_) max_abs_reward_ = std::max(max_abs_reward_, std::abs(r));

    explicit_start_ = start.has_value();
    if (explicit_start_) {
        require(start->size() == num_states_, "start belief has wrong dimension");
        start_ = std::move(*start);
    } else {
        start_ = BeliefState::uniform(num_states_);
    }
}

double obs_prob(const Pomdp& pomdp, const BeliefState& b, int a, int z) {
    pomdp.check_action(a);
    pomdp.check_observation(z);
    const int S = pomdp.num_states();
    double total = 0.0;
    for (int s = 0; s < S; ++s) {
        if (b[s] == 0.0) continue;
        double inner = 0.0;
        for (int s2 = 0; s2 < S; ++s2)
            inner += pomdp.transition(s, a, s2) * pomdp.observation(a, s2, z);
        total += b[s] * inner;
    }
    return total;
}

double belief_reward(const Pomdp& pomdp, const BeliefState& b, int a) {
    pomdp.check_action(a);
    double total = 0.0;
    for (int s = 0; s < pomdp.num_states(); ++s) total += b[s] * pomdp.reward(s, a);
    return total;
}

std::optional<BeliefState> belief_update(const Pomdp& pomdp, const BeliefState& b, int a, int z) {
    pomdp.check_action(a);
    pomdp.check_observation(z);
    const int S = pomdp.num_states();
    std::vector<double> unnorm(static_cast<std::size_t>(S), 0.0);
    for (int s = 0; s < S; ++s) {
        if (b[s] == 0.0) continue;
        for (int s2 = 0; s2 < S; ++s2)
            unnorm[static_cast<std::size_t>(s2)] +=
                b[s] * pomdp.transition(s, a, s2) * pomdp.observation(a, s2, z);
    }
    double denom = 0.0;
    for (double v : unnorm) denom += v;
    if (denom <= kZeroObservationTolerance) return std::nullopt;
    for (double& v : unnorm) v /= denom;
    return BeliefState(std::move(unnorm));
}

}  // namespace sbpi
