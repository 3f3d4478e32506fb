#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbpi {

/// Probability distribution over states. Entries are non-negative and sum
/// to one within 1e-9; the constructor enforces this.
struct BeliefState {
    std::vector<double> probs;

    BeliefState() = default;
    explicit BeliefState(std::vector<double> p);

    static BeliefState uniform(int num_states);
    static BeliefState point_mass(int num_states, int state);

    int size() const { return static_cast<int>(probs.size()); }
    double operator[](int s) const { return probs[static_cast<std::size_t>(s)]; }
};

/// Discrete POMDP: states, actions, observations, transition and
/// observation tables, expected immediate rewards, and a discount factor
/// in (0, 1). Immutable after construction; construction validates the
/// stochasticity of both probability tables.
///
/// Tables are stored dense:
///   transition(s, a, s')  = P(s' | s, a)
///   observation(a, s', z) = P(z | s', a)
///   reward(s, a)          = expected immediate reward
class Pomdp {
  public:
    Pomdp(int num_states, int num_actions, int num_observations,
          std::vector<double> transition, std::vector<double> observation,
          std::vector<double> reward, double discount,
          std::optional<BeliefState> start = std::nullopt,
          std::vector<std::string> state_names = {},
          std::vector<std::string> action_names = {},
          std::vector<std::string> observation_names = {});

    int num_states() const { return num_states_; }
    int num_actions() const { return num_actions_; }
    int num_observations() const { return num_observations_; }
    double discount() const { return discount_; }

    double transition(int s, int a, int s2) const {
        return transition_[(static_cast<std::size_t>(s) * num_actions_ + a) * num_states_ + s2];
    }
    double observation(int a, int s2, int z) const {
        return observation_[(static_cast<std::size_t>(a) * num_states_ + s2) * num_observations_ + z];
    }
    double reward(int s, int a) const {
        return reward_[static_cast<std::size_t>(s) * num_actions_ + a];
    }

    /// Largest |R(s,a)|; bounds any value by max_abs_reward() / (1 - discount).
    double max_abs_reward() const { return max_abs_reward_; }

    /// Initial belief: the one given at construction, else uniform.
    const BeliefState& start_belief() const { return start_; }
    bool has_explicit_start() const { return explicit_start_; }

    const std::vector<std::string>& state_names() const { return state_names_; }
    const std::vector<std::string>& action_names() const { return action_names_; }
    const std::vector<std::string>& observation_names() const { return observation_names_; }

    void check_action(int a) const {
        if (a < 0 || a >= num_actions_) throw std::out_of_range("action index out of range");
    }
    void check_observation(int z) const {
        if (z < 0 || z >= num_observations_) throw std::out_of_range("observation index out of range");
    }
    void check_state(int s) const {
        if (s < 0 || s >= num_states_) throw std::out_of_range("state index out of range");
    }

  private:
    int num_states_;
    int num_actions_;
    int num_observations_;
    std::vector<double> transition_;
    std::vector<double> observation_;
    std::vector<double> reward_;
    double discount_;
    BeliefState start_;
    bool explicit_start_;
    double max_abs_reward_;
    std::vector<std::string> state_names_;
    std::vector<std::string> action_names_;
    std::vector<std::string> observation_names_;
};

/// Observations with probability at or below this are treated as impossible.
inline constexpr double kZeroObservationTolerance = 1e-12;

/// P(z | b, a) = sum_s b(s) sum_s' P(s'|s,a) P(z|s',a).
double obs_prob(const Pomdp& pomdp, const BeliefState& b, int a, int z);

/// R(b, a) = sum_s b(s) R(s, a).
double belief_reward(const Pomdp& pomdp, const BeliefState& b, int a);

/// Bayes update of b after taking action a and observing z. Returns
/// nullopt when P(z|b,a) <= kZeroObservationTolerance (impossible
/// observation; callers skip such branches).
std::optional<BeliefState> belief_update(const Pomdp& pomdp, const BeliefState& b, int a, int z);

}  // namespace sbpi
