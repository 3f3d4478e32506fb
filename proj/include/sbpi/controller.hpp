#pragma once

#include <array>
#include <map>
#include <vector>

#include "sbpi/pomdp.hpp"

namespace sbpi {

/// Key of one joint transition parameter: (action, observation, successor node).
using TransitionKey = std::array<int, 3>;

/// Parameters below this are dropped from sparse node storage.
inline constexpr double kParamDropTolerance = 1e-12;

/// One node of a stochastic finite-state controller, stored sparsely.
///
/// action_probs[a] is the probability of selecting action a in this node.
/// joint_transition[{a,z,n'}] is the joint probability of selecting a AND
/// moving to node n' after observing z, i.e. action_probs[a] times the
/// conditional node-transition probability. For every (a,z) with
/// action_probs[a] > 0 the joint entries over n' sum to action_probs[a].
struct Node {
    std::map<int, double> action_probs;
    std::map<TransitionKey, double> joint_transition;

    double action_prob(int a) const {
        auto it = action_probs.find(a);
        return it == action_probs.end() ? 0.0 : it->second;
    }
    double joint(int a, int z, int n2) const {
        auto it = joint_transition.find({a, z, n2});
        return it == joint_transition.end() ? 0.0 : it->second;
    }

    /// Number of stored parameters (action entries plus transition entries).
    int nonzero_param_count() const {
        return static_cast<int>(action_probs.size() + joint_transition.size());
    }

    /// Throws if the sparse parameter invariants do not hold within tol.
    void validate(int num_actions, int num_observations, int num_nodes, double tol = 1e-9) const;
};

/// Ordered collection of nodes plus the action/observation dimensions the
/// parameters are indexed against.
class Controller {
  public:
    Controller(int num_actions, int num_observations)
        : num_actions_(num_actions), num_observations_(num_observations) {}

    int num_actions() const { return num_actions_; }
    int num_observations() const { return num_observations_; }
    int size() const { return static_cast<int>(nodes_.size()); }

    const Node& node(int n) const { return nodes_[static_cast<std::size_t>(n)]; }
    const std::vector<Node>& nodes() const { return nodes_; }

    int append(Node node) {
        nodes_.push_back(std::move(node));
        return size() - 1;
    }
    void set_node(int n, Node node) { nodes_[static_cast<std::size_t>(n)] = std::move(node); }

  private:
    int num_actions_;
    int num_observations_;
    std::vector<Node> nodes_;
};

/// Parameter counts per node: the full count |A| + |A||Z||N| and the
/// min/avg/max number of stored non-zero parameters (average rounded up).
struct SparsityStats {
    long total_params_per_node = 0;
    int min_nonzero = 0;
    int avg_nonzero = 0;
    int max_nonzero = 0;
};

/// One deterministic node per action; node i selects action i and returns
/// to itself for every observation.
Controller initial_controller(const Pomdp& pomdp);

/// Appends a deterministic node selecting `action` with successors[z] as
/// the successor node for observation z. successors may reference the new
/// node's own index (== controller size before the call). Returns the new
/// node's index.
int add_deterministic_node(Controller& c, int action, const std::vector<int>& successors);

SparsityStats sparsity_stats(const Controller& c);

/// Replaces node n's parameters. Entries below kParamDropTolerance are
/// dropped and the remaining mass renormalized; the proposed parameters
/// must satisfy the node invariants within 1e-6 or std::invalid_argument
/// is thrown.
void replace_node_params(Controller& c, int n, std::map<int, double> action_probs,
                         std::map<TransitionKey, double> joint_transition);

}  // namespace sbpi
