#include "sbpi/controller.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace sbpi {

void Node::validate(int num_actions, int num_observations, int num_nodes, double tol) const {
    if (action_probs.empty()) throw std::invalid_argument("node selects no action");
    double psi_sum = 0.0;
    for (const auto& [a, p] : action_probs) {
        if (a < 0 || a >= num_actions) throw std::invalid_argument("action index out of range");
        if (p <= 0.0) throw std::invalid_argument("stored action probability must be positive");
        psi_sum += p;
    }
    if (std::abs(psi_sum - 1.0) > tol)
        throw std::invalid_argument("action probabilities sum to " + std::to_string(psi_sum));

    // Joint transition mass per (a,z) must match the action probability.
    std::map<std::pair<int, int>, double> az_sum;
    for (const auto& [key, w] : joint_transition) {
        auto [a, z, n2] = key;
        if (a < 0 || a >= num_actions || z < 0 || z >= num_observations || n2 < 0 ||
            n2 >= num_nodes)
            throw std::invalid_argument("joint transition key out of range");
        if (w <= 0.0) throw std::invalid_argument("stored transition probability must be positive");
        if (action_probs.find(a) == action_probs.end())
            throw std::invalid_argument("transition entry for action with zero probability");
        az_sum[{a, z}] += w;
    }
    for (const auto& [a, psi] : action_probs) {
        for (int z = 0; z < num_observations; ++z) {
            auto it = az_sum.find({a, z});
            double total = it == az_sum.end() ? 0.0 : it->second;
            if (std::abs(total - psi) > tol)
                throw std::invalid_argument("joint transition mass for (a=" + std::to_string(a) +
                                            ", z=" + std::to_string(z) + ") is " +
                                            std::to_string(total) + ", expected " +
                                            std::to_string(psi));
        }
    }
}

Controller initial_controller(const Pomdp& pomdp) {
    Controller c(pomdp.num_actions(), pomdp.num_observations());
    for (int a = 0; a < pomdp.num_actions(); ++a) {
        std::vector<int> self(static_cast<std::size_t>(pomdp.num_observations()), a);
        add_deterministic_node(c, a, self);
    }
    return c;
}

int add_deterministic_node(Controller& c, int action, const std::vector<int>& successors) {
    if (action < 0 || action >= c.num_actions())
        throw std::invalid_argument("action index out of range");
    if (static_cast<int>(successors.size()) != c.num_observations())
        throw std::invalid_argument("successor map must cover every observation");
    const int new_index = c.size();
    for (int n2 : successors)
        if (n2 < 0 || n2 > new_index) throw std::invalid_argument("successor node out of range");

    Node node;
    node.action_probs[action] = 1.0;
    for (int z = 0; z < c.num_observations(); ++z)
        node.joint_transition[{action, z, successors[static_cast<std::size_t>(z)]}] = 1.0;
    return c.append(std::move(node));
}

SparsityStats sparsity_stats(const Controller& c) {
    SparsityStats stats;
    const long n = c.size();
    stats.total_params_per_node =
        static_cast<long>(c.num_actions()) +
        static_cast<long>(c.num_actions()) * c.num_observations() * n;
    if (n == 0) return stats;

    long sum = 0;
    stats.min_nonzero = c.node(0).nonzero_param_count();
    stats.max_nonzero = stats.min_nonzero;
    for (const Node& node : c.nodes()) {
        int count = node.nonzero_param_count();
        stats.min_nonzero = std::min(stats.min_nonzero, count);
        stats.max_nonzero = std::max(stats.max_nonzero, count);
        sum += count;
    }
    // Average rounded up to the nearest integer.
    stats.avg_nonzero = static_cast<int>((sum + n - 1) / n);
    return stats;
}

void replace_node_params(Controller& c, int n, std::map<int, double> action_probs,
                         std::map<TransitionKey, double> joint_transition) {
    if (n < 0 || n >= c.size()) throw std::invalid_argument("node index out of range");
    constexpr double kViolationTolerance = 1e-6;

    // Pass 1: drop negligible entries. An action survives only if it keeps
    // transition mass for every observation; an action at the drop floor
    // whose mass vanished is removed outright.
    std::map<int, double> raw_psi;
    for (const auto& [a, p] : action_probs) {
        if (a < 0 || a >= c.num_actions()) throw std::invalid_argument("action index out of range");
        if (p < -kViolationTolerance) throw std::invalid_argument("negative action probability");
        if (p >= kParamDropTolerance) raw_psi[a] = p;
    }
    std::map<std::pair<int, int>, double> az_sum;
    std::map<TransitionKey, double> raw_w;
    for (const auto& [key, w] : joint_transition) {
        auto [a, z, n2] = key;
        if (z < 0 || z >= c.num_observations() || n2 < 0 || n2 >= c.size())
            throw std::invalid_argument("joint transition key out of range");
        if (w < -kViolationTolerance) throw std::invalid_argument("negative transition probability");
        if (w < kParamDropTolerance || raw_psi.find(a) == raw_psi.end()) continue;
        raw_w[key] = w;
        az_sum[{a, z}] += w;
    }
    for (auto it = raw_psi.begin(); it != raw_psi.end();) {
        auto [a, psi] = *it;
        bool starved = false;
        double worst = 0.0;
        for (int z = 0; z < c.num_observations(); ++z) {
            auto jt = az_sum.find({a, z});
            double total = jt == az_sum.end() ? 0.0 : jt->second;
            worst = std::max(worst, std::abs(total - psi));
            if (total <= 0.0) starved = true;
        }
        if (worst > kViolationTolerance)
            throw std::invalid_argument("joint transition mass does not match action probability "
                                        "for action " + std::to_string(a));
        if (starved) {
            // Mass for this action fell below the drop floor everywhere.
            for (int z = 0; z < c.num_observations(); ++z) az_sum.erase({a, z});
            std::erase_if(raw_w, [a = a](const auto& kv) { return kv.first[0] == a; });
            it = raw_psi.erase(it);
        } else {
            ++it;
        }
    }

    // Pass 2: renormalize the surviving mass.
    double psi_sum = 0.0;
    for (const auto& [a, p] : raw_psi) psi_sum += p;
    if (std::abs(psi_sum - 1.0) > kViolationTolerance)
        throw std::invalid_argument("action probabilities sum to " + std::to_string(psi_sum));

    Node node;
    for (const auto& [a, p] : raw_psi) node.action_probs[a] = p / psi_sum;
    for (const auto& [key, w] : raw_w) {
        auto [a, z, n2] = key;
        node.joint_transition[key] = w * node.action_probs[a] / az_sum[{a, z}];
    }

    node.validate(c.num_actions(), c.num_observations(), c.size());
    c.set_node(n, std::move(node));
}

}  // namespace sbpi
