#include "neorl/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "neorl/csv.hpp"
#include "neorl/errors.hpp"

namespace neorl {

Action epsilon_greedy(const QVector& q, double epsilon, Rng& rng) {
    if (!(epsilon >= 0.0) || !(epsilon <= 1.0)) {
        throw ConfigError("epsilon: must be in [0, 1]");
    }
    if (uniform_double(rng) < epsilon) {
        return kActions[uniform_int(rng, kActionCount)];
    }
    const double best = std::max(std::max(q[0], q[1]), std::max(q[2], q[3]));
    int argmax[kActionCount];
    int ties = 0;
    for (int a = 0; a < kActionCount; ++a) {
        if (q[a] == best) argmax[ties++] = a;
    }
    return ties == 1 ? static_cast<Action>(argmax[0])
                     : static_cast<Action>(argmax[uniform_int(rng, ties)]);
}

int Network::node_id(std::string_view node) const {
    for (int i = 0; i < static_cast<int>(spec_.nodes.size()); ++i) {
        if (spec_.nodes[i].name == node) return i;
    }
    return -1;
}

int Network::group_id(std::string_view node, std::string_view group) const {
    for (int g = 0; g < static_cast<int>(groups_.size()); ++g) {
        const GroupRef& ref = groups_[g];
        if (spec_.nodes[ref.node].name == node &&
            spec_.nodes[ref.node].groups[ref.group_in_node] == group) {
            return g;
        }
    }
    return -1;
}

Network Network::build(const NetworkSpec& spec) {
    if (!(spec.epsilon >= 0.0) || !(spec.epsilon <= 1.0)) {
        throw ConfigError("epsilon: must be in [0, 1]");
    }
    if (!spec.bounds.valid()) {
        throw ConfigError("bounds: must have positive width and height");
    }
    if (spec.nodes.empty()) {
        throw ConfigError("nodes: at least one node is required");
    }
    if (spec.taps.empty()) {
        throw ConfigError("taps: at least one tap is required");
    }

    Network net;
    net.spec_ = spec;

    std::set<std::string> names;
    for (const NodeSpec& node : spec.nodes) {
        if (node.name.empty()) throw ConfigError("node name: must be non-empty");
        if (!names.insert(node.name).second) {
            throw ConfigError("node '" + node.name + "': duplicate name");
        }
        std::set<std::string> group_names(node.groups.begin(), node.groups.end());
        if (group_names.size() != node.groups.size()) {
            throw ConfigError("node '" + node.name + "': duplicate group name");
        }
        net.banks_.emplace_back(NresGrid(node.resolution, spec.bounds), node.gamma, node.alpha);
    }

    for (int n = 0; n < static_cast<int>(spec.nodes.size()); ++n) {
        for (int g = 0; g < static_cast<int>(spec.nodes[n].groups.size()); ++g) {
            net.groups_.push_back({n, g});
            net.group_names_.push_back(spec.nodes[n].name + "/" + spec.nodes[n].groups[g]);
        }
    }

    int delay_slots = 0;
    for (const EdgeSpec& e : spec.edges) {
        ResolvedEdge re;
        re.kind = e.source.kind;
        re.gain = e.gain;
        re.delay = e.delay;
        if (!std::isfinite(e.gain)) throw ConfigError("edge gain: must be finite");
        re.target_group = net.group_id(e.target_node, e.target_group);
        if (re.target_group < 0) {
            throw ConfigError("edge target '" + e.target_node + "/" + e.target_group +
                              "': no such group");
        }
        if (e.source.kind == EdgeSource::Kind::ExternalObjects) {
            re.filter = e.source.filter;
            if (e.delay == EdgeDelay::OneStep) {
                throw ConfigError("edge from external objects: OneStep delay applies to node "
                                  "desires only");
            }
        } else {
            re.source_group = net.group_id(e.source.node, e.source.group);
            if (re.source_group < 0) {
                throw ConfigError("edge source '" + e.source.node + "/" + e.source.group +
                                  "': no such group");
            }
            if (e.source.node == e.target_node && e.delay != EdgeDelay::OneStep) {
                throw ConfigError("edge '" + e.source.node + "/" + e.source.group + " -> " +
                                  e.target_node + "/" + e.target_group +
                                  "': recurrence must be OneStep delayed");
            }
            if (e.delay == EdgeDelay::OneStep) {
                re.delay_slot = delay_slots++;
            }
        }
        net.edges_.push_back(re);
    }

    // Immediate desire edges must form a DAG over extraction groups.
    const int group_count = static_cast<int>(net.groups_.size());
    std::vector<std::vector<int>> successors(group_count);
    std::vector<int> indegree(group_count, 0);
    for (const ResolvedEdge& e : net.edges_) {
        if (e.kind == EdgeSource::Kind::NodeDesire && e.delay == EdgeDelay::Immediate) {
            successors[e.source_group].push_back(e.target_group);
            ++indegree[e.target_group];
        }
    }
    std::vector<int> ready;
    for (int g = 0; g < group_count; ++g) {
        if (indegree[g] == 0) ready.push_back(g);
    }
    while (!ready.empty()) {
        const int g = ready.front();
        ready.erase(ready.begin());
        net.eval_order_.push_back(g);
        for (const int succ : successors[g]) {
            if (--indegree[succ] == 0) ready.push_back(succ);
        }
    }
    if (static_cast<int>(net.eval_order_.size()) != group_count) {
        // Walk the leftover subgraph to print one concrete cycle.
        int start = 0;
        while (indegree[start] == 0) ++start;
        std::vector<int> path;
        std::vector<bool> on_path(group_count, false);
        int cur = start;
        while (!on_path[cur]) {
            on_path[cur] = true;
            path.push_back(cur);
            for (const int succ : successors[cur]) {
                if (indegree[succ] > 0) {
                    cur = succ;
                    break;
                }
            }
        }
        std::string msg = "immediate edges form a cycle: ";
        bool in_cycle = false;
        for (const int g : path) {
            if (g == cur) in_cycle = true;
            if (in_cycle) msg += net.group_names_[g] + " -> ";
        }
        msg += net.group_names_[cur];
        throw ConfigError(msg);
    }

    for (const TapSpec& tap : spec.taps) {
        const int g = net.group_id(tap.node, tap.group);
        if (g < 0) {
            throw ConfigError("tap '" + tap.node + "/" + tap.group + "': no such group");
        }
        if (!std::isfinite(tap.weight)) throw ConfigError("tap weight: must be finite");
        net.taps_.emplace_back(g, tap.weight);
    }

    // Recurrent edges start from a zero-valence element at the arena center,
    // which by the zero-valence property cannot affect tick 0.
    net.delayed_.assign(delay_slots, Element{spec.bounds.center(), 0.0});
    return net;
}

TickResult Network::tick(const Observation& obs, Rng& rng) {
    TickResult result;
    std::vector<NodeOutput> outputs(groups_.size());
    result.consumed_delayed.resize(delayed_.size());

    std::vector<Element> elements;
    for (const int gid : eval_order_) {
        elements.clear();
        // Gather in edge declaration order; external edges expand objects in
        // board order.
        for (const ResolvedEdge& e : edges_) {
            if (e.target_group != gid) continue;
            if (e.kind == EdgeSource::Kind::ExternalObjects) {
                for (const ObjectState& obj : obs.objects) {
                    if (e.filter == ObjectFilter::GreenOnly && obj.color != Color::Green) continue;
                    if (e.filter == ObjectFilter::RedOnly && obj.color != Color::Red) continue;
                    elements.push_back({obj.position, valence_of(obj.color) * e.gain});
                }
            } else if (e.delay == EdgeDelay::OneStep) {
                Element carried = delayed_[e.delay_slot];
                result.consumed_delayed[e.delay_slot] = carried;
                carried.valence *= e.gain;
                elements.push_back(carried);
            } else {
                Element carried = outputs[e.source_group].desire;
                carried.valence *= e.gain;
                elements.push_back(carried);
            }
        }
        const GroupRef& ref = groups_[gid];
        outputs[gid] =
            node_forward(banks_[ref.node], obs.agent_position, elements, spec_.normalize_desire);
        result.outputs.push_back(
            {spec_.nodes[ref.node].name, spec_.nodes[ref.node].groups[ref.group_in_node],
             outputs[gid], elements.size()});
    }

    for (const auto& [gid, weight] : taps_) {
        for (int a = 0; a < kActionCount; ++a) {
            result.agent_q[a] += weight * outputs[gid].q[a];
        }
    }
    result.action = epsilon_greedy(result.agent_q, spec_.epsilon, rng);

    for (const ResolvedEdge& e : edges_) {
        if (e.delay_slot >= 0) {
            delayed_[e.delay_slot] = outputs[e.source_group].desire;
        }
    }
    return result;
}

void Network::learn(const Observation& prev, Action action, const Observation& next) {
    for (GvfBank& bank : banks_) {
        const NresGrid& grid = bank.grid();
        bank.update_all(
            {grid.cell_of(prev.agent_position), action, grid.cell_of(next.agent_position)});
    }
}

const GvfBank& Network::bank(std::string_view node) const {
    const int n = node_id(node);
    if (n < 0) throw ConfigError("node '" + std::string(node) + "': no such node");
    return banks_[n];
}

GvfBank& Network::bank(std::string_view node) {
    const int n = node_id(node);
    if (n < 0) throw ConfigError("node '" + std::string(node) + "': no such node");
    return banks_[n];
}

std::string Network::describe() const {
    std::ostringstream os;
    os << "nodes:\n";
    for (const NodeSpec& node : spec_.nodes) {
        os << "  " << node.name << ": " << node.resolution << "x" << node.resolution
           << ", gamma " << format_double(node.gamma) << ", alpha " << format_double(node.alpha)
           << ", groups [";
        for (std::size_t i = 0; i < node.groups.size(); ++i) {
            os << (i ? ", " : "") << node.groups[i];
        }
        os << "]\n";
    }
    os << "edges:\n";
    for (const EdgeSpec& e : spec_.edges) {
        os << "  ";
        if (e.source.kind == EdgeSource::Kind::ExternalObjects) {
            os << "objects["
               << (e.source.filter == ObjectFilter::All
                       ? "all"
                       : e.source.filter == ObjectFilter::GreenOnly ? "green" : "red")
               << "]";
        } else {
            os << e.source.node << "/" << e.source.group;
        }
        os << " -> " << e.target_node << "/" << e.target_group << "  (gain "
           << format_double(e.gain) << ", "
           << (e.delay == EdgeDelay::Immediate ? "immediate" : "one-step") << ")\n";
    }
    os << "taps:\n";
    for (const TapSpec& tap : spec_.taps) {
        os << "  " << tap.node << "/" << tap.group << " x " << format_double(tap.weight) << "\n";
    }
    os << "epsilon: " << format_double(spec_.epsilon) << "\n";
    return os.str();
}

}  // namespace neorl
