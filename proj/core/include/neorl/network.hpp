#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "neorl/gvf_bank.hpp"
#include "neorl/node.hpp"
#include "neorl/rng.hpp"
#include "neorl/waterworld.hpp"

namespace neorl {

enum class ObjectFilter : std::uint8_t { All, GreenOnly, RedOnly };
enum class EdgeDelay : std::uint8_t { Immediate, OneStep };

struct EdgeSource {
    enum class Kind : std::uint8_t { ExternalObjects, NodeDesire };
    Kind kind = Kind::ExternalObjects;
    ObjectFilter filter = ObjectFilter::All;  // ExternalObjects only
    std::string node;                         // NodeDesire only
    std::string group;

    static EdgeSource external(ObjectFilter f) { return {Kind::ExternalObjects, f, {}, {}}; }
    static EdgeSource desire(std::string node, std::string group) {
        return {Kind::NodeDesire, ObjectFilter::All, std::move(node), std::move(group)};
    }
    friend bool operator==(const EdgeSource&, const EdgeSource&) = default;
};

// An element route. The gain multiplies the carried valence; OneStep edges
// deliver the source group's output from the previous tick.
struct EdgeSpec {
    EdgeSource source;
    std::string target_node;
    std::string target_group;
    double gain = 1.0;
    EdgeDelay delay = EdgeDelay::Immediate;
    friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

// One behavioral node: a grid, a bank, and named extraction groups. Each
// group gathers its own input elements and produces its own NodeOutput from
// the shared cognitive map.
struct NodeSpec {
    std::string name;
    int resolution = 7;
    double gamma = 0.95;
    double alpha = 0.1;
    std::vector<std::string> groups;
    friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

struct TapSpec {
    std::string node;
    std::string group;
    double weight = 1.0;
    friend bool operator==(const TapSpec&, const TapSpec&) = default;
};

struct NetworkSpec {
    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;
    std::vector<TapSpec> taps;
    double epsilon = 0.02;
    bool normalize_desire = false;  // unit-length output displacements
    Rect bounds = {{0.0, 0.0}, {1.0, 1.0}};
    friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

// With probability epsilon a uniform action, otherwise uniform over the
// argmax set of q (exact-equality ties).
Action epsilon_greedy(const QVector& q, double epsilon, Rng& rng);

struct GroupOutput {
    std::string node;
    std::string group;
    NodeOutput output;
    std::size_t input_count = 0;
};

struct TickResult {
    Action action;
    QVector agent_q{};
    std::vector<GroupOutput> outputs;        // in evaluation order
    std::vector<Element> consumed_delayed;   // per OneStep edge, the element used this tick
};

// The wired behavioral graph. Immediate desire edges are evaluated in
// topological order within a tick; recurrent (OneStep) edges carry the
// previous tick's output, seeded with a zero-valence element at the arena
// center so tick 0 is unaffected.
class Network {
public:
    static Network build(const NetworkSpec& spec);

    TickResult tick(const Observation& obs, Rng& rng);

    // One transition per node, in that node's own grid, drives its bank.
    void learn(const Observation& prev, Action action, const Observation& next);

    const NetworkSpec& spec() const { return spec_; }
    const GvfBank& bank(std::string_view node) const;
    GvfBank& bank(std::string_view node);

    // Plain-text adjacency listing of the wiring.
    std::string describe() const;

private:
    Network() = default;

    struct GroupRef {
        int node = -1;
        int group_in_node = -1;
    };
    struct ResolvedEdge {
        EdgeSource::Kind kind;
        ObjectFilter filter = ObjectFilter::All;
        int source_group = -1;  // flat group id for NodeDesire
        int target_group = -1;
        double gain = 1.0;
        EdgeDelay delay = EdgeDelay::Immediate;
        int delay_slot = -1;  // index into delayed_ for OneStep edges
    };

    int group_id(std::string_view node, std::string_view group) const;
    int node_id(std::string_view node) const;

    NetworkSpec spec_;
    std::vector<GvfBank> banks_;              // per node
    std::vector<GroupRef> groups_;            // flat group ids
    std::vector<std::string> group_names_;    // "node/group"
    std::vector<ResolvedEdge> edges_;         // spec order
    std::vector<int> eval_order_;             // flat group ids, topologically sorted
    std::vector<std::pair<int, double>> taps_;  // (flat group id, weight)
    std::vector<Element> delayed_;            // per OneStep edge
};

}  // namespace neorl
