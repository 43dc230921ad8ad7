#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace marpf {

struct Vertex {
    int x = 0;
    int y = 0;
    friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline int manhattan(Vertex a, Vertex b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

std::string to_string(Vertex v);

// Direction order E,W,S,N is fixed; search tie-breaking and network edge
// enumeration both rely on it.
enum class Dir : int { East = 0, West = 1, South = 2, North = 3 };

inline constexpr std::array<Dir, 4> kDirOrder = {Dir::East, Dir::West, Dir::South, Dir::North};

constexpr Vertex dir_delta(Dir d) {
    switch (d) {
        case Dir::East: return {1, 0};
        case Dir::West: return {-1, 0};
        case Dir::South: return {0, -1};
        case Dir::North: return {0, 1};
    }
    return {0, 0};
}

constexpr Vertex step(Vertex v, Dir d) {
    Vertex delta = dir_delta(d);
    return {v.x + delta.x, v.y + delta.y};
}

std::string to_string(Dir d);

struct GridMap {
    int size_x = 0;
    int size_y = 0;

    bool contains(Vertex v) const {
        return v.x >= 0 && v.x < size_x && v.y >= 0 && v.y < size_y;
    }
    int cell_count() const { return size_x * size_y; }
    int index(Vertex v) const { return v.y * size_x + v.x; }
    Vertex vertex(int idx) const { return {idx % size_x, idx / size_x}; }
    int degree(Vertex v) const;
    // Manhattan-distance-1 neighbours in E,W,S,N order, off-grid ones dropped.
    std::vector<Vertex> neighbors(Vertex v) const;
    int undirected_edge_count() const {
        return (size_x - 1) * size_y + size_x * (size_y - 1);
    }
    friend bool operator==(const GridMap&, const GridMap&) = default;
};

struct Action {
    enum class Kind : uint8_t { Stay, Move, Load, Unload };
    Kind kind = Kind::Stay;
    Dir dir = Dir::East;  // meaningful only for Move

    static Action stay() { return {Kind::Stay, Dir::East}; }
    static Action move(Dir d) { return {Kind::Move, d}; }
    static Action load() { return {Kind::Load, Dir::East}; }
    static Action unload() { return {Kind::Unload, Dir::East}; }

    friend bool operator==(const Action& a, const Action& b) {
        return a.kind == b.kind && (a.kind != Kind::Move || a.dir == b.dir);
    }
};

std::string to_string(const Action& a);  // "STAY", "MOVE E", "LOAD", "UNLOAD"

struct AgvState {
    std::string id;
    Vertex loc;
    bool loaded = false;
    std::optional<std::string> carrying;  // rack id, present iff loaded
    friend bool operator==(const AgvState&, const AgvState&) = default;
};

struct RackState {
    std::string id;
    Vertex loc;
    friend bool operator==(const RackState&, const RackState&) = default;
};

// Instances loaded from files always start with unloaded AGVs; the hybrid
// solver builds in-memory instances whose AGVs may start loaded mid-task.
struct Instance {
    GridMap grid;
    std::vector<AgvState> agvs;                         // sorted by id
    std::vector<RackState> racks;                       // sorted by id
    std::vector<std::pair<std::string, Vertex>> targets;  // rack id -> goal, sorted by id

    int agv_index(const std::string& id) const;
    int rack_index(const std::string& id) const;
    std::optional<Vertex> goal_of(const std::string& rack_id) const;
    friend bool operator==(const Instance&, const Instance&) = default;
};

struct InstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Throws InstanceError on violated invariants (duplicate starts, bad goals, ...).
void check_instance(const Instance& inst, bool require_unloaded_starts = false);

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

struct AgvPose {
    Vertex loc;
    bool loaded = false;
    std::optional<std::string> carrying;
    friend bool operator==(const AgvPose&, const AgvPose&) = default;
};

struct Plan {
    int horizon = 0;
    std::vector<std::vector<Action>> actions;    // [agv][t], t < horizon
    std::vector<std::vector<AgvPose>> agv_traj;  // [agv][0..horizon]; empty when parsed from file
    std::vector<std::vector<Vertex>> rack_traj;  // [rack][0..horizon]
};

std::string serialize_plan(const Plan& plan, const Instance& inst);
Plan parse_plan(const std::string& text, const Instance& inst);  // actions only

struct IllegalActionError : std::runtime_error {
    int agv;  // index into the world's agv list, -1 if n/a
    IllegalActionError(int agv_, const std::string& what)
        : std::runtime_error(what), agv(agv_) {}
};

struct WorldState {
    std::vector<AgvState> agvs;
    std::vector<RackState> racks;
    static WorldState from(const Instance& inst) { return {inst.agvs, inst.racks}; }
    friend bool operator==(const WorldState&, const WorldState&) = default;
};

// One synchronous step. Throws IllegalActionError on moves off-grid and
// invalid load/unload; does not check conflicts (that is the validator's job).
WorldState apply_actions(const GridMap& grid, const WorldState& state,
                         const std::vector<Action>& actions);

// Replays `actions` from the instance start and fills all trajectories.
// Throws IllegalActionError if the replay breaks.
Plan make_plan(const Instance& inst, std::vector<std::vector<Action>> actions);

// Vertex conflict at timestep t (two entities on one cell).
bool check_vertex_conflict(std::span<const Vertex> traj_a, std::span<const Vertex> traj_b, int t);

// Swap / corner / move-into-stationary conflict over [t, t+1], checked
// symmetrically in both orderings: a conflict exists when one entity starts
// where the other ends up while their displacement vectors differ.
bool check_motion_conflict(std::span<const Vertex> traj_a, std::span<const Vertex> traj_b, int t);

}  // namespace marpf
