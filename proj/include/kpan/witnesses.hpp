// Extremal and counterexample graphs.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "kpan/graph.hpp"

namespace kpan {

enum class WitnessFamily { Tightness, Remark1, Remark2, Remark3 };

std::string_view to_string(WitnessFamily f);

/// Properties a construction is claimed to have.
struct ExpectedProperties {
    std::int64_t edge_count = 0;
    /// Smallest r at which the degree census of Posa's condition fails.
    std::optional<int> posa_failure_r;
    bool hamiltonian = false;
};

struct WitnessSpec {
    WitnessFamily family = WitnessFamily::Tightness;
    /// A profile for Tightness, the integer a for the remark families.
    std::variant<PartProfile, int> parameter;
    ExpectedProperties expected;
};

/// K(profile) with every edge at vertex 0 (a minimum-degree vertex of part 1)
/// removed except the one to the lowest-indexed neighbour. One edge short of
/// chorded_threshold and not Hamiltonian. Needs k >= 2 and p - n1 - 2 >= 0.
KGraph tightness_witness(const PartProfile& profile);

/// G(a, a-2, 2) minus the a-2 edges from v_1..v_{a-2} in V1 to one u in V2.
/// Needs a >= 5. Posa fails at r = a - 1.
KGraph remark_family_1(int a);

/// G(a, a-1, 2) minus the a-1 edges from v_1..v_{a-1} in V1 to one u in V2.
/// Needs a >= 3. Posa fails at r = a.
KGraph remark_family_2(int a);

/// K(4a, 4a, 2) minus u_i^1 v_i^1, u_i^2 v_i^2, u_i^1 v_i^2, u_i^2 v_i^1 for
/// i = 1..a. V1 is laid out as blocks u^1, u^2, u^3, u^4 of size a, likewise
/// V2. Needs a >= 1. Posa fails at r = 4a.
KGraph remark_family_3(int a);

WitnessSpec witness_spec(WitnessFamily family, std::variant<PartProfile, int> parameter);
KGraph build_witness(const WitnessSpec& spec);

}  // namespace kpan
