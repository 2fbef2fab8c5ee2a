#pragma once

#include "qgenus/cyc_int.hpp"

#include <array>
#include <cstdint>

namespace qgenus {

// Coset label of y + lambda^5 Z[z]. Since lambda^5 = 5 * lambda * unit, the
// coset is determined by (c1, c2, c3) mod 5 and the coordinate sum mod 25.
struct Lambda5Residue {
    std::array<std::uint8_t, 4> label{};  // c1, c2, c3 mod 5; (c0+c1+c2+c3) mod 25

    int index() const;                     // 0 .. 3124
    static Lambda5Residue from_index(int idx);
    bool is_unit() const { return label[3] % 5 != 0; }
    CycInt representative() const;

    auto operator<=>(const Lambda5Residue&) const = default;
};

inline constexpr int kLambda5Size = 3125;
inline constexpr int kLambda5Units = 2500;

Lambda5Residue residue_mod_lambda5(const CycInt& y);

// Coordinates of a lambda-unit in (Z[z]/lambda^5)^* / fifth powers, an F_5
// vector space of dimension 4 with basis 1 + lambda^i, i = 1..4.
using UnitCoords = std::array<int, 4>;

// Throws invalid_input if y is divisible by lambda.
UnitCoords lambda5_unit_coords(const CycInt& y);
UnitCoords lambda5_unit_coords(const Lambda5Residue& r);

bool is_fifth_power_unit_class(const CycInt& y);

// The four roots of unity of order dividing 4 in Z_5, as integers mod 25.
inline constexpr std::array<int, 4> kTeichmuller = {1, 7, 18, 24};

}  // namespace qgenus
