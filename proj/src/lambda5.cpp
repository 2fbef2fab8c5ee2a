#include "qgenus/lambda5.hpp"

#include "qgenus/errors.hpp"

#include <vector>

namespace qgenus {

namespace {

int mod(const mpz_class& v, unsigned long m)
{
    return static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), m));
}

CycInt reduce25(const CycInt& y)
{
    return CycInt(mod(y[0], 25), mod(y[1], 25), mod(y[2], 25), mod(y[3], 25));
}

struct UnitTable {
    std::vector<int> coords_of;   // packed a1 + 5 a2 + 25 a3 + 125 a4, or -1
    UnitTable() : coords_of(kLambda5Size, -1)
    {
        // Every unit is w * prod (1 + lambda^i)^{a_i} with w a Teichmuller
        // representative; enumerate all 4 * 5^4 products and index them.
        const CycInt lam = CycInt::lambda();
        std::array<CycInt, 4> basis;
        CycInt lp(1);
        for (int i = 0; i < 4; ++i) {
            lp = reduce25(lp * lam);
            basis[i] = reduce25(CycInt(1) + lp);
        }
        int filled = 0;
        for (int w : kTeichmuller) {
            for (int packed = 0; packed < 625; ++packed) {
                CycInt v(w);
                int rest = packed;
                for (int i = 0; i < 4; ++i) {
                    int a = rest % 5;
                    rest /= 5;
                    for (int k = 0; k < a; ++k) v = reduce25(v * basis[i]);
                }
                int idx = residue_mod_lambda5(v).index();
                if (coords_of[idx] != -1)
                    throw consistency_error("lambda^5 unit table: collision in unit enumeration");
                coords_of[idx] = packed;
                ++filled;
            }
        }
        if (filled != kLambda5Units)
            throw consistency_error("lambda^5 unit table: wrong unit count");
    }
};

const UnitTable& unit_table()
{
    static const UnitTable table;  // thread-safe one-time initialisation
    return table;
}

}  // namespace

int Lambda5Residue::index() const
{
    return label[0] + 5 * label[1] + 25 * label[2] + 125 * label[3];
}

Lambda5Residue Lambda5Residue::from_index(int idx)
{
    if (idx < 0 || idx >= kLambda5Size) throw invalid_input("lambda^5 residue index out of range");
    Lambda5Residue r;
    r.label[0] = static_cast<std::uint8_t>(idx % 5);
    r.label[1] = static_cast<std::uint8_t>((idx / 5) % 5);
    r.label[2] = static_cast<std::uint8_t>((idx / 25) % 5);
    r.label[3] = static_cast<std::uint8_t>(idx / 125);
    return r;
}

CycInt Lambda5Residue::representative() const
{
    long c1 = label[0], c2 = label[1], c3 = label[2];
    long c0 = ((label[3] - c1 - c2 - c3) % 25 + 25) % 25;
    return CycInt(c0, c1, c2, c3);
}

Lambda5Residue residue_mod_lambda5(const CycInt& y)
{
    Lambda5Residue r;
    r.label[0] = static_cast<std::uint8_t>(mod(y[1], 5));
    r.label[1] = static_cast<std::uint8_t>(mod(y[2], 5));
    r.label[2] = static_cast<std::uint8_t>(mod(y[3], 5));
    mpz_class s = y[0] + y[1] + y[2] + y[3];
    r.label[3] = static_cast<std::uint8_t>(mod(s, 25));
    return r;
}

UnitCoords lambda5_unit_coords(const Lambda5Residue& r)
{
    int packed = unit_table().coords_of[r.index()];
    if (packed < 0) throw invalid_input("element is not a unit modulo lambda");
    UnitCoords c;
    for (int i = 0; i < 4; ++i) {
        c[i] = packed % 5;
        packed /= 5;
    }
    return c;
}

UnitCoords lambda5_unit_coords(const CycInt& y)
{
    return lambda5_unit_coords(residue_mod_lambda5(y));
}

bool is_fifth_power_unit_class(const CycInt& y)
{
    return lambda5_unit_coords(y) == UnitCoords{0, 0, 0, 0};
}

}  // namespace qgenus
