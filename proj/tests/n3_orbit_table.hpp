#ifndef FLAGSWAP_TESTS_N3_ORBIT_TABLE_HPP
#define FLAGSWAP_TESTS_N3_ORBIT_TABLE_HPP

#include <array>
#include <string_view>
#include <vector>

// The twenty orbits of T^3 as a left/right pairing, transcribed cell by cell.
struct OrbitTableRow {
    std::vector<std::string_view> left;
    std::vector<std::string_view> right;
};

inline const std::array<OrbitTableRow, 10>& n3_orbit_table()
{
    static const std::array<OrbitTableRow, 10> rows{{
        {{"111/11/1"},
         {"000/00/0"}},
        {{"110/11/1"},
         {"001/00/0"}},
        {{"100/10/1"},
         {"011/01/0"}},
        {{"101/10/1"},
         {"010/01/0"}},
        {{"100/11/1", "111/00/1", "111/11/0", "001/10/1"},
         {"001/01/0", "010/10/0", "100/00/0", "010/01/1"}},
        {{"011/00/0", "000/11/0", "000/00/1", "110/01/0"},
         {"110/10/1", "101/01/1", "011/11/1", "101/10/0"}},
        {{"101/11/1", "110/00/1", "110/11/0", "000/10/1"},
         {"000/01/0", "011/10/0", "101/00/0", "011/01/1"}},
        {{"010/00/0", "001/11/0", "001/00/1", "111/01/0"},
         {"111/10/1", "100/01/1", "010/11/1", "100/10/0"}},
        {{"110/00/0", "000/10/0", "000/01/1", "011/10/1", "101/11/0", "101/00/1"},
         {"111/10/0", "111/01/1", "001/11/1", "010/00/1", "100/01/0", "010/11/0"}},
        {{"111/00/0", "100/11/0", "001/10/0", "100/00/1", "010/10/1", "001/01/1"},
         {"110/10/0", "101/01/0", "110/01/1", "011/11/0", "011/00/1", "000/11/1"}},
    }};
    return rows;
}

#endif // FLAGSWAP_TESTS_N3_ORBIT_TABLE_HPP
