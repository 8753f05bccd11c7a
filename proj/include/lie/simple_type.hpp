#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lie/errors.hpp"

namespace lie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;

    friend bool operator==(const SimpleType&, const SimpleType&) = default;
    friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

// Ranks for which the label denotes a simple algebra not already listed under
// another letter: A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E_6..E_8,
// F_4, G_2.  Low-rank coincidences (D_3 = A_3, B_1 = A_1, ...) are rejected,
// not aliased.
bool admissible(SimpleType t);

// "G2", "a5", "E8" -> SimpleType.  Case-insensitive; throws InputError on
// anything unparsable or inadmissible.
SimpleType parse_simple_type(std::string_view s);

std::string to_string(SimpleType t);

bool simply_laced(SimpleType t);

// Langlands dual label: B_n <-> C_n, everything else self-dual.
SimpleType dual_type(SimpleType t);

// Every admissible type of rank <= max_rank, ordered A1..A_n, B2.., C2..,
// D4.., E6.., F4, G2.
std::vector<SimpleType> all_simple_types(int max_rank);

}  // namespace lie
