#include "lie/simple_type.hpp"

#include <cctype>

namespace lie {

bool admissible(SimpleType t) {
    switch (t.family) {
        case Family::A: return t.rank >= 1;
        case Family::B: return t.rank >= 2;
        case Family::C: return t.rank >= 2;
        case Family::D: return t.rank >= 4;
        case Family::E: return t.rank >= 6 && t.rank <= 8;
        case Family::F: return t.rank == 4;
        case Family::G: return t.rank == 2;
    }
    return false;
}

SimpleType parse_simple_type(std::string_view s) {
    if (s.size() < 2) throw InputError("unrecognized type '" + std::string(s) + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f < 'A' || f > 'G') throw InputError("unrecognized type '" + std::string(s) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])) || rank > 1000)
            throw InputError("unrecognized type '" + std::string(s) + "'");
        rank = 10 * rank + (s[i] - '0');
    }
    SimpleType t{static_cast<Family>(f), rank};
    if (!admissible(t))
        throw InputError("inadmissible type '" + std::string(s) + "'");
    return t;
}

std::string to_string(SimpleType t) {
    return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

bool simply_laced(SimpleType t) {
    switch (t.family) {
        case Family::A:
        case Family::D:
        case Family::E: return true;
        case Family::B:
        case Family::C: return false;
        case Family::F:
        case Family::G: return false;
    }
    return false;
}

SimpleType dual_type(SimpleType t) {
    if (t.family == Family::B) return {Family::C, t.rank};
    if (t.family == Family::C) return {Family::B, t.rank};
    return t;
}

std::vector<SimpleType> all_simple_types(int max_rank) {
    std::vector<SimpleType> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        for (int n = 1; n <= max_rank; ++n)
            if (admissible({f, n})) out.push_back({f, n});
    return out;
}

}  // namespace lie
