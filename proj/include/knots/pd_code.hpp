#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knots {

// Planar-diagram code: 4-tuples of arc labels, counterclockwise starting
// from the incoming under-strand ("X[a,b,c,d]" text convention).
// A valid code on n crossings uses labels 1..2n, each exactly twice, with
// labels increasing by one cyclically along each component.
struct PdCode {
    std::vector<std::array<int, 4>> crossings;

    int num_crossings() const { return static_cast<int>(crossings.size()); }
    int num_arcs() const { return 2 * num_crossings(); }

    friend bool operator==(const PdCode&, const PdCode&) = default;
};

struct PdParseError : std::runtime_error {
    enum class Kind { MalformedToken, ArcMultiplicity, BadLabels, NotRealizable };
    Kind kind;
    size_t position;

    PdParseError(Kind k, size_t pos, const std::string& what)
        : std::runtime_error(what), kind(k), position(pos) {}
};

// Whitespace-separated "X[a,b,c,d]" tokens; "" is the 0-crossing unknot.
PdCode parse_pd(std::string_view text);

// Serialization; parse_pd(to_string(pd)) == pd, bit-exact.
std::string to_string(const PdCode& pd);

// Dowker-Thistlethwaite code of a knot: whitespace-separated signed even
// integers, entry i pairing crossing visits 2i-1 and |a_i|; a_i > 0 means
// the odd-numbered pass goes under.  Produces some planar realization
// (unique up to reflection for prime knots).
PdCode parse_dt(std::string_view text);

}  // namespace knots
