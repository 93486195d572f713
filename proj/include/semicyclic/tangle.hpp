#pragma once

#include "semicyclic/orientation.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semicyclic {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

/// The elementary Morse pieces of a sliced diagram.
enum class SliceKind { cup_plain, cup_twisted, cap_plain, cap_twisted, cross_pos, cross_neg, id };

const char* slice_kind_name(SliceKind k);

struct Slice {
    SliceKind kind;
    int position; // 0-based strand index where the piece attaches
    bool operator==(const Slice&) const = default;
};

/**
 * A sliced (Morse) presentation of a framed oriented tangle: slices are read
 * bottom to top. Cups create an adjacent strand pair, caps consume one,
 * crossings act on two adjacent downward strands (the homogeneity
 * restriction). The top signature is derived, not stored.
 */
struct Diagram {
    Signature bottom;
    std::vector<Slice> slices;
    bool operator==(const Diagram&) const = default;
};

struct ValidationIssue {
    int slice_index; // -1 for boundary-level issues
    std::string message;
};

struct ValidationReport {
    bool valid = false;
    std::vector<ValidationIssue> issues;
    Signature top;                 // meaningful when valid
    std::vector<Signature> stages; // signature before slice k, plus the final one
    int max_width = 0;
    std::string diagram_class;     // "(1,1)", "(2,2)" or "other"
};

/// Slice-by-slice strand and orientation consistency check.
ValidationReport validate(const Diagram& d);

/// Parses the line-oriented tangle DSL; throws ParseError with position info.
Diagram parse(const std::string& text);

/// Canonical text form; parse(serialize(d)) == d.
std::string serialize(const Diagram& d);

/// Built-in diagrams: unknot, unknot_twisted, trefoil, figure_eight.
Diagram builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

/// Number of encoded variants of a Turaev move (1..7).
int turaev_variant_count(int move);

/**
 * A pair of diagrams related by one of the seven Turaev moves; the tangle
 * functor must assign them equal operators. Variants enumerate orientations
 * and handedness.
 */
std::pair<Diagram, Diagram> turaev_pair(int move, int variant);

} // namespace semicyclic
