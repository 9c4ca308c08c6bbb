#pragma once

#include "knots/pd_code.hpp"

#include <optional>
#include <vector>

namespace knots {

// One crossing of an oriented diagram.  Together with the sign this pins
// the local planar picture: the counterclockwise order of the four ends is
//   sign -1: (under_in, over_in,  under_out, over_out)
//   sign +1: (under_in, over_out, under_out, over_in)
struct Crossing {
    int under_in = 0;
    int over_in = 0;
    int under_out = 0;
    int over_out = 0;
    int sign = 0;  // +1 or -1

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Oriented knot/link diagram.  Arcs are arbitrary positive integer ids;
// surgeries return new values and may retire or invent ids.
class Diagram {
public:
    Diagram() = default;

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int num_crossings() const { return static_cast<int>(crossings_.size()); }
    int free_loops() const { return free_loops_; }

    int writhe() const {
        int w = 0;
        for (auto& c : crossings_) w += c.sign;
        return w;
    }

    // Arc ids in increasing order.
    std::vector<int> arcs() const;

    // Oriented strand cycles (each a vector of arc ids in traversal order);
    // crossing-free circles are counted separately by free_loops().
    std::vector<std::vector<int>> strand_components() const;
    int num_components() const {
        return static_cast<int>(strand_components().size()) + free_loops_;
    }
    bool is_knot() const { return num_components() == 1; }

    // Total genus of the embedded surface induced by the crossing rotations;
    // 0 exactly when the diagram is planar as drawn.
    int embedding_genus() const;

    // Number of cycles after the orientation-respecting smoothing of every
    // crossing (includes free loops).
    int seifert_circle_count() const;
    // Genus of the canonical Seifert surface, (crossings - circles + 1)/2.
    // Knot diagrams only.
    int canonical_seifert_genus() const;

    // PD tuples with the current arc ids, in stored crossing order.
    PdCode to_pd() const;
    // Relabeled to the 1..2n convention; deterministic in the stored order.
    PdCode renumbered_pd() const;
    // Lexicographically minimal renumbering over all traversal starts;
    // equal canonical codes identify equal diagrams up to relabeling.
    PdCode canonical_pd() const;

    // --- surgeries (pure; arguments validated, std::out_of_range /
    // std::invalid_argument on bad input) ---

    Diagram crossing_change(int i) const;
    Diagram mirrored() const;
    Diagram smooth_oriented(int i) const;

    // Splice two knots together along the given arcs.
    friend Diagram connected_sum(const Diagram& d1, int arc1, const Diagram& d2,
                                 int arc2);

    // Construction helpers used by orient(), move insertion and the family
    // generator.  next_arc_id() is strictly larger than every id in use.
    int next_arc_id() const;
    void add_crossing(const Crossing& c) { crossings_.push_back(c); }
    void add_free_loop() { ++free_loops_; }
    // Re-point the incoming end of arc `old_arc` at arc `new_arc`.
    void replace_head(int old_arc, int new_arc);

private:
    friend Diagram orient(const PdCode& pd);

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
};

// Infer orientations, crossing signs and components from a valid PdCode.
Diagram orient(const PdCode& pd);

// A two-strand twist site: the ordered pair of arcs where half twists are
// spliced in.  Both arcs must head into the region through a common face.
struct TwistSite {
    int arc_first = 0;   // strand that crosses over in a positive ladder
    int arc_second = 0;

    friend bool operator==(const TwistSite&, const TwistSite&) = default;
};

// Insert |k| half twists between the site strands.  With coherently
// oriented strands (antiparallel = false) the region is a 2-braid ladder:
// the leading strand alternates crossing by crossing.  With antiparallel
// strands the same strand leads at every crossing and the second strand
// threads the region in reverse (a clasp chain).  k > 0: the first site
// strand passes over in the leading crossing; k < 0 the second.  k = 0
// returns the diagram unchanged.  The inserted crossings' signs are
// forced_sign when nonzero (throwing if that embedding is not planar),
// else resolved by trying +1 then -1.
Diagram insert_twists(const Diagram& d, const TwistSite& site, int k,
                      int forced_sign = 0, bool antiparallel = false);

}  // namespace knots
