#pragma once

#include <vector>

#include "hey/algebra.hpp"
#include "hey/poset.hpp"

namespace hey {

// All p-morphic image frames of f, up to isomorphism: every surjective
// p-morphism is the quotient by its kernel partition, so set partitions are
// enumerated exhaustively and checked.  Requires f.n <= 12.
std::vector<Poset> p_morphic_image_frames(const Poset& f, StepCounter& steps);

// Rooted up-closed subframes of p-morphic images of the dual frame of b:
// exactly the dual frames of the subdirectly irreducible members of the
// variety generated by b.
struct SiFrames {
  std::vector<Poset> frames;  // sorted by (size, fingerprint)
  int max_size = 0;
};
SiFrames si_frames(const HeytingAlgebra& b, StepCounter& steps);

// Universal frame on k colors for the variety described by si: greatest
// frame in which every point's rooted up-frame lies in si and points are
// distinguished by (cover antichain, color).  Its up-set algebra is the
// k-generated free algebra of the variety.
struct UniversalFrame {
  Poset frame;
  std::vector<uint8_t> colors;  // per point, subset of k generator marks
};
UniversalFrame universal_frame(const SiFrames& si, int k, int point_cap,
                               StepCounter& steps);

// Generator up-sets of the universal frame: mask of points whose color
// includes i.
std::vector<Mask> universal_generators(const UniversalFrame& u, int k);

}  // namespace hey
