#pragma once

// A hand-built fragment of the segment/role type system for core tests that
// should not depend on the phonology configuration.

#include "phonogest/feature_term.hpp"
#include "phonogest/term_parser.hpp"
#include "phonogest/type_lattice.hpp"

namespace mini {

inline phonogest::TypeLattice lattice() {
  phonogest::TypeLattice lat;
  for (const char* a : {"pure_onset", "nucleus", "pure_coda", "codaonset", "vowel", "sonorant",
                        "supralaryngeal_obstruent", "voiceless", "inactive"})
    lat.add_atom(a);
  lat.define("in_onset", {"pure_onset", "codaonset"});
  lat.define("coda", {"pure_coda"});
  lat.define("rhyme", {"nucleus", "pure_coda"});
  lat.define("obstruent", {"supralaryngeal_obstruent"});
  lat.define("laryngeal", {"voiceless", "inactive"});
  return lat;
}

inline phonogest::FeatureTerm final_devoicing() {
  return phonogest::parse_term(
      "self:(seg: ~obstruent ; seg:obstruent & (~coda ; coda & seg:secondary:voiceless))");
}

inline phonogest::FeatureTerm voiced_in_onset() {
  return phonogest::parse_term("self:(~in_onset ; in_onset & seg:secondary:inactive)");
}

}  // namespace mini
