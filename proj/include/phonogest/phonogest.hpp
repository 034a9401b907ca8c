#pragma once

#include "phonogest/affine_store.hpp"
#include "phonogest/dynamics.hpp"
#include "phonogest/feature_term.hpp"
#include "phonogest/phonology.hpp"
#include "phonogest/score_io.hpp"
#include "phonogest/solver.hpp"
#include "phonogest/term_parser.hpp"
#include "phonogest/timing.hpp"
#include "phonogest/type_lattice.hpp"
#include "phonogest/word.hpp"
