#pragma once

/// Umbrella header: exact-arithmetic invariants of co-Kahler mapping tori
/// T^{2n}_A built from a finite-order integer matrix A.

#include "cokahler/charpoly.hpp"
#include "cokahler/corpus.hpp"
#include "cokahler/cyclotomic.hpp"
#include "cokahler/errors.hpp"
#include "cokahler/exterior.hpp"
#include "cokahler/group_action.hpp"
#include "cokahler/induced.hpp"
#include "cokahler/input.hpp"
#include "cokahler/kahler.hpp"
#include "cokahler/lefschetz.hpp"
#include "cokahler/linalg.hpp"
#include "cokahler/mapping_torus.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/multi_index.hpp"
#include "cokahler/numeric.hpp"
#include "cokahler/order.hpp"
#include "cokahler/pi1.hpp"
#include "cokahler/report.hpp"
#include "cokahler/smith.hpp"
