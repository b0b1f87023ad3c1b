#pragma once

#include "papnlab/differential.hpp"
#include "papnlab/exact.hpp"
#include "papnlab/expr.hpp"
#include "papnlab/families.hpp"
#include "papnlab/gf2n.hpp"
#include "papnlab/identities.hpp"
#include "papnlab/parallel.hpp"
#include "papnlab/random.hpp"
#include "papnlab/search.hpp"
#include "papnlab/spectral.hpp"
#include "papnlab/vbf.hpp"
