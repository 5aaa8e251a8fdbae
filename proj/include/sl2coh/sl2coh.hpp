#pragma once

#include "sl2coh/abelian.hpp"
#include "sl2coh/checked.hpp"
#include "sl2coh/cohomology_tables.hpp"
#include "sl2coh/coset_engine.hpp"
#include "sl2coh/errors.hpp"
#include "sl2coh/fp_core.hpp"
#include "sl2coh/rational.hpp"
#include "sl2coh/render.hpp"
#include "sl2coh/verify.hpp"
