#pragma once

#include "complexes.hpp"
#include "gf2.hpp"
#include "group.hpp"
#include "involutive.hpp"
#include "knots.hpp"
#include "laurent.hpp"
#include "local_maps.hpp"
#include "monomials.hpp"
#include "pipeline.hpp"
#include "reduce.hpp"
#include "serialize.hpp"
#include "standard.hpp"
#include "tower.hpp"
