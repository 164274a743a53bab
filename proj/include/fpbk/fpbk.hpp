#pragma once

#include "fpbk/basket.hpp"
#include "fpbk/bounds.hpp"
#include "fpbk/braid.hpp"
#include "fpbk/errors.hpp"
#include "fpbk/front.hpp"
#include "fpbk/grid.hpp"
#include "fpbk/hecke.hpp"
#include "fpbk/homfly.hpp"
#include "fpbk/laurent.hpp"
#include "fpbk/planar_diagram.hpp"
#include "fpbk/render.hpp"
#include "fpbk/verify.hpp"
