#pragma once

#include "bentkit/boolfn.hpp"
#include "bentkit/constructions.hpp"
#include "bentkit/error.hpp"
#include "bentkit/gf2m.hpp"
#include "bentkit/spectrum.hpp"
#include "bentkit/tracerep.hpp"
#include "bentkit/tvr.hpp"
