#pragma once

#include "alcove.hpp"
#include "blocked_off.hpp"
#include "fill_maps.hpp"
#include "inverse_maps.hpp"
#include "io.hpp"
#include "kn_columns.hpp"
#include "qbg.hpp"
#include "weyl.hpp"
