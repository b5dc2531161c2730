#pragma once

#include "affcrystal/partition.hpp"
#include "affcrystal/abacus.hpp"
#include "affcrystal/crystal.hpp"
#include "affcrystal/cylindric.hpp"
#include "affcrystal/kyoto.hpp"
#include "affcrystal/qseries.hpp"
#include "affcrystal/io.hpp"
