#pragma once
/// @file o2power.hpp
/// Umbrella header.

#include "o2power/error.hpp"
#include "o2power/ring.hpp"
#include "o2power/poly.hpp"
#include "o2power/kfactor.hpp"
#include "o2power/hensel.hpp"
#include "o2power/counting.hpp"
#include "o2power/matrix.hpp"
#include "o2power/linalg.hpp"
#include "o2power/classify.hpp"
#include "o2power/power.hpp"
#include "o2power/series.hpp"
#include "o2power/oracle.hpp"
