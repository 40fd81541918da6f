#pragma once

#include "warpdist/approx.hpp"
#include "warpdist/cost.hpp"
#include "warpdist/dtw.hpp"
#include "warpdist/dtw_approx.hpp"
#include "warpdist/edit_approx.hpp"
#include "warpdist/generate.hpp"
#include "warpdist/metric.hpp"
#include "warpdist/oracles.hpp"
#include "warpdist/random.hpp"
#include "warpdist/reductions.hpp"
#include "warpdist/runlen.hpp"
#include "warpdist/tree.hpp"
