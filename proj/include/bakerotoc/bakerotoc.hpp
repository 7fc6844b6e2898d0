#pragma once

#include "bakerotoc/analytics.hpp"
#include "bakerotoc/classical.hpp"
#include "bakerotoc/experiments.hpp"
#include "bakerotoc/matrix.hpp"
#include "bakerotoc/otoc.hpp"
#include "bakerotoc/quantum.hpp"
