#pragma once

#include "lensinv/error.hpp"
#include "lensinv/rational.hpp"
#include "lensinv/number_theory.hpp"
#include "lensinv/cyclotomic.hpp"
#include "lensinv/lens_invariants.hpp"
#include "lensinv/ohtsuki_series.hpp"
#include "lensinv/rt_oracle.hpp"
#include "lensinv/sweep.hpp"
