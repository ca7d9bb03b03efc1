#pragma once

#include "stabinterp/error.hpp"
#include "stabinterp/scalar.hpp"
#include "stabinterp/wide.hpp"
#include "stabinterp/problem.hpp"
#include "stabinterp/oracle.hpp"
#include "stabinterp/algorithm1.hpp"
#include "stabinterp/algorithm2.hpp"
#include "stabinterp/newton.hpp"
#include "stabinterp/ordering.hpp"
#include "stabinterp/analysis.hpp"
#include "stabinterp/knots.hpp"
#include "stabinterp/io.hpp"
#include "stabinterp/experiment.hpp"
