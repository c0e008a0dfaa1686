#pragma once

#include "rieszkit/analysis.hpp"
#include "rieszkit/coefficients.hpp"
#include "rieszkit/convergence.hpp"
#include "rieszkit/error.hpp"
#include "rieszkit/gamma.hpp"
#include "rieszkit/grid.hpp"
#include "rieszkit/problem.hpp"
#include "rieszkit/riesz.hpp"
#include "rieszkit/scheme.hpp"
#include "rieszkit/stability.hpp"
