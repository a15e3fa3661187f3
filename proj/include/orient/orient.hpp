#pragma once

#include "orient/algorithms.hpp"
#include "orient/common.hpp"
#include "orient/evaluate.hpp"
#include "orient/exact.hpp"
#include "orient/flow.hpp"
#include "orient/generalized.hpp"
#include "orient/generators.hpp"
#include "orient/io.hpp"
#include "orient/mandatory.hpp"
#include "orient/model.hpp"
#include "orient/vcover.hpp"
