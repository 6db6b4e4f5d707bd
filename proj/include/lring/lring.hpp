#pragma once

// Umbrella header for the whole library.

#include "lring/bigint.hpp"
#include "lring/errors.hpp"
#include "lring/intpoly.hpp"
#include "lring/lambda.hpp"
#include "lring/lambda_module.hpp"
#include "lring/report.hpp"
#include "lring/suites.hpp"
#include "lring/symfun.hpp"
#include "lring/universal.hpp"
