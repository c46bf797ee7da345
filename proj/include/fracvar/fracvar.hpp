// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_FRACVAR_HPP
#define FRACVAR_FRACVAR_HPP

#include "fracvar/assemble.hpp"
#include "fracvar/benchmark.hpp"
#include "fracvar/config.hpp"
#include "fracvar/errors.hpp"
#include "fracvar/expr.hpp"
#include "fracvar/fracnum.hpp"
#include "fracvar/mesh.hpp"
#include "fracvar/model.hpp"
#include "fracvar/report.hpp"
#include "fracvar/solve.hpp"
#include "fracvar/special.hpp"

#endif // FRACVAR_FRACVAR_HPP
