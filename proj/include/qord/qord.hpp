// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file qord.hpp
 * @brief Umbrella header for the quasi-ordering toolkit.
 */

#include "qord/error.hpp"
#include "qord/ring.hpp"
#include "qord/ideal.hpp"
#include "qord/universe.hpp"
#include "qord/quasi_order.hpp"
#include "qord/catalog.hpp"
#include "qord/axioms.hpp"
#include "qord/value_table.hpp"
#include "qord/coarsening.hpp"
#include "qord/poset.hpp"
#include "qord/structure.hpp"
#include "qord/report.hpp"
#include "qord/dot.hpp"
#include "qord/acceptance.hpp"
