/* pblin: pseudo-Boolean linearization toolkit
 * Copyright (C) 2026 the pblin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "boolean_fn.hpp"
#include "certificate.hpp"
#include "errors.hpp"
#include "formulations.hpp"
#include "labs.hpp"
#include "lc_search.hpp"
#include "linsolve.hpp"
#include "lp_writer.hpp"
#include "milp.hpp"
#include "multilinear.hpp"
#include "partial_sums.hpp"
#include "point.hpp"
#include "rational.hpp"
#include "signed_product.hpp"
#include "solver_bridge.hpp"
