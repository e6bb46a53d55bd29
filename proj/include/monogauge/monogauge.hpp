/*
   Copyright 2026 The Monogauge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/** @file monogauge.hpp
 *  @brief Umbrella header: the whole library in one include.
 */

#ifndef MONOGAUGE_MONOGAUGE_HPP
#define MONOGAUGE_MONOGAUGE_HPP

#include "arrangement.hpp"
#include "assembly.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "eval_oracle.hpp"
#include "factored_poly.hpp"
#include "parallel.hpp"
#include "profile.hpp"
#include "rational.hpp"
#include "selftest.hpp"
#include "unipoly.hpp"
#include "vanishing.hpp"
#include "wh_local.hpp"

#endif
