/*
 * Copyright 2026  The covplan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License
*/

#pragma once

#include "covplan/bench.hpp"
#include "covplan/curve.hpp"
#include "covplan/dubins.hpp"
#include "covplan/error.hpp"
#include "covplan/geometry.hpp"
#include "covplan/headland.hpp"
#include "covplan/io.hpp"
#include "covplan/path.hpp"
#include "covplan/pipeline.hpp"
#include "covplan/reeds_shepp.hpp"
#include "covplan/route.hpp"
#include "covplan/swath.hpp"
