// Copyright 2026 The Setfn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "setfn/check.hpp"
#include "setfn/construct.hpp"
#include "setfn/graph.hpp"
#include "setfn/ground_set.hpp"
#include "setfn/identities.hpp"
#include "setfn/io.hpp"
#include "setfn/random.hpp"
#include "setfn/rational.hpp"
#include "setfn/set_function.hpp"
#include "setfn/transform.hpp"
