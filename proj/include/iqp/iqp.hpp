// Copyright 2026 The iqp Authors
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

#include "iqp/audit.hpp"
#include "iqp/generator.hpp"
#include "iqp/hull.hpp"
#include "iqp/ilp.hpp"
#include "iqp/instance.hpp"
#include "iqp/io.hpp"
#include "iqp/linalg.hpp"
#include "iqp/lp.hpp"
#include "iqp/numeric.hpp"
#include "iqp/oracle.hpp"
#include "iqp/reductions.hpp"
#include "iqp/result.hpp"
#include "iqp/solver.hpp"
#include "iqp/verify.hpp"
