// Copyright 2026 The kpgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPGRAPH_KPGRAPH_HPP
#define KPGRAPH_KPGRAPH_HPP

#include "kpgraph/bounds.hpp"
#include "kpgraph/config.hpp"
#include "kpgraph/connectivity.hpp"
#include "kpgraph/constructions.hpp"
#include "kpgraph/deployment.hpp"
#include "kpgraph/experiment.hpp"
#include "kpgraph/graph.hpp"
#include "kpgraph/keying.hpp"
#include "kpgraph/rng.hpp"

#endif  // KPGRAPH_KPGRAPH_HPP
