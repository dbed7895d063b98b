// Copyright 2026 The primdeg Authors
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

#ifndef PRIMDEG_PRIMDEG_HPP
#define PRIMDEG_PRIMDEG_HPP

#include "primdeg/digraph.hpp"
#include "primdeg/engine.hpp"
#include "primdeg/generators.hpp"
#include "primdeg/oracle.hpp"
#include "primdeg/pattern.hpp"
#include "primdeg/precheck.hpp"
#include "primdeg/tensor.hpp"
#include "primdeg/tns_io.hpp"

#endif // PRIMDEG_PRIMDEG_HPP
