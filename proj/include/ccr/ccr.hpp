// Copyright 2026 The ccr-lab Authors
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

#include "ccr/complementarity.hpp"
#include "ccr/error.hpp"
#include "ccr/gellmann.hpp"
#include "ccr/io.hpp"
#include "ccr/linalg.hpp"
#include "ccr/props.hpp"
#include "ccr/states.hpp"
#include "ccr/sweep.hpp"
#include "ccr/uncertainty.hpp"
