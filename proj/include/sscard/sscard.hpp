// Copyright 2026 The sscard Authors.
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

#ifndef SSCARD_SSCARD_HPP_
#define SSCARD_SSCARD_HPP_

#include "sscard/core_model.hpp"
#include "sscard/estimation.hpp"
#include "sscard/params.hpp"
#include "sscard/sampling.hpp"
#include "sscard/sim_harness.hpp"
#include "sscard/tail_asymptotics.hpp"
#include "sscard/trig_moments.hpp"

#endif  // SSCARD_SSCARD_HPP_
