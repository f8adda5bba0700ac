// Copyright 2026 The entwit authors. All Rights Reserved.
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

#ifndef ENTWIT_ENTWIT_HPP
#define ENTWIT_ENTWIT_HPP

#include "entwit/accessor.hpp"
#include "entwit/common.hpp"
#include "entwit/criteria.hpp"
#include "entwit/hilbert.hpp"
#include "entwit/io.hpp"
#include "entwit/linalg.hpp"
#include "entwit/measurements.hpp"
#include "entwit/random.hpp"
#include "entwit/rational.hpp"
#include "entwit/states.hpp"
#include "entwit/thresholds.hpp"

#endif
