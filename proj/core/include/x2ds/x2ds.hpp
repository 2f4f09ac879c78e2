// Copyright 2026 The x2ds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "x2ds/bit_string.hpp"
#include "x2ds/codec.hpp"
#include "x2ds/errors.hpp"
#include "x2ds/netsim.hpp"
#include "x2ds/position.hpp"
#include "x2ds/privacy_audit.hpp"
#include "x2ds/randomness.hpp"
#include "x2ds/selftest.hpp"
#include "x2ds/share_container.hpp"
