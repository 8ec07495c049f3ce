/*
   Copyright 2026 The qlie authors

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

#pragma once

#include "qlie/base.hpp"
#include "qlie/field.hpp"
#include "qlie/freealg.hpp"
#include "qlie/linalg.hpp"
#include "qlie/ops.hpp"
#include "qlie/pairing.hpp"
#include "qlie/perm.hpp"
#include "qlie/presets.hpp"
#include "qlie/primcheck.hpp"
