/*
   Copyright 2026 The sternpoly authors

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

#include "stern/exact/gaussian.hpp"
#include "stern/exact/integer.hpp"
#include "stern/exact/laurent.hpp"
#include "stern/exact/polynomial.hpp"
#include "stern/exact/rational_function.hpp"
#include "stern/exact/series.hpp"
#include "stern/exact/series_f2.hpp"
