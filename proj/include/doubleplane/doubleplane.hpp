/*
   Copyright 2026 The doubleplane authors

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

#include "doubleplane/construct.hpp"
#include "doubleplane/field.hpp"
#include "doubleplane/graded.hpp"
#include "doubleplane/ideal.hpp"
#include "doubleplane/instance.hpp"
#include "doubleplane/matrix.hpp"
#include "doubleplane/monomial.hpp"
#include "doubleplane/normal_form.hpp"
#include "doubleplane/parse.hpp"
#include "doubleplane/pipeline.hpp"
#include "doubleplane/polynomial.hpp"
#include "doubleplane/random_instance.hpp"
#include "doubleplane/rao.hpp"
#include "doubleplane/report.hpp"
#include "doubleplane/resolution.hpp"
#include "doubleplane/rng.hpp"
#include "doubleplane/weights.hpp"
