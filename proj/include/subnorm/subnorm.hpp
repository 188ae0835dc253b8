/*
 * Copyright 2026 The subnorm-forge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "subnorm/rational.hpp"
#include "subnorm/interval_set.hpp"
#include "subnorm/monotone_fn.hpp"
#include "subnorm/decomposition.hpp"
#include "subnorm/value.hpp"
#include "subnorm/generator.hpp"
#include "subnorm/tnorm.hpp"
#include "subnorm/generated_op.hpp"
#include "subnorm/laws.hpp"
#include "subnorm/scan.hpp"
#include "subnorm/verdict.hpp"
#include "subnorm/classifier.hpp"
#include "subnorm/oracle.hpp"
#include "subnorm/report.hpp"
