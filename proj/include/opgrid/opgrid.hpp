// Copyright 2026 The opgrid Authors
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

#include "opgrid/errors.hpp"
#include "opgrid/random.hpp"
#include "opgrid/report.hpp"
#include "opgrid/numlin/gaussian_rational.hpp"
#include "opgrid/numlin/dense.hpp"
#include "opgrid/numlin/spectral.hpp"
#include "opgrid/numlin/span.hpp"
#include "opgrid/triple/triple.hpp"
#include "opgrid/grids/grid.hpp"
#include "opgrid/grids/transforms.hpp"
#include "opgrid/hnk/combination.hpp"
#include "opgrid/hnk/realization.hpp"
#include "opgrid/hnk/space.hpp"
#include "opgrid/hnk/uij.hpp"
#include "opgrid/hnk/split.hpp"
#include "opgrid/opspace/opspace.hpp"
