//  Copyright 2026 The spclat authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

// Umbrella header: the whole lattice-level spectrum toolkit.

#include "spclat/balmer.hpp"
#include "spclat/bitset.hpp"
#include "spclat/dlat.hpp"
#include "spclat/dot.hpp"
#include "spclat/enumerate.hpp"
#include "spclat/error.hpp"
#include "spclat/json_io.hpp"
#include "spclat/oag.hpp"
#include "spclat/oracle.hpp"
#include "spclat/poset.hpp"
#include "spclat/semilattice.hpp"
#include "spclat/spectral.hpp"
