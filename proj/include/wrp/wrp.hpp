// Copyright 2026 The wrp-srg Authors.
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

// Umbrella header.

#ifndef WRP_WRP_HPP_
#define WRP_WRP_HPP_

#include "wrp/catalog.hpp"
#include "wrp/cyclo.hpp"
#include "wrp/error.hpp"
#include "wrp/field.hpp"
#include "wrp/group_ring.hpp"
#include "wrp/identities.hpp"
#include "wrp/json.hpp"
#include "wrp/numtheory.hpp"
#include "wrp/parallel.hpp"
#include "wrp/pds.hpp"
#include "wrp/pfun.hpp"
#include "wrp/plateau.hpp"
#include "wrp/scheme.hpp"

#endif  // WRP_WRP_HPP_
