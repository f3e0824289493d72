/*
   Copyright 2026 The mirrordim authors

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

#ifndef MIRRORDIM_MIRRORDIM_HPP
#define MIRRORDIM_MIRRORDIM_HPP

#include "mirrordim/cache.hpp"
#include "mirrordim/errors.hpp"
#include "mirrordim/groebner.hpp"
#include "mirrordim/group.hpp"
#include "mirrordim/hochschild.hpp"
#include "mirrordim/hodge.hpp"
#include "mirrordim/koszul.hpp"
#include "mirrordim/monomial.hpp"
#include "mirrordim/polynomial.hpp"
#include "mirrordim/rational.hpp"
#include "mirrordim/report.hpp"
#include "mirrordim/serialize.hpp"
#include "mirrordim/thimbles.hpp"

#endif
